#include "freecoset/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "freecoset/double_coset.hpp"
#include "freecoset/errors.hpp"
#include "freecoset/json_io.hpp"
#include "freecoset/rep_engine.hpp"
#include "freecoset/verify.hpp"

namespace freecoset::cli {

namespace {

using json::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool text = false;
  std::uint64_t max_points = 0;
  std::string kernel = "auto";
};

// `-` reads stdin, text starting with '{' or '[' is inline JSON, anything
// else is a file path.
std::string read_source(const std::string& src, std::istream& in) {
  if (src == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  auto first = src.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (src[first] == '{' || src[first] == '[')) return src;
  std::ifstream file(src);
  if (!file) throw UsageError("cannot open '" + src + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Automorphism load_automorphism(const std::string& src, std::istream& in) {
  return json::automorphism_from_json(json::parse(read_source(src, in)));
}

std::string render_images(const ImageMap& images) {
  if (images.empty()) return "  identity\n";
  std::ostringstream os;
  for (const auto& [g, w] : images) os << "  x" << g << " -> " << format_word(w) << '\n';
  return os.str();
}

std::string render_automorphism(const Automorphism& a) {
  return "images:\n" + render_images(a.fwd().images()) + "inverse_images:\n" + render_images(a.inv().images());
}

std::string render_matrix(const RationalMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, m(r, c).str().size());
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).str();
      if (c) os << "  ";
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

EngineOptions engine_options(const Globals& g) {
  EngineOptions opts;
  opts.isa = kernels::parse_isa(g.kernel);
  if (g.max_points) {
    opts.max_points = g.max_points;
  } else if (const char* env = std::getenv("COSET_MAX_POINTS"); env && *env) {
    try {
      opts.max_points = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("COSET_MAX_POINTS must be a positive integer");
    }
  }
  return opts;
}

Subgroup parse_subgroup(const FiniteGroup& k, const std::string& text) {
  if (text == "all") return Subgroup::whole(k);
  if (text == "trivial") return Subgroup::trivial(k);
  std::vector<Element> members;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      members.push_back(static_cast<Element>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw UsageError("subgroup element '" + tok + "' is not an index");
    }
  }
  return Subgroup(k, std::move(members));
}

void emit_coset(std::ostream& out, const Globals& g, GenIndex m, GenIndex N, const Automorphism& rep,
                const Json& doc) {
  if (g.text)
    out << "m = " << m << ", N = " << N << '\n' << render_automorphism(rep);
  else
    out << doc.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Double-coset products of free-group automorphisms and their Markov operators", "freecoset"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_flag("--text", globals.text, "Human-readable output instead of JSON");
  app.add_option("--max-points", globals.max_points, "Limit on enumerated points of K^N (env COSET_MAX_POINTS)");
  app.add_option("--kernel", globals.kernel, "Word evaluation kernel: auto, scalar or avx2");

  std::string word_text;
  auto* reduce_cmd = app.add_subcommand("reduce", "Freely reduce a word");
  reduce_cmd->add_option("word", word_text, "Word such as \"x1 x2^-1\", or - for stdin")->required();

  std::vector<std::string> compose_inputs;
  auto* compose_cmd = app.add_subcommand("compose", "Compose automorphisms; A B applies B first");
  compose_cmd->add_option("automorphisms", compose_inputs, "Automorphism JSON sources")->required();

  std::string invert_input;
  auto* invert_cmd = app.add_subcommand("invert", "Invert an automorphism");
  invert_cmd->add_option("automorphism", invert_input, "Automorphism JSON source")->required();

  GenIndex m = 0;
  std::string g_src, h_src;
  auto* coset_cmd = app.add_subcommand("coset-product", "Product in H\\G/H");
  auto* star_cmd = app.add_subcommand("star-product", "Product in G//H");
  for (auto* cmd : {coset_cmd, star_cmd}) {
    cmd->add_option("--m", m, "Number of fixed generators")->required();
    cmd->add_option("--g", g_src, "Left factor")->required();
    cmd->add_option("--h", h_src, "Right factor")->required();
  }

  std::vector<std::string> gs_src, hs_src;
  auto* tuple_cmd = app.add_subcommand("tuple-product", "Product in H\\G^k/H");
  tuple_cmd->add_option("--m", m, "Number of fixed generators")->required();
  tuple_cmd->add_option("--g", gs_src, "Left tuple entries, repeated")->required();
  tuple_cmd->add_option("--h", hs_src, "Right tuple entries, repeated")->required();

  std::string group_name, group_file, subgroup_text;
  GenIndex explicit_N = 0;
  auto* rep_cmd = app.add_subcommand("rep-matrix", "Exact Markov operator P T(g) on L^2(K^m)");
  auto* group_opt = rep_cmd->add_option("--group", group_name, "c<n>, s3, d8 or q8");
  rep_cmd->add_option("--group-file", group_file, "Group table JSON source")->excludes(group_opt);
  rep_cmd->add_option("--m", m, "Number of fixed generators")->required();
  rep_cmd->add_option("--g", g_src, "Automorphism")->required();
  rep_cmd->add_option("--N", explicit_N, "Truncation (default max(support, m))");
  rep_cmd->add_option("--subgroup", subgroup_text, "U for conjugation compression: all, trivial or \"i j ...\"");

  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run randomized self-check suites");
  verify_cmd->add_option("--suite", suite, "words, automorphisms, cosets, representation or all")
      ->check(CLI::IsMember({"words", "automorphisms", "cosets", "representation", "all"}));
  verify_cmd->add_option("--seed", seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const EngineOptions opts = engine_options(globals);

    if (*reduce_cmd) {
      const Word w = parse_word(word_text == "-" ? read_source("-", in) : word_text);
      if (globals.text)
        out << format_word(w) << '\n';
      else
        out << Json(format_word(w)).dump() << '\n';
    } else if (*compose_cmd) {
      Automorphism acc;
      for (const auto& src : compose_inputs) acc = compose(acc, load_automorphism(src, in));
      if (globals.text)
        out << render_automorphism(acc);
      else
        out << json::automorphism_to_json(acc).dump() << '\n';
    } else if (*invert_cmd) {
      const Automorphism a = invert(load_automorphism(invert_input, in));
      if (globals.text)
        out << render_automorphism(a);
      else
        out << json::automorphism_to_json(a).dump() << '\n';
    } else if (*coset_cmd) {
      const DoubleCosetRep c = coset_product(m, load_automorphism(g_src, in), load_automorphism(h_src, in));
      emit_coset(out, globals, c.m, c.N, c.rep, json::coset_to_json(c));
    } else if (*star_cmd) {
      const ConjClassRep c = star_product(m, load_automorphism(g_src, in), load_automorphism(h_src, in));
      emit_coset(out, globals, c.m, c.N, c.rep, json::conj_class_to_json(c));
    } else if (*tuple_cmd) {
      std::vector<Automorphism> gs, hs;
      for (const auto& s : gs_src) gs.push_back(load_automorphism(s, in));
      for (const auto& s : hs_src) hs.push_back(load_automorphism(s, in));
      const TupleRep t = tuple_product(m, gs, hs);
      if (globals.text) {
        out << "m = " << t.m << ", N = " << t.N << '\n';
        for (std::size_t i = 0; i < t.reps.size(); ++i) out << "component " << i + 1 << '\n' << render_automorphism(t.reps[i]);
      } else {
        out << json::tuple_to_json(t).dump() << '\n';
      }
    } else if (*rep_cmd) {
      if (group_name.empty() && group_file.empty()) throw UsageError("rep-matrix needs --group or --group-file");
      const FiniteGroup k =
          group_file.empty() ? builtin_group(group_name) : json::group_from_json(json::parse(read_source(group_file, in)));
      const Automorphism g = load_automorphism(g_src, in);
      const GenIndex N = explicit_N ? explicit_N : std::max(g.support_bound(), m);
      const RationalMatrix M = markov_matrix_at(k, g, m, N, opts);

      Json doc = Json::object();
      doc["group"] = group_file.empty() ? group_name : k.name();
      doc["m"] = m;
      doc["N"] = N;
      doc["matrix"] = json::matrix_to_json(M);
      std::string text = "group " + std::string(doc["group"]) + ", m = " + std::to_string(m) +
                         ", N = " + std::to_string(N) + '\n' + render_matrix(M);
      if (!subgroup_text.empty()) {
        const Subgroup u = parse_subgroup(k, subgroup_text);
        const OrbitDecomposition orbits = conjugation_orbits(k, u, m);
        const RationalMatrix C = compress_to_invariants(k, u, m, M);
        doc["orbits"] = orbits.orbits;
        doc["compressed"] = json::matrix_to_json(C);
        text += "compressed to " + std::to_string(C.rows()) + " orbits\n" + render_matrix(C);
      }
      if (globals.text)
        out << text;
      else
        out << doc.dump() << '\n';
    } else if (*verify_cmd) {
      const SuiteReport report = run_suite(suite, seed, opts);
      if (globals.text) {
        for (const auto& c : report.checks) {
          out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases - c.failures << "/" << c.cases << ")";
          if (!c.passed()) out << " first failure: " << c.first_failure;
          out << '\n';
        }
        out << "suite " << report.suite << " seed " << report.seed << ": " << (report.passed() ? "PASS" : "FAIL")
            << '\n';
      } else {
        Json doc = Json::object();
        doc["suite"] = report.suite;
        doc["seed"] = report.seed;
        doc["passed"] = report.passed();
        doc["checks"] = Json::array();
        for (const auto& c : report.checks) {
          Json item = Json::object();
          item["name"] = c.name;
          item["cases"] = c.cases;
          item["failures"] = c.failures;
          if (!c.passed()) item["first_failure"] = c.first_failure;
          doc["checks"].push_back(std::move(item));
        }
        out << doc.dump() << '\n';
      }
      return report.passed() ? kExitOk : kExitDomain;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON document: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace freecoset::cli
