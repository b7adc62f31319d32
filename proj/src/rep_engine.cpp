#include "freecoset/rep_engine.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <thread>

#include "freecoset/double_coset.hpp"
#include "freecoset/errors.hpp"

namespace freecoset {

namespace {

constexpr std::size_t kBatch = 512;
constexpr std::uint64_t kParallelThreshold = 1u << 16;

void require_points(std::uint64_t points, const EngineOptions& opts) {
  if (points > opts.max_points)
    throw SizeError("enumeration of " + std::to_string(points) + " points exceeds the limit of " +
                    std::to_string(opts.max_points) + " (raise --max-points)");
}

std::uint64_t point_count(const FiniteGroup& k, GenIndex dims) { return checked_power(k.order(), dims); }

unsigned thread_count(const EngineOptions& opts, std::uint64_t total) {
  if (total < kParallelThreshold) return 1;
  unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, total / kBatch + 1));
}

// Splits [0, total) into `chunks` contiguous ranges, runs body(chunk, begin,
// end) on each, one thread per chunk.
template <class Body>
void parallel_chunks(std::uint64_t total, unsigned chunks, Body&& body) {
  if (chunks <= 1) {
    body(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (unsigned c = 0; c < chunks; ++c) {
    std::uint64_t begin = total * c / chunks;
    std::uint64_t end = total * (c + 1) / chunks;
    workers.emplace_back([&body, c, begin, end] { body(c, begin, end); });
  }
}

// Evaluates `program` at points [begin, end) of K^dims in batches and hands
// each batch to sink(first_point, count, outputs).
template <class Sink>
void sweep(const kernels::GroupTable& table, const kernels::WordProgram& program, kernels::EvalBatchFn fn,
           std::uint64_t begin, std::uint64_t end, Sink&& sink) {
  const std::uint32_t dims = program.dims;
  const auto radix = static_cast<std::int32_t>(table.order);
  std::vector<std::int32_t> coords(std::size_t{dims} * kBatch);
  std::vector<std::int32_t> out(std::max<std::size_t>(program.words(), 1) * kBatch);
  std::vector<std::int32_t> digits(dims);

  std::uint64_t rest = begin;
  for (std::uint32_t i = dims; i-- > 0;) {
    digits[i] = static_cast<std::int32_t>(rest % static_cast<std::uint64_t>(radix));
    rest /= static_cast<std::uint64_t>(radix);
  }

  for (std::uint64_t first = begin; first < end;) {
    const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, end - first));
    for (std::size_t lane = 0; lane < count; ++lane) {
      for (std::uint32_t c = 0; c < dims; ++c) coords[c * count + lane] = digits[c];
      for (std::uint32_t i = dims; i-- > 0;) {
        if (++digits[i] < radix) break;
        digits[i] = 0;
      }
    }
    fn(table, program, coords.data(), count, out.data());
    sink(first, count, static_cast<const std::int32_t*>(out.data()));
    first += count;
  }
}

std::vector<Word> images_of_first(const Automorphism& a, GenIndex count) {
  std::vector<Word> words;
  words.reserve(count);
  for (GenIndex i = 1; i <= count; ++i) words.push_back(a.image(i));
  return words;
}

}  // namespace

Element eval_word(const FiniteGroup& k, const Word& w, std::span<const Element> point) {
  Element acc = k.unit();
  for (Letter l : w) {
    if (l.gen > point.size())
      throw DomainError("x" + std::to_string(l.gen) + " is outside a point of length " + std::to_string(point.size()));
    Element e = point[l.gen - 1];
    acc = k.mul(acc, l.sign == Sign::Plus ? e : k.inv(e));
  }
  return acc;
}

std::vector<std::uint64_t> action_map(const FiniteGroup& k, const Automorphism& g, GenIndex N,
                                      const EngineOptions& opts) {
  if (g.support_bound() > N)
    throw DomainError("automorphism moves generators above N=" + std::to_string(N));
  const std::uint64_t total = point_count(k, N);
  require_points(total, opts);

  const kernels::GroupTable table(k);
  const std::vector<Word> words = images_of_first(g, N);
  const kernels::WordProgram program(words, N);
  const auto fn = kernels::select(opts.isa);
  const std::uint64_t radix = k.order();

  std::vector<std::uint64_t> image(total);
  parallel_chunks(total, thread_count(opts, total), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    sweep(table, program, fn, begin, end, [&](std::uint64_t first, std::size_t count, const std::int32_t* out) {
      for (std::size_t lane = 0; lane < count; ++lane) {
        std::uint64_t idx = 0;
        for (GenIndex w = 0; w < N; ++w) idx = idx * radix + static_cast<std::uint64_t>(out[w * count + lane]);
        image[first + lane] = idx;
      }
    });
  });

  std::vector<bool> seen(total, false);
  for (std::uint64_t t : image) {
    if (seen[t]) throw DomainError("action map is not a bijection");
    seen[t] = true;
  }
  return image;
}

RationalMatrix projection_P(const FiniteGroup& k, GenIndex m, GenIndex N, const EngineOptions& opts) {
  if (m > N) throw DomainError("projection needs m <= N");
  const std::uint64_t dim = point_count(k, N);
  require_points(dim > opts.max_points ? dim : dim * dim, opts);
  const std::uint64_t block = point_count(k, N - m);
  const Rational weight = Rational::from_counts(1, block);
  RationalMatrix P(dim, dim);
  for (std::uint64_t r = 0; r < dim; ++r)
    for (std::uint64_t c = 0; c < dim; ++c)
      if (r / block == c / block) P(r, c) = weight;
  return P;
}

RationalMatrix markov_matrix(const FiniteGroup& k, const Automorphism& g, GenIndex m, const EngineOptions& opts) {
  return markov_matrix_at(k, g, m, std::max(g.support_bound(), m), opts);
}

RationalMatrix markov_matrix_at(const FiniteGroup& k, const Automorphism& g, GenIndex m, GenIndex N,
                                const EngineOptions& opts) {
  if (N < std::max(g.support_bound(), m))
    throw DomainError("N=" + std::to_string(N) + " is below max(support_bound, m)");
  const std::uint64_t total = point_count(k, N);
  require_points(total, opts);

  const std::uint64_t dim = point_count(k, m);
  const std::uint64_t fiber = point_count(k, N - m);
  const std::uint64_t radix = k.order();

  const kernels::GroupTable table(k);
  const std::vector<Word> words = images_of_first(g, m);
  const kernels::WordProgram program(words, N);
  const auto fn = kernels::select(opts.isa);

  const unsigned chunks = thread_count(opts, total);
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(dim * dim, 0));
  parallel_chunks(total, chunks, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    auto& counts = partial[chunk];
    sweep(table, program, fn, begin, end, [&](std::uint64_t first, std::size_t count, const std::int32_t* out) {
      for (std::size_t lane = 0; lane < count; ++lane) {
        std::uint64_t col = 0;
        for (GenIndex w = 0; w < m; ++w) col = col * radix + static_cast<std::uint64_t>(out[w * count + lane]);
        ++counts[((first + lane) / fiber) * dim + col];
      }
    });
  });

  RationalMatrix M(dim, dim);
  for (std::uint64_t cell = 0; cell < dim * dim; ++cell) {
    std::uint64_t c = 0;
    for (const auto& counts : partial) c += counts[cell];
    if (c) M(cell / dim, cell % dim) = Rational::from_counts(c, fiber);
  }
  return M;
}

OrbitDecomposition conjugation_orbits(const FiniteGroup& k, const Subgroup& u, GenIndex m) {
  const TupleIndex index(k.order(), m);
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  OrbitDecomposition out;
  out.orbit_of.assign(index.size(), kUnassigned);
  std::vector<Element> point(m);
  for (std::uint64_t start = 0; start < index.size(); ++start) {
    if (out.orbit_of[start] != kUnassigned) continue;
    const std::size_t id = out.orbits.size();
    std::vector<std::uint64_t> members;
    index.decode_into(start, point);
    for (Element g : u.members()) {
      std::vector<Element> moved(m);
      for (GenIndex i = 0; i < m; ++i) moved[i] = k.conj(g, point[i]);
      std::uint64_t t = index.encode(moved);
      if (out.orbit_of[t] == kUnassigned) {
        out.orbit_of[t] = id;
        members.push_back(t);
      }
    }
    std::sort(members.begin(), members.end());
    out.orbits.push_back(std::move(members));
  }
  return out;
}

RationalMatrix compress_to_invariants(const FiniteGroup& k, const Subgroup& u, GenIndex m, const RationalMatrix& M) {
  const TupleIndex index(k.order(), m);
  if (M.rows() != index.size() || M.cols() != index.size())
    throw DomainError("matrix is not |K|^m square");

  // Commutation with every u: M[u.k', u.k] = M[k', k].
  std::vector<Element> point(m);
  for (Element g : u.members()) {
    std::vector<std::uint64_t> perm(index.size());
    for (std::uint64_t i = 0; i < index.size(); ++i) {
      index.decode_into(i, point);
      for (auto& e : point) e = k.conj(g, e);
      perm[i] = index.encode(point);
    }
    for (std::uint64_t r = 0; r < index.size(); ++r)
      for (std::uint64_t c = 0; c < index.size(); ++c)
        if (M(perm[r], perm[c]) != M(r, c)) throw DomainError("matrix does not commute with conjugation by U");
  }

  const OrbitDecomposition orbits = conjugation_orbits(k, u, m);
  const std::size_t r = orbits.orbits.size();
  RationalMatrix C(r, r);
  for (std::size_t target = 0; target < r; ++target) {
    const std::uint64_t rep = orbits.orbits[target].front();
    for (std::size_t source = 0; source < r; ++source) {
      Rational sum;
      for (std::uint64_t kk : orbits.orbits[source]) sum += M(rep, kk);
      C(target, source) = sum;
    }
  }
  return C;
}

CylinderFunction CylinderFunction::constant(const FiniteGroup& k, GenIndex arity, const Rational& c) {
  return {arity, std::vector<Rational>(TupleIndex(k.order(), arity).size(), c)};
}

CylinderFunction CylinderFunction::delta(const FiniteGroup& k, std::span<const Element> point) {
  const auto arity = static_cast<GenIndex>(point.size());
  const TupleIndex index(k.order(), arity);
  CylinderFunction f{arity, std::vector<Rational>(index.size())};
  f.values[index.encode(point)] = 1;
  return f;
}

namespace {

void require_shape(const FiniteGroup& k, const CylinderFunction& f) {
  if (f.values.size() != TupleIndex(k.order(), f.arity).size())
    throw DomainError("cylinder function has wrong number of values");
}

}  // namespace

Rational cylinder_inner_product(const FiniteGroup& k, GenIndex N, const CylinderFunction& f,
                                const CylinderFunction& g, const EngineOptions& opts) {
  require_shape(k, f);
  require_shape(k, g);
  if (f.arity > N || g.arity > N) throw DomainError("cylinder function depends on coordinates above N");
  const std::uint64_t total = point_count(k, N);
  require_points(total, opts);
  const std::uint64_t f_div = point_count(k, N - f.arity);
  const std::uint64_t g_div = point_count(k, N - g.arity);
  mpq_class sum;
  for (std::uint64_t p = 0; p < total; ++p) {
    const Rational& a = f.values[p / f_div];
    if (a.is_zero()) continue;
    sum += a.raw() * g.values[p / g_div].raw();
  }
  return Rational(mpq_class(sum)) / Rational::from_counts(total, 1);
}

CylinderFunction apply_T(const FiniteGroup& k, const Automorphism& a, const CylinderFunction& f, GenIndex N,
                         const EngineOptions& opts) {
  require_shape(k, f);
  const std::uint64_t total = point_count(k, N);
  require_points(total, opts);
  const kernels::GroupTable table(k);
  const std::vector<Word> words = images_of_first(a, f.arity);
  const kernels::WordProgram program(words, N);
  const auto fn = kernels::select(opts.isa);
  const std::uint64_t radix = k.order();

  CylinderFunction out{N, std::vector<Rational>(total)};
  sweep(table, program, fn, 0, total, [&](std::uint64_t first, std::size_t count, const std::int32_t* res) {
    for (std::size_t lane = 0; lane < count; ++lane) {
      std::uint64_t idx = 0;
      for (GenIndex w = 0; w < f.arity; ++w) idx = idx * radix + static_cast<std::uint64_t>(res[w * count + lane]);
      out.values[first + lane] = f.values[idx];
    }
  });
  return out;
}

CylinderFunction project(const FiniteGroup& k, GenIndex m, const CylinderFunction& f) {
  require_shape(k, f);
  const std::uint64_t dim = point_count(k, m);
  CylinderFunction out{m, std::vector<Rational>(dim)};
  if (f.arity <= m) {
    const std::uint64_t div = point_count(k, m - f.arity);
    for (std::uint64_t i = 0; i < dim; ++i) out.values[i] = f.values[i / div];
    return out;
  }
  const std::uint64_t fiber = point_count(k, f.arity - m);
  const Rational weight = Rational::from_counts(1, fiber);
  for (std::uint64_t i = 0; i < f.values.size(); ++i) out.values[i / fiber] += f.values[i];
  for (auto& v : out.values) v *= weight;
  return out;
}

bool weak_limit_check(const FiniteGroup& k, GenIndex m, GenIndex cylinder, GenIndex j, const EngineOptions& opts) {
  const GenIndex d = m + cylinder;
  const GenIndex N = m + j + cylinder;
  const Automorphism t = theta(m, j);
  const TupleIndex basis(k.order(), d);

  std::vector<CylinderFunction> deltas, projected;
  for (std::uint64_t i = 0; i < basis.size(); ++i) {
    deltas.push_back(CylinderFunction::delta(k, basis.decode(i)));
    projected.push_back(project(k, m, deltas.back()));
  }
  for (std::uint64_t a = 0; a < basis.size(); ++a) {
    const CylinderFunction moved = apply_T(k, t, deltas[a], N, opts);
    for (std::uint64_t b = 0; b < basis.size(); ++b) {
      if (cylinder_inner_product(k, N, moved, deltas[b], opts) !=
          cylinder_inner_product(k, N, projected[a], projected[b], opts))
        return false;
    }
  }
  return true;
}

}  // namespace freecoset
