#include "freecoset/json_io.hpp"

#include <charconv>

#include "freecoset/errors.hpp"

namespace freecoset::json {

namespace {

GenIndex parse_key(const std::string& key) {
  GenIndex idx = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
  if (ec != std::errc{} || ptr != key.data() + key.size() || idx == 0)
    throw SyntaxError("image key '" + key + "' is not a positive generator index");
  return idx;
}

ImageMap images_from_json(const Json& j) {
  if (!j.is_object()) throw SyntaxError("image map must be a JSON object");
  ImageMap out;
  for (const auto& [key, value] : j.items()) out[parse_key(key)] = word_from_json(value);
  return out;
}

Json images_to_json(const ImageMap& images) {
  Json out = Json::object();
  for (const auto& [g, w] : images) out[std::to_string(g)] = word_to_json(w);
  return out;
}

}  // namespace

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (Letter l : w) out.push_back(Json::array({l.gen, static_cast<int>(l.sign)}));
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw SyntaxError("word must be an array of [index, sign] pairs");
  std::vector<Letter> letters;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      throw SyntaxError("letter must be an [index, sign] pair of integers");
    auto idx = item[0].get<long long>();
    auto sign = item[1].get<long long>();
    if (idx < 1 || idx > std::numeric_limits<GenIndex>::max()) throw SyntaxError("letter index must be >= 1");
    if (sign != 1 && sign != -1) throw SyntaxError("letter sign must be 1 or -1");
    letters.push_back({static_cast<GenIndex>(idx), sign == 1 ? Sign::Plus : Sign::Minus});
  }
  return reduce(letters);
}

Json endomorphism_to_json(const Endomorphism& e) { return images_to_json(e.images()); }

Endomorphism endomorphism_from_json(const Json& j) { return Endomorphism(images_from_json(j)); }

Json automorphism_to_json(const Automorphism& a) {
  Json out = Json::object();
  out["images"] = images_to_json(a.fwd().images());
  out["inverse_images"] = images_to_json(a.inv().images());
  return out;
}

Automorphism automorphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("images") || !j.contains("inverse_images"))
    throw SyntaxError("automorphism needs \"images\" and \"inverse_images\"");
  return Automorphism::from_pair(endomorphism_from_json(j.at("images")),
                                 endomorphism_from_json(j.at("inverse_images")));
}

Json coset_to_json(const DoubleCosetRep& c) {
  Json out = Json::object();
  out["m"] = c.m;
  out["N"] = c.N;
  out["rep"] = automorphism_to_json(c.rep);
  return out;
}

Json conj_class_to_json(const ConjClassRep& c) {
  Json out = Json::object();
  out["m"] = c.m;
  out["N"] = c.N;
  out["rep"] = automorphism_to_json(c.rep);
  return out;
}

Json tuple_to_json(const TupleRep& t) {
  Json out = Json::object();
  out["m"] = t.m;
  out["N"] = t.N;
  out["reps"] = Json::array();
  for (const auto& a : t.reps) out["reps"].push_back(automorphism_to_json(a));
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw SyntaxError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw SyntaxError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_string()) throw SyntaxError("matrix entries must be \"p/q\" strings");
      m(r, c) = Rational::parse(j[r][c].get<std::string>());
    }
  }
  return m;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
    throw SyntaxError("group needs \"order\" and \"mul\"");
  const auto order = j.at("order").get<std::uint32_t>();
  const auto unit = j.contains("unit") ? j.at("unit").get<Element>() : Element{0};
  const Json& rows = j.at("mul");
  if (!rows.is_array() || rows.size() != order) throw SyntaxError("mul must have `order` rows");
  std::vector<Element> mul;
  mul.reserve(std::size_t{order} * order);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != order) throw SyntaxError("mul rows must have `order` entries");
    for (const auto& e : row) mul.push_back(e.get<Element>());
  }
  return FiniteGroup(order, std::move(mul), unit, "custom");
}

Json group_to_json(const FiniteGroup& k) {
  Json out = Json::object();
  out["order"] = k.order();
  Json rows = Json::array();
  for (Element a = 0; a < k.order(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < k.order(); ++b) row.push_back(k.mul(a, b));
    rows.push_back(std::move(row));
  }
  out["mul"] = std::move(rows);
  out["unit"] = k.unit();
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace freecoset::json
