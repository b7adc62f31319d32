#pragma once

// JSON encodings.
//
//   word          [[index, sign], ...]
//   automorphism  {"images": {"1": word, ...}, "inverse_images": {...}}
//   group         {"order": n, "mul": [[...], ...], "unit": 0}
//   matrix        [["p/q", ...], ...]

#include <json.hpp>

#include "freecoset/double_coset.hpp"
#include "freecoset/finite_group.hpp"
#include "freecoset/rational.hpp"

namespace freecoset::json {

using Json = nlohmann::ordered_json;

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json endomorphism_to_json(const Endomorphism& e);
Endomorphism endomorphism_from_json(const Json& j);

Json automorphism_to_json(const Automorphism& a);
// Runs verify_inverse_pair; throws DomainError on failure and SyntaxError on
// malformed documents.
Automorphism automorphism_from_json(const Json& j);

Json coset_to_json(const DoubleCosetRep& c);
Json conj_class_to_json(const ConjClassRep& c);
Json tuple_to_json(const TupleRep& t);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& k);

// Parses text, mapping parser failures to SyntaxError.
Json parse(std::string_view text);

}  // namespace freecoset::json
