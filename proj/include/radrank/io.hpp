#pragma once

// JSON forms of models, supports, families and generator sets.
//
// Model file:
//   { "ambient_rank": r,
//     "primes": [ { "id": "P0", "class": ["1", "-1/2", ...] }, ... ] }
// Rationals are strings "a/b" (b > 0, lowest terms) or "a".

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "radrank/cones.hpp"
#include "radrank/model.hpp"
#include "radrank/semilattice.hpp"

namespace radrank {

using Json = nlohmann::ordered_json;

Json to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j, const std::string& path);

Json to_json(const Model& m);
/// Throws FormatError naming the offending field, e.g. "primes[2].class[0]".
Model model_from_json(const Json& j);
/// Throws FormatError with the line and column of a syntax error.
Model parse_model(std::string_view text);
Model load_model(const std::filesystem::path& path);
/// Pretty-printed model file, newline terminated.
std::string serialize_model(const Model& m);

/// Array of prime ids.
Json set_to_json(const std::vector<PrimeId>& ids, PrimeSet s);
/// Array of arrays of prime ids.
Json family_to_json(const std::vector<PrimeId>& ids, const Family& f);
/// Array of [id in A, id in B] pairs.
Json bijection_to_json(const PrincipalSupports& a, const PrincipalSupports& b, const PrimeBijection& eta);

/// Comma-separated prime ids, e.g. "P0,P2".
PrimeSet parse_support(const PrincipalSupports& v, std::string_view text);
PrimeSet set_from_json(const PrincipalSupports& v, const Json& j, const std::string& path);

/// phi file: [ [ ["P0","P1"], ["Q0","Q1"] ], ... ], pairs of supports of A and B.
SupportMap support_map_from_json(const Json& j, const PrincipalSupports& a, const PrincipalSupports& b);
Json to_json(const SupportMap& phi, const PrincipalSupports& a, const PrincipalSupports& b);

/// Vectors file: either an array of vectors (labels x0, x1, ...; dimension
/// taken from the first vector, 0 when empty) or
///   { "dimension": n, "vectors": [ { "label": "a", "coords": [...] }, ... ] }.
GeneratorSet generators_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);

}  // namespace radrank
