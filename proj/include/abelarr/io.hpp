#pragma once

// JSON reading and writing.
//
// Arrangement files:
//   {"group": {"free_rank": 2, "torsion": []}, "vectors": [[-1, 1], [0, 2]], "name": "..."}
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelarr/invariants.hpp"
#include "abelarr/oracle.hpp"
#include "abelarr/poset.hpp"

namespace abelarr {

using Json = nlohmann::json;

/// Malformed input; what() names the line or the field path.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Integer& value);
Integer integer_from_json(const Json& value, const std::string& path);

/// Out-of-range torsion coordinates are reduced and reported in warnings.
Arrangement parse_arrangement(const Json& doc, std::vector<std::string>* warnings = nullptr);
Arrangement parse_arrangement_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
Arrangement read_arrangement_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

Json arrangement_to_json(const Arrangement& arr);

/// Ascending coefficient array.
Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& value, const std::string& path);
/// [[i, j, c], ...] for c x^i y^j, sorted by (i, j).
Json to_json(const BiPoly& p);

/// {"period", "minimal_period", "constituents"} with one entry per residue,
/// or per divisor of the period ("constituents_by_gcd") when the period is long.
Json to_json(const QuasiPolynomial& qp);

/// One record per layer of set: key, dim, rank, mu, bottom, covers (keys).
Json poset_records(const IntersectionPoset& poset, const LayerSet& set);

Json to_json(const OracleReport& report);

}  // namespace abelarr
