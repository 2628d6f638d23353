// JSON and CSV encodings for icosians, sublattices, CSL records and census
// rows.  Every JSON document carries "schema": 1.
#pragma once

#include <string>

#include "a4csl/counting.hpp"
#include "a4csl/csl.hpp"
#include "json.hpp"

namespace a4csl {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OInt& x);
nlohmann::json to_json(const Icosian& q);
/// Accepts {"coords": [...]} with o-elements as strings; throws ParseError.
Icosian icosian_from_json(const nlohmann::json& j);

/// {"hnf": 16 integers row-major, "index": n}
nlohmann::json to_json(const SublatticeL& s);
/// Throws ParseError on malformed input or when "index" disagrees with the HNF.
SublatticeL sublattice_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const CslRecord& r);
nlohmann::json to_json(const SigmaCensus& c, bool with_records);

/// Adds "schema" to an object.
nlohmann::json document(nlohmann::json body);

std::string census_csv_header();
std::string census_csv_row(const SigmaCensus& c);

}  // namespace a4csl
