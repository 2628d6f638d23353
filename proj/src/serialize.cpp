#include "a4csl/serialize.hpp"

#include <limits>

namespace a4csl {

using nlohmann::json;

json to_json(const Integer& x) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return json(static_cast<long long>(x));
  return json(to_string(x));
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos)
      throw ParseError("not an integer: " + s);
    return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json to_json(const OInt& x) { return json(to_string(x)); }

json to_json(const Icosian& q) {
  json coords = json::array();
  for (const auto& c : q.coords()) coords.push_back(to_json(c));
  json z = json::array();
  for (const auto& c : q.z()) z.push_back(to_json(c));
  return json{{"quat", to_string(q.quat())}, {"coords", coords}, {"z", z}};
}

Icosian icosian_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array() || j["coords"].size() != 4)
    throw ParseError("icosian: expected an object with four \"coords\"");
  std::array<OInt, 4> c;
  for (size_t i = 0; i < 4; ++i) {
    const json& e = j["coords"][i];
    if (e.is_string())
      c[i] = parse_oint(e.get<std::string>());
    else
      c[i] = OInt(integer_from_json(e));
  }
  return Icosian::from_coords(c);
}

json to_json(const SublatticeL& s) {
  json h = json::array();
  for (const auto& e : s.entries()) h.push_back(to_json(e));
  return json{{"hnf", h}, {"index", to_json(s.index())}};
}

SublatticeL sublattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("hnf") || !j["hnf"].is_array() || j["hnf"].size() != 16)
    throw ParseError("sublattice: expected an object with 16 \"hnf\" entries");
  IntMatrix m(4, 4);
  for (size_t i = 0; i < 16; ++i) m(i / 4, i % 4) = integer_from_json(j["hnf"][i]);
  if (hnf(m) != m) throw ParseError("sublattice: \"hnf\" is not in Hermite normal form");
  SublatticeL s(m);
  if (j.contains("index") && integer_from_json(j["index"]) != s.index())
    throw ParseError("sublattice: \"index\" does not match the HNF");
  return s;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& e : m.row(r)) row.push_back(to_json(e));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const CslRecord& r) {
  json m = json::array();
  for (const auto& row : r.rotation.matrixL) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(to_string(e));
    m.push_back(jr);
  }
  return json{{"q", to_json(r.rotation.q)},
              {"q_alpha", to_json(r.rotation.q_alpha)},
              {"alpha", to_json(r.rotation.alpha)},
              {"sigma", to_json(r.rotation.sigma)},
              {"den", to_json(r.rotation.den)},
              {"matrix", m},
              {"hnf", to_json(r.csl)["hnf"]},
              {"index", to_json(r.csl.index())}};
}

json to_json(const SigmaCensus& c, bool with_records) {
  json j{{"n", to_json(c.n)},
         {"rotation_classes", c.rotation_classes},
         {"csl_count", c.csl_count},
         {"criterion_count", c.criterion_count},
         {"criterion_agrees", c.criterion_agrees},
         {"f_formula", to_json(c.f_formula)},
         {"match", c.matches()}};
  if (with_records) {
    json recs = json::array();
    for (const auto& r : c.records) recs.push_back(to_json(r));
    j["records"] = recs;
  }
  return j;
}

json document(json body) {
  body["schema"] = kSchemaVersion;
  return body;
}

std::string census_csv_header() { return "n,rotation_classes,csl_count,f_formula,match"; }

std::string census_csv_row(const SigmaCensus& c) {
  return to_string(c.n) + "," + std::to_string(c.rotation_classes) + "," + std::to_string(c.csl_count) + "," +
         to_string(c.f_formula) + "," + (c.matches() ? "true" : "false");
}

}  // namespace a4csl
