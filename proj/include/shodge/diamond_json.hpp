#pragma once

// JSON form of a Sasakian structure record:
//   {"n": int, "h": [[int,...],...], "name": str?, "closed_leaves": int|"infinite"?,
//    "positivity": str?}
// Row index p, column index q. Keys come out sorted, and no floating-point
// values are ever written, so output is stable under re-serialization.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "shodge/error.hpp"
#include "shodge/polyring.hpp"
#include "shodge/sasaki.hpp"

namespace shodge {

using Json = nlohmann::json;

/// A record as read from a file, remembering which optional fields were present.
struct DiamondDocument {
  SasakiStructureRecord record;
  bool has_name = false;
  bool has_closed_leaves = false;
  bool has_positivity = false;
};

inline Json diamond_to_json(const HodgeDiamond& d) {
  Json j = Json::object();
  j["n"] = d.n();
  j["h"] = d.entries();
  return j;
}

inline Json closed_leaves_to_json(const ClosedLeafCount& c) {
  return c ? Json(*c) : Json("infinite");
}

inline Json record_to_json(const SasakiStructureRecord& r) {
  Json j = diamond_to_json(r.diamond);
  j["name"] = r.name;
  j["closed_leaves"] = closed_leaves_to_json(r.closed_leaf_count);
  j["positivity"] = to_string(r.positivity);
  return j;
}

/// Integer coefficient list; throws if a coefficient does not fit in 64 bits.
inline Json polynomial_to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c > BigInt(INT64_MAX) || c < BigInt(INT64_MIN)) throw std::overflow_error("coefficient exceeds 64 bits");
    arr.push_back(c.convert_to<std::int64_t>());
  }
  return arr;
}

inline Json report_to_json(const ValidationReport& report) {
  Json rules = Json::array();
  for (const auto& r : report.rules) {
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back({{"p", x.p}, {"q", x.q}, {"detail", x.detail}});
    rules.push_back({{"rule", r.rule}, {"passed", r.passed}, {"witnesses", std::move(w)}});
  }
  return {{"passed", report.passed()}, {"rules", std::move(rules)}};
}

inline DiamondDocument record_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("diamond document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("field 'n' must be an integer");
  if (!j.contains("h") || !j["h"].is_array()) throw InputError("field 'h' must be an array of rows");

  const auto n = j["n"].get<std::int64_t>();
  if (n < 0 || n > 10000) throw InputError("field 'n' out of range");
  std::vector<std::vector<std::int64_t>> h;
  for (const auto& row : j["h"]) {
    if (!row.is_array()) throw InputError("each row of 'h' must be an array");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError("entries of 'h' must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    h.push_back(std::move(r));
  }

  DiamondDocument doc{{"", HodgeDiamond(static_cast<int>(n), std::move(h)), std::nullopt, Positivity::unknown}};
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("field 'name' must be a string");
    doc.record.name = j["name"].get<std::string>();
    doc.has_name = true;
  }
  if (j.contains("closed_leaves")) {
    const auto& c = j["closed_leaves"];
    if (c.is_string() && c.get<std::string>() == "infinite") {
      doc.record.closed_leaf_count = std::nullopt;
    } else if (c.is_number_unsigned() && c.get<std::uint64_t>() > 0) {
      doc.record.closed_leaf_count = c.get<std::uint64_t>();
    } else {
      throw InputError("field 'closed_leaves' must be a positive integer or \"infinite\"");
    }
    doc.has_closed_leaves = true;
  }
  if (j.contains("positivity")) {
    if (!j["positivity"].is_string()) throw InputError("field 'positivity' must be a string");
    doc.record.positivity = positivity_from_string(j["positivity"].get<std::string>());
    doc.has_positivity = true;
  }
  return doc;
}

}  // namespace shodge
