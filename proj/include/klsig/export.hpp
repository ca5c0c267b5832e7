#pragma once

#include "klsig/shapovalov.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace klsig {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Integers that fit in 64 bits as JSON numbers, larger ones as strings.
inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) a.push_back(is_integer(c) ? to_json(to_integer(c)) : Json(c.str()));
  return a;
}

inline Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

/// Header recorded in every export: type, painting, lambda and the element order.
inline Json export_header(const WeylGroup& g, const Painting& painting, const Weight& lambda) {
  Json h;
  h["schema_version"] = kSchemaVersion;
  h["type"] = g.root_system().type_label();
  h["painting"] = painting.one_based();
  h["lambda"] = to_json(lambda);
  Json elems = Json::array();
  for (Elem x = 0; x < g.size(); ++x) elems.push_back(g.word_string(x));
  h["elements"] = elems;
  return h;
}

/// Matrix as {row word: {column word: value}}, nonzero entries only.
inline Json matrix_json(const WeylGroup& g, const IntMatrix& m) {
  Json out = Json::object();
  for (Elem x = 0; x < g.size(); ++x) {
    Json row = Json::object();
    for (Elem y = 0; y < g.size(); ++y)
      if (m(x, y) != 0) row[g.word_string(y)] = to_json(m(x, y));
    out[g.word_string(x)] = row;
  }
  return out;
}

inline Json diagonal_json(const WeylGroup& g, const std::vector<int>& d) {
  Json out = Json::object();
  for (Elem x = 0; x < g.size(); ++x) out[g.word_string(x)] = d[x];
  return out;
}

/// Every pair (x, y) in the group order with its coefficient list.
template <class Lookup>
Json polynomial_table_json(const WeylGroup& g, Lookup&& entry) {
  Json out = Json::array();
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y)
      out.push_back(Json{{"x", g.word_string(x)}, {"y", g.word_string(y)}, {"coeffs", to_json(entry(x, y))}});
  return out;
}

inline Json character_json(const TruncatedCharacter& ch) {
  Json out = Json::array();
  for (const auto& [w, c] : ch.coeffs) out.push_back(Json::array({to_json(w), to_json(c)}));
  return out;
}

inline Json jantzen_json(const JantzenReport& rep) {
  Json out;
  out["highest_weight"] = to_json(rep.highest);
  out["depth"] = rep.depth;
  out["hermitian"] = rep.hermitian;
  Json spaces = Json::array();
  for (const auto& s : rep.spaces) {
    Json entries = Json::array();
    for (const auto& [k, sg] : s.entries) entries.push_back(Json{{"order", k}, {"sign", sg}});
    spaces.push_back(Json{{"offset", s.offset}, {"weight", to_json(s.weight)}, {"entries", entries}});
  }
  out["weight_spaces"] = spaces;
  Json levels = Json::array();
  for (long j = 0; j <= rep.max_order(); ++j)
    levels.push_back(Json{{"level", j}, {"signature", character_json(rep.level_signature(j))}});
  out["levels"] = levels;
  return out;
}

/// CSV with '#' header lines, a title row of column words and one row per element.
inline std::string matrix_csv(const WeylGroup& g, const IntMatrix& m, const Json& header) {
  std::ostringstream os;
  for (const auto& [k, v] : header.items())
    if (k != "elements") os << "# " << k << "=" << v.dump() << "\n";
  os << "x\\y";
  for (Elem y = 0; y < g.size(); ++y) os << "," << g.word_string(y);
  os << "\n";
  for (Elem x = 0; x < g.size(); ++x) {
    os << g.word_string(x);
    for (Elem y = 0; y < g.size(); ++y) os << "," << m(x, y).str();
    os << "\n";
  }
  return os.str();
}

/// Polynomial table as CSV rows x,y,c0 c1 ...
template <class Lookup>
std::string polynomial_table_csv(const WeylGroup& g, Lookup&& entry, const Json& header) {
  std::ostringstream os;
  for (const auto& [k, v] : header.items())
    if (k != "elements") os << "# " << k << "=" << v.dump() << "\n";
  os << "x,y,coefficients\n";
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y) {
      os << g.word_string(x) << "," << g.word_string(y) << ",";
      const IntPolynomial& p = entry(x, y);
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) os << (k ? " " : "") << p.coefficients()[k].str();
      os << "\n";
    }
  return os.str();
}

}  // namespace klsig
