// JSON and plain-text table rendering.
//
// Partition      [3,1,1]
// BiPartition    {"top":[...],"bottom":[...]}
// Symbol         {"top":[...],"bottom":[...]}
// GroupFamily    "U3"
// IntPolynomial  {"coeffs":{"0":c0,"3":c3}}; coefficients beyond 64 bits are
//                written as decimal strings
// ThetaPair      {"pair":{"first":"U3","second":"U6"},"lhs":{...},"rhs":{...}}

#pragma once

#include <algorithm>
#include <climits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lusym/errors.hpp"
#include "lusym/partition.hpp"
#include "lusym/polynomial.hpp"
#include "lusym/symbol.hpp"
#include "lusym/theta.hpp"
#include "lusym/verify.hpp"

namespace lusym {

using json = nlohmann::ordered_json;

inline void to_json(json& j, const Partition& p) {
  j = json::array();
  for (int x : p.parts())
    j.push_back(x);
}

inline void from_json(const json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

inline void to_json(json& j, const BiPartition& b) {
  j = json{{"top", b.top}, {"bottom", b.bottom}};
}

inline void from_json(const json& j, BiPartition& b) {
  b = {j.at("top").get<Partition>(), j.at("bottom").get<Partition>()};
}

inline void to_json(json& j, const BetaSet& row) {
  j = json::array();
  for (int x : row.entries())
    j.push_back(x);
}

inline void from_json(const json& j, BetaSet& row) {
  row = BetaSet(j.get<std::vector<int>>());
}

inline void to_json(json& j, const Symbol& s) {
  j = json{{"top", s.top()}, {"bottom", s.bottom()}};
}

inline void from_json(const json& j, Symbol& s) {
  if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
    throw DomainError("symbol JSON needs \"top\" and \"bottom\" arrays");
  s = Symbol(j.at("top").get<BetaSet>(), j.at("bottom").get<BetaSet>());
}

inline void to_json(json& j, const GroupFamily& f) { j = f.tag(); }

inline void to_json(json& j, const DualPair& p) {
  j = json{{"first", p.first()}, {"second", p.second()}};
}

inline json coefficient_json(const mpz_class& c) {
  if (c.fits_slong_p())
    return c.get_si();
  return c.get_str();
}

inline void to_json(json& j, const IntPolynomial& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.terms())
    coeffs[std::to_string(e)] = coefficient_json(c);
  j = json{{"coeffs", coeffs}};
}

inline void to_json(json& j, const ThetaPair& t) {
  j = json{{"pair", t.pair}, {"lhs", t.lhs}, {"rhs", t.rhs}};
}

inline void to_json(json& j, const Failure& f) {
  j = json{{"context", f.context},
           {"symbol", f.symbol},
           {"expected", f.expected},
           {"actual", f.actual}};
}

// Elapsed time is left out so output is byte-stable across runs.
inline void to_json(json& j, const VerificationReport& r) {
  j = json{{"suite", r.suite},
           {"instances", r.instances},
           {"passed", r.passed()},
           {"failures", r.failures},
           {"operations", r.operations}};
}

// Left-aligned plain-text table with a header rule.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) {
    row.resize(header_.size());
    rows_.push_back(std::move(row));
  }

  std::string render() const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
      width[c] = header_[c].size();
      for (const auto& row : rows_)
        width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
      std::string text;
      for (std::size_t c = 0; c < row.size(); ++c) {
        text += row[c];
        if (c + 1 < row.size())
          text += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << text << '\n';
    };
    line(header_);
    std::vector<std::string> rule;
    for (std::size_t w : width)
      rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : rows_)
      line(row);
    return out.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string to_text(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

inline std::string to_text(const BiPartition& b) {
  return "(" + to_text(b.top) + "," + to_text(b.bottom) + ")";
}

}  // namespace lusym
