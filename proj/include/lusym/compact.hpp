// Compact text form of symbols: "[top|bottom]", e.g. "[1|1,0]", "[|]".

#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "lusym/errors.hpp"
#include "lusym/symbol.hpp"

namespace lusym {

inline std::string to_compact(const BetaSet& row) {
  std::string out;
  for (int x : row.entries()) {
    if (!out.empty())
      out += ',';
    out += std::to_string(x);
  }
  return out;
}

inline std::string to_compact(const Symbol& s) {
  return "[" + to_compact(s.top()) + "|" + to_compact(s.bottom()) + "]";
}

namespace impl {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.empty())
    return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw DomainError("bad symbol '" + std::string(whole) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos)
      return out;
    text = text.substr(comma + 1);
  }
}

}  // namespace impl

inline Symbol parse_compact_symbol(std::string_view text) {
  if (text.size() < 3 || text.front() != '[' || text.back() != ']')
    throw DomainError("bad symbol '" + std::string(text) +
                      "' (expected [top|bottom], e.g. [1|1,0])");
  const std::string_view body = text.substr(1, text.size() - 2);
  const auto bar = body.find('|');
  if (bar == std::string_view::npos || body.find('|', bar + 1) != std::string_view::npos)
    throw DomainError("bad symbol '" + std::string(text) + "' (expected one '|')");
  return {BetaSet(impl::parse_int_list(body.substr(0, bar), text)),
          BetaSet(impl::parse_int_list(body.substr(bar + 1), text))};
}

}  // namespace lusym
