#pragma once

// Group descriptors: "C<n>", "D<d>", "GT<t>", "HW<w>", products "A x B",
// or "@path.json" holding a group object.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "bracoid/io.hpp"

namespace bracoid {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::size_t parse_parameter(std::string_view digits, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end || value == 0) {
    throw Error(ErrorKind::Parse, "bad group descriptor '" + std::string(whole) + "'");
  }
  return value;
}

inline FiniteGroup parse_factor(std::string_view s, std::size_t cap) {
  s = trim(s);
  if (!s.empty() && s.front() == '@') return load_group(std::string(s.substr(1)));
  struct Family {
    std::string_view prefix;
    std::size_t order_per_unit;
    FiniteGroup (*make)(std::size_t);
  };
  static const Family families[] = {
      {"GT", 4, presented_G}, {"HW", 4, presented_H}, {"C", 1, cyclic}, {"D", 2, dihedral}};
  for (const auto& f : families) {
    if (s.substr(0, f.prefix.size()) != f.prefix) continue;
    const std::size_t k = parse_parameter(s.substr(f.prefix.size()), s);
    if (k > cap || k * f.order_per_unit > cap) {
      throw Error(ErrorKind::OrderCapExceeded, "'" + std::string(s) + "' exceeds the order cap " + std::to_string(cap));
    }
    return f.make(k);
  }
  throw Error(ErrorKind::Parse, "bad group descriptor '" + std::string(s) + "'");
}

}  // namespace detail

/// Parses a descriptor. Products associate to the left. Groups larger than
/// `cap` are rejected before construction.
inline FiniteGroup parse_group_descriptor(std::string_view spec, std::size_t cap) {
  spec = detail::trim(spec);
  if (!spec.empty() && spec.front() == '@') return detail::parse_factor(spec, cap);
  std::optional<FiniteGroup> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = spec.find('x', start);
    auto factor = detail::parse_factor(spec.substr(start, pos == std::string_view::npos ? pos : pos - start), cap);
    out = out ? direct_product(*out, factor) : factor;
    if (out->order() > cap) {
      throw Error(ErrorKind::OrderCapExceeded, "'" + std::string(spec) + "' exceeds the order cap " + std::to_string(cap));
    }
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return *out;
}

}  // namespace bracoid
