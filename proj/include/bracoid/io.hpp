#pragma once

// JSON load/store for groups, bracoids, braces, reports and enumeration
// results. Output uses one canonical layout (two-space indent, scalar arrays
// on one line, matrices one row per line) so store(load(x)) reproduces a
// canonically formatted file byte for byte.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bracoid/enumerate.hpp"

namespace bracoid {

using Json = nlohmann::ordered_json;

/// A structure file's contents after shape validation. Bracoid axioms are not
/// yet checked, so that a verifier can report them.
using Structure = std::variant<SkewLeftBracoid, SkewRightBracoid, TwoSidedSkewBracoid, SkewBrace>;

// ---------------------------------------------------------------------------
// Canonical text

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

inline void write_canonical(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << inner << Json(it.key()).dump() << ": ";
      write_canonical(os, it.value(), indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << inner;
      write_canonical(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace detail

inline std::string to_canonical_string(const Json& j) {
  std::ostringstream os;
  detail::write_canonical(os, j, 0);
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline Json rows(const std::vector<Elem>& flat, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; cols && r < flat.size() / cols; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(flat[r * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

inline Json witness_json(const Witness& w) { return w ? Json(*w) : Json(nullptr); }

}  // namespace detail

inline Json to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.label();
  j["order"] = g.order();
  j["elements"] = g.element_names();
  j["table"] = detail::rows(g.flat_table(), g.order());
  return j;
}

inline Json to_json(const SkewLeftBracoid& b) {
  Json j;
  j["G"] = to_json(b.g_group());
  j["N"] = to_json(b.n_group());
  j["left_action"] = detail::rows(b.action().table(), b.n_group().order());
  return j;
}

inline Json to_json(const SkewRightBracoid& b) {
  Json j;
  j["H"] = to_json(b.h_group());
  j["N"] = to_json(b.n_group());
  j["right_action"] = detail::rows(b.action().table(), b.h_group().order());
  return j;
}

inline Json to_json(const TwoSidedSkewBracoid& t) {
  Json j;
  j["G"] = to_json(t.g_group());
  j["H"] = to_json(t.h_group());
  j["N"] = to_json(t.n_group());
  j["left_action"] = detail::rows(t.left().action().table(), t.n_group().order());
  j["right_action"] = detail::rows(t.right().action().table(), t.h_group().order());
  return j;
}

inline Json to_json(const SkewBrace& br) {
  Json j;
  j["star"] = to_json(br.star());
  j["dot"] = to_json(br.dot());
  return j;
}

inline Json to_json(const Structure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

inline Json to_json(const CheckReport& r) {
  Json out = Json::array();
  for (const auto& p : r.results) {
    Json j;
    j["property"] = p.property;
    j["status"] = std::string(to_string(p.status));
    j["witness"] = detail::witness_json(p.witness);
    out.push_back(std::move(j));
  }
  return out;
}

inline Json to_json(const TheoremVerdict& v) {
  Json j;
  j["theorem"] = v.theorem;
  Json hyps = Json::object();
  for (const auto& [name, holds] : v.hypotheses) hyps[name] = holds;
  j["hypotheses"] = std::move(hyps);
  j["conclusion"] = v.conclusion ? Json(*v.conclusion) : Json(nullptr);
  j["witness"] = detail::witness_json(v.witness);
  j["flag"] = std::string(to_string(v.flag));
  return j;
}

inline Json to_json(const std::vector<TheoremVerdict>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

/// The label attached to every deduplicated result.
inline constexpr std::string_view kEquivalenceLabel =
    "artifact-defined: automorphisms of the acting groups and of N intertwining the actions";

template <class S>
Json to_json(const EnumerationResult<S>& r, bool with_structures = true) {
  Json j;
  j["raw_count"] = r.raw_count;
  j["iso_class_count"] = r.iso_class_count ? Json(*r.iso_class_count) : Json(nullptr);
  if (r.iso_class_count) j["equivalence"] = std::string(kEquivalenceLabel);
  if (with_structures) {
    Json list = Json::array();
    for (const auto& s : r.structures) list.push_back(to_json(s));
    j["structures"] = std::move(list);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Parsing. Errors name the JSON path of the offending value.

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

inline const Json& member(const Json& j, const std::string& where, const char* key) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

inline Elem index_value(const Json& v, const std::string& where, std::size_t bound) {
  if (!v.is_number_integer()) parse_fail(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < 0 || static_cast<std::size_t>(x) >= bound) {
    throw Error(ErrorKind::IndexOutOfRange,
                where + " = " + std::to_string(x) + " is out of range [0, " + std::to_string(bound) + ")");
  }
  return static_cast<Elem>(x);
}

/// Reads a rows x cols matrix of indices below `bound`, row-major.
inline std::vector<Elem> read_matrix(const Json& j, const std::string& where, std::size_t rows, std::size_t cols,
                                     std::size_t bound) {
  if (!j.is_array()) parse_fail(where, "expected an array of rows");
  if (j.size() != rows) {
    throw Error(ErrorKind::Shape,
                where + " has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  }
  std::vector<Elem> flat;
  flat.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) parse_fail(rw, "expected an array");
    if (j[r].size() != cols) {
      throw Error(ErrorKind::Shape,
                  rw + " has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      flat.push_back(index_value(j[r][c], rw + "[" + std::to_string(c) + "]", bound));
    }
  }
  return flat;
}

}  // namespace detail

inline FiniteGroup group_from_json(const Json& j, const std::string& where = "group") {
  const auto& name = detail::member(j, where, "name");
  if (!name.is_string()) detail::parse_fail(where + ".name", "expected a string");
  const auto& order = detail::member(j, where, "order");
  if (!order.is_number_unsigned() || order.get<std::size_t>() == 0) {
    detail::parse_fail(where + ".order", "expected a positive integer");
  }
  const std::size_t n = order.get<std::size_t>();
  const auto& elements = detail::member(j, where, "elements");
  if (!elements.is_array()) detail::parse_fail(where + ".elements", "expected an array");
  if (elements.size() != n) {
    throw Error(ErrorKind::Shape, where + ".elements has " + std::to_string(elements.size()) +
                                      " names, expected " + std::to_string(n));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (!elements[i].is_string()) detail::parse_fail(where + ".elements[" + std::to_string(i) + "]", "expected a string");
    names.push_back(elements[i].get<std::string>());
  }
  auto table = detail::read_matrix(detail::member(j, where, "table"), where + ".table", n, n, n);
  try {
    return make_group_flat(name.get<std::string>(), std::move(names), std::move(table));
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what(), e.witness());
  }
}

/// Parses a structure, discriminated by its keys: "star"/"dot" for a brace,
/// "left_action" and/or "right_action" for bracoids.
inline Structure structure_from_json(const Json& j) {
  if (!j.is_object()) detail::parse_fail("$", "expected an object");
  if (j.contains("star") || j.contains("dot")) {
    auto star = group_from_json(detail::member(j, "$", "star"), "star");
    auto dot = group_from_json(detail::member(j, "$", "dot"), "dot");
    return SkewBrace::unchecked(std::move(star), std::move(dot));
  }
  const bool has_left = j.contains("left_action");
  const bool has_right = j.contains("right_action");
  if (!has_left && !has_right) detail::parse_fail("$", "no \"left_action\", \"right_action\" or \"star\" key");
  auto n = group_from_json(detail::member(j, "$", "N"), "N");
  std::optional<SkewLeftBracoid> left;
  std::optional<SkewRightBracoid> right;
  if (has_left) {
    auto g = group_from_json(detail::member(j, "$", "G"), "G");
    auto t = detail::read_matrix(j["left_action"], "left_action", g.order(), n.order(), n.order());
    left = SkewLeftBracoid::unchecked(LeftAction::unchecked(std::move(g), n, std::move(t)));
  }
  if (has_right) {
    auto h = group_from_json(detail::member(j, "$", "H"), "H");
    auto t = detail::read_matrix(j["right_action"], "right_action", n.order(), h.order(), n.order());
    right = SkewRightBracoid::unchecked(RightAction::unchecked(n, std::move(h), std::move(t)));
  }
  if (left && right) return TwoSidedSkewBracoid::unchecked(std::move(*left), std::move(*right));
  if (left) return std::move(*left);
  return std::move(*right);
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, source + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, path + ": cannot write file");
  out << text;
  if (!out) throw Error(ErrorKind::Parse, path + ": write failed");
}

inline Structure load_structure(const std::string& path) {
  return structure_from_json(parse_json_text(read_file(path), path));
}

inline void store_structure(const Structure& s, const std::string& path) {
  write_file(path, to_canonical_string(to_json(s)));
}

inline FiniteGroup load_group(const std::string& path) {
  return group_from_json(parse_json_text(read_file(path), path), path);
}

}  // namespace bracoid
