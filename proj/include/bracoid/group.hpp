#pragma once

// Finite groups stored as full Cayley tables, the closed-form families used
// throughout the library, and homomorphism / automorphism search.

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bracoid/error.hpp"

namespace bracoid {

using Elem = std::size_t;

/// Upper bounds on group orders accepted by the brute-force searches.
/// Setting BRACOID_ORDER_CAP overrides every cap at once.
struct OrderCaps {
  std::size_t automorphisms = 24;
  std::size_t enumeration = 12;
  // Strategy A scans all |N|! permutations of N.
  std::size_t permutation_scan = 8;
  std::size_t braces = 8;

  static OrderCaps from_env() {
    OrderCaps caps;
    if (const char* raw = std::getenv("BRACOID_ORDER_CAP"); raw != nullptr && *raw != '\0') {
      char* end = nullptr;
      const unsigned long value = std::strtoul(raw, &end, 10);
      if (end != nullptr && *end == '\0' && value > 0) {
        caps.automorphisms = caps.enumeration = caps.permutation_scan = caps.braces = value;
      }
    }
    return caps;
  }
};

namespace detail {

struct GroupData {
  std::string label;
  std::vector<std::string> names;
  std::vector<Elem> table;  // row-major, table[a * n + b] = a∘b
  Elem identity = 0;
  std::vector<Elem> inverses;
  std::vector<std::size_t> element_orders;
};

}  // namespace detail

/// An immutable finite group. Copies share the underlying table.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : data_(trivial_data()) {}

  std::size_t order() const noexcept { return data_->names.size(); }
  const std::string& label() const noexcept { return data_->label; }
  const std::vector<std::string>& element_names() const noexcept { return data_->names; }
  const std::string& element_name(Elem a) const { return data_->names.at(a); }

  Elem identity() const noexcept { return data_->identity; }
  Elem inverse(Elem a) const noexcept { return data_->inverses[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return data_->table[a * order() + b]; }
  Elem mul(Elem a, Elem b, Elem c) const noexcept { return mul(mul(a, b), c); }
  std::size_t element_order(Elem a) const noexcept { return data_->element_orders[a]; }

  std::span<const Elem> row(Elem a) const noexcept {
    return std::span<const Elem>(data_->table).subspan(a * order(), order());
  }
  const std::vector<Elem>& flat_table() const noexcept { return data_->table; }
  const std::vector<Elem>& inverses() const noexcept { return data_->inverses; }

  Elem power(Elem a, long long k) const {
    Elem base = k < 0 ? inverse(a) : a;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Elem acc = identity();
    for (; e != 0; e >>= 1) {
      if (e & 1U) acc = mul(acc, base);
      base = mul(base, base);
    }
    return acc;
  }

  std::optional<Elem> find(std::string_view name) const {
    const auto& names = data_->names;
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<Elem>(it - names.begin());
  }

  /// Same element names and multiplication; the label is ignored.
  bool same_structure(const FiniteGroup& other) const noexcept {
    return data_ == other.data_ ||
           (data_->names == other.data_->names && data_->table == other.data_->table);
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.same_structure(b) && a.label() == b.label();
  }

 private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

  static std::shared_ptr<const detail::GroupData> trivial_data() {
    static const auto data = [] {
      auto d = std::make_shared<detail::GroupData>();
      d->label = "C1";
      d->names = {"e"};
      d->table = {0};
      d->inverses = {0};
      d->element_orders = {1};
      return std::shared_ptr<const detail::GroupData>(std::move(d));
    }();
    return data;
  }

  friend FiniteGroup make_group_flat(std::string label, std::vector<std::string> names,
                                     std::vector<Elem> table);

  std::shared_ptr<const detail::GroupData> data_;
};

/// Validates a row-major Cayley table and builds the group.
/// Throws Error with the first violating tuple named in the witness.
inline FiniteGroup make_group_flat(std::string label, std::vector<std::string> names,
                                   std::vector<Elem> table) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::Shape, "a group needs at least one element");
  if (table.size() != n * n) {
    throw Error(ErrorKind::Shape, "table has " + std::to_string(table.size()) +
                                      " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "table[" + std::to_string(i / n) + "][" + std::to_string(i % n) + "] = " +
                      std::to_string(table[i]) + " (order " + std::to_string(n) + ")");
    }
  }
  {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) {
        throw Error(ErrorKind::DuplicateElementName, "element name '" + name + "' repeats");
      }
    }
  }
  auto at = [&](Elem a, Elem b) { return table[a * n + b]; };
  auto nm = [&](std::string_view key, Elem a) { return std::string(key) + "=" + names[a]; };

  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[at(a, b)]++) throw Error(ErrorKind::NotLatinSquare, "row repeats an entry", {nm("row", a), nm("col", b)});
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      if (seen[at(a, b)]++) throw Error(ErrorKind::NotLatinSquare, "column repeats an entry", {nm("row", a), nm("col", b)});
    }
  }

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no two-sided identity");

  std::vector<Elem> inverses(n);
  for (Elem a = 0; a < n; ++a) {
    std::optional<Elem> inv;
    for (Elem b = 0; b < n && !inv; ++b) {
      if (at(a, b) == *identity && at(b, a) == *identity) inv = b;
    }
    if (!inv) throw Error(ErrorKind::NoInverse, "element has no two-sided inverse", {nm("a", a)});
    inverses[a] = *inv;
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw Error(ErrorKind::NotAssociative, "(ab)c != a(bc)", {nm("a", a), nm("b", b), nm("c", c)});
        }
      }
    }
  }

  std::vector<std::size_t> orders(n);
  for (Elem a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != *identity; x = at(x, a)) ++k;
    orders[a] = k;
  }

  auto data = std::make_shared<detail::GroupData>();
  data->label = std::move(label);
  data->names = std::move(names);
  data->table = std::move(table);
  data->identity = *identity;
  data->inverses = std::move(inverses);
  data->element_orders = std::move(orders);
  return FiniteGroup(std::move(data));
}

inline FiniteGroup make_group_from_table(std::vector<std::string> element_names,
                                         const std::vector<std::vector<Elem>>& table,
                                         std::string label = "") {
  const std::size_t n = element_names.size();
  if (table.size() != n) {
    throw Error(ErrorKind::Shape, "table has " + std::to_string(table.size()) + " rows, expected " +
                                      std::to_string(n));
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorKind::Shape, "table row " + std::to_string(r) + " has " +
                                        std::to_string(table[r].size()) + " entries, expected " +
                                        std::to_string(n));
    }
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return make_group_flat(std::move(label), std::move(element_names), std::move(flat));
}

/// "name=element" witness entry.
inline std::string named(std::string_view key, const FiniteGroup& g, Elem a) {
  return std::string(key) + "=" + g.element_name(a);
}

namespace detail {

/// Mathematical modulus, result in [0, m).
constexpr long long mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

constexpr long long sign_pow(long long j) { return (j % 2 == 0) ? 1 : -1; }

template <class Mul>
FiniteGroup tabulate(std::string label, std::vector<std::string> names, Mul&& mul) {
  const std::size_t n = names.size();
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[a * n + b] = mul(a, b);
  }
  return make_group_flat(std::move(label), std::move(names), std::move(table));
}

inline void require_positive(std::size_t value, std::string_view what) {
  if (value == 0) throw Error(ErrorKind::InvalidParameter, std::string(what) + " must be at least 1");
}

}  // namespace detail

/// Z_n with element i named "g^i".
inline FiniteGroup cyclic(std::size_t n) {
  detail::require_positive(n, "cyclic order n");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g^" + std::to_string(i));
  return detail::tabulate("C" + std::to_string(n), std::move(names),
                          [n](Elem a, Elem b) { return (a + b) % n; });
}

/// D_d of order 2d. Element index r + d*s is μ^r η^s, and
/// μ^{r1}η^{s1} ⋆ μ^{r2}η^{s2} = μ^{r1 + (-1)^{s1} r2} η^{s1 + s2}.
inline FiniteGroup dihedral(std::size_t d) {
  detail::require_positive(d, "dihedral parameter d");
  const auto dd = static_cast<long long>(d);
  std::vector<std::string> names;
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t r = 0; r < d; ++r) {
      names.push_back("μ^" + std::to_string(r) + " η^" + std::to_string(s));
    }
  }
  return detail::tabulate("D" + std::to_string(d), std::move(names), [dd](Elem a, Elem b) {
    const long long r1 = static_cast<long long>(a) % dd, s1 = static_cast<long long>(a) / dd;
    const long long r2 = static_cast<long long>(b) % dd, s2 = static_cast<long long>(b) / dd;
    const long long r = detail::mod(r1 + detail::sign_pow(s1) * r2, dd);
    const long long s = (s1 + s2) % 2;
    return static_cast<Elem>(r + dd * s);
  });
}

/// ⟨x, y | x^t = y^4 = 1, x^y = x^{-1}⟩ of order 4t; index i + t*j is x^i y^j.
inline FiniteGroup presented_G(std::size_t t) {
  detail::require_positive(t, "presented_G parameter t");
  const auto tt = static_cast<long long>(t);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < t; ++i) {
      names.push_back("x^" + std::to_string(i) + " y^" + std::to_string(j));
    }
  }
  return detail::tabulate("GT" + std::to_string(t), std::move(names), [tt](Elem a, Elem b) {
    const long long i1 = static_cast<long long>(a) % tt, j1 = static_cast<long long>(a) / tt;
    const long long i2 = static_cast<long long>(b) % tt, j2 = static_cast<long long>(b) / tt;
    const long long i = detail::mod(i1 + detail::sign_pow(j1) * i2, tt);
    const long long j = (j1 + j2) % 4;
    return static_cast<Elem>(i + tt * j);
  });
}

/// ⟨a, b | a^{2w} = 1, a^w = b^2, a^b = a^{-1}⟩ of order 4w; index k + 2w*l is
/// a^k b^l. Moving b past b contributes b^2 = a^w, hence the w*l1*l2 term.
inline FiniteGroup presented_H(std::size_t w) {
  detail::require_positive(w, "presented_H parameter w");
  const auto ww = static_cast<long long>(w);
  const long long m = 2 * ww;
  std::vector<std::string> names;
  for (std::size_t l = 0; l < 2; ++l) {
    for (long long k = 0; k < m; ++k) {
      names.push_back("a^" + std::to_string(k) + " b^" + std::to_string(l));
    }
  }
  return detail::tabulate("HW" + std::to_string(w), std::move(names), [ww, m](Elem a, Elem b) {
    const long long k1 = static_cast<long long>(a) % m, l1 = static_cast<long long>(a) / m;
    const long long k2 = static_cast<long long>(b) % m, l2 = static_cast<long long>(b) / m;
    const long long k = detail::mod(k1 + detail::sign_pow(l1) * k2 + ww * l1 * l2, m);
    const long long l = (l1 + l2) % 2;
    return static_cast<Elem>(k + m * l);
  });
}

/// Componentwise product; index i1 * |G2| + i2 is "(name1,name2)".
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t n2 = g2.order();
  std::vector<std::string> names;
  for (Elem a = 0; a < g1.order(); ++a) {
    for (Elem b = 0; b < n2; ++b) {
      names.push_back("(" + g1.element_name(a) + "," + g2.element_name(b) + ")");
    }
  }
  return detail::tabulate(g1.label() + " x " + g2.label(), std::move(names), [&](Elem a, Elem b) {
    return g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2);
  });
}

/// Same elements, product a*b := b∘a.
inline FiniteGroup opposite(const FiniteGroup& g) {
  return detail::tabulate("op(" + g.label() + ")", g.element_names(),
                          [&](Elem a, Elem b) { return g.mul(b, a); });
}

inline bool is_abelian(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

/// First non-commuting pair, if any.
inline std::optional<std::pair<Elem, Elem>> noncommuting_pair(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

/// Greedy generating sequence: walk elements in index order and keep each
/// one that enlarges the generated subgroup.
inline std::vector<Elem> generating_sequence(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  for (Elem x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    std::fill(in.begin(), in.end(), 0);
    std::vector<Elem> queue{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Elem s : gens) {
        const Elem y = g.mul(queue[head], s);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

/// Extends generator images to the subgroup they generate by
/// value(x s_i) = mul(value(x), image_i), breadth first from the identity.
/// Returns false if some element receives two different values, i.e. the
/// assignment does not respect the relations. `out` holds nullopt for
/// elements outside the generated subgroup.
template <class Image, class Mul>
bool extend_from_generators(const FiniteGroup& g, std::span<const Elem> gens,
                            std::span<const Image> images, const Image& unit, Mul&& mul,
                            std::vector<std::optional<Image>>& out) {
  out.assign(g.order(), std::nullopt);
  out[g.identity()] = unit;
  std::vector<Elem> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem y = g.mul(x, gens[i]);
      Image candidate = mul(*out[x], images[i]);
      if (!out[y]) {
        out[y] = std::move(candidate);
        queue.push_back(y);
      } else if (!(*out[y] == candidate)) {
        return false;
      }
    }
  }
  return true;
}

/// A map between finite groups given by the image of every source element.
struct GroupMap {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> images;

  Elem operator()(Elem a) const { return images.at(a); }

  bool is_bijective() const {
    if (source.order() != target.order() || images.size() != source.order()) return false;
    std::vector<char> hit(target.order(), 0);
    for (Elem y : images) {
      if (y >= target.order() || hit[y]++) return false;
    }
    return true;
  }

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.images == b.images && a.source.same_structure(b.source) &&
           a.target.same_structure(b.target);
  }
};

inline bool is_homomorphism(const GroupMap& m) {
  const auto& s = m.source;
  const auto& t = m.target;
  if (m.images.size() != s.order()) return false;
  for (Elem y : m.images) {
    if (y >= t.order()) return false;
  }
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < s.order(); ++b) {
      if (m.images[s.mul(a, b)] != t.mul(m.images[a], m.images[b])) return false;
    }
  }
  return true;
}

/// outer ∘ inner.
inline GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  GroupMap out{inner.source, outer.target, std::vector<Elem>(inner.images.size())};
  for (std::size_t i = 0; i < inner.images.size(); ++i) out.images[i] = outer.images[inner.images[i]];
  return out;
}

inline GroupMap inverse_map(const GroupMap& m) {
  if (!m.is_bijective()) throw Error(ErrorKind::InvalidParameter, "map is not bijective");
  GroupMap out{m.target, m.source, std::vector<Elem>(m.images.size())};
  for (std::size_t i = 0; i < m.images.size(); ++i) out.images[m.images[i]] = i;
  return out;
}

inline GroupMap identity_map(const FiniteGroup& g) {
  GroupMap out{g, g, std::vector<Elem>(g.order())};
  std::iota(out.images.begin(), out.images.end(), Elem{0});
  return out;
}

/// All isomorphisms source → target, sorted by image list. The search assigns
/// images to a greedy generating sequence of the source, restricted to
/// elements of equal order.
inline std::vector<GroupMap> isomorphisms(const FiniteGroup& source, const FiniteGroup& target,
                                          const OrderCaps& caps = OrderCaps::from_env()) {
  if (source.order() > caps.automorphisms || target.order() > caps.automorphisms) {
    throw Error(ErrorKind::OrderCapExceeded,
                "isomorphism search is capped at order " + std::to_string(caps.automorphisms));
  }
  std::vector<GroupMap> out;
  if (source.order() != target.order()) return out;
  const auto gens = generating_sequence(source);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem y = 0; y < target.order(); ++y) {
      if (target.element_order(y) == source.element_order(gens[i])) candidates[i].push_back(y);
    }
  }
  std::vector<Elem> images(gens.size());
  std::vector<std::optional<Elem>> values;
  auto tmul = [&](Elem a, Elem b) { return target.mul(a, b); };
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == gens.size()) {
      if (!extend_from_generators<Elem>(source, gens, images, target.identity(), tmul, values)) return;
      GroupMap m{source, target, std::vector<Elem>(source.order())};
      for (Elem a = 0; a < source.order(); ++a) m.images[a] = *values[a];
      if (m.is_bijective()) out.push_back(std::move(m));
      return;
    }
    for (Elem y : candidates[level]) {
      images[level] = y;
      // Prune on the subgroup generated so far.
      if (!extend_from_generators<Elem>(source, std::span(gens).first(level + 1),
                                        std::span<const Elem>(images).first(level + 1),
                                        target.identity(), tmul, values)) {
        continue;
      }
      self(self, level + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(),
            [](const GroupMap& a, const GroupMap& b) { return a.images < b.images; });
  return out;
}

/// Aut(G) by generator-image search. Throws OrderCapExceeded above the cap.
inline std::vector<GroupMap> automorphisms(const FiniteGroup& g,
                                           const OrderCaps& caps = OrderCaps::from_env()) {
  return isomorphisms(g, g, caps);
}

inline bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                           const OrderCaps& caps = OrderCaps::from_env()) {
  return !isomorphisms(a, b, caps).empty();
}

}  // namespace bracoid
