#pragma once

// Brute-force enumeration of bracoid and skew brace structures on small
// groups.
//
// Two independent searches produce left bracoids:
//   A. homomorphisms G -> Sym(N) built from images of a generating sequence,
//      drawn from a scan of all permutations of N;
//   B. pairs (orbit map g ↦ g⊙e, homomorphism γ: G -> Aut(N)), reassembled
//      as g⊙η = (g⊙e) ⋆ γ(g)η.
// Their outputs must agree as sets.

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bracoid/family.hpp"
#include "bracoid/two_sided.hpp"

namespace bracoid {

struct EnumOptions {
  /// Worker threads for strategy A; 0 picks the hardware concurrency.
  unsigned threads = 0;
  OrderCaps caps = OrderCaps::from_env();
};

template <class Structure>
struct EnumerationResult {
  std::vector<Structure> structures;
  std::size_t raw_count = 0;
  std::optional<std::size_t> iso_class_count;
};

/// Every group of order n up to isomorphism, for n <= 8.
inline std::vector<FiniteGroup> small_groups(std::size_t n) {
  switch (n) {
    case 1: return {cyclic(1)};
    case 2: return {cyclic(2)};
    case 3: return {cyclic(3)};
    case 4: return {cyclic(4), direct_product(cyclic(2), cyclic(2))};
    case 5: return {cyclic(5)};
    case 6: return {cyclic(6), dihedral(3)};
    case 7: return {cyclic(7)};
    case 8:
      return {cyclic(8), direct_product(cyclic(4), cyclic(2)),
              direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)), dihedral(4), presented_H(2)};
    default:
      throw Error(ErrorKind::OrderCapExceeded, "no group catalogue for order " + std::to_string(n));
  }
}

/// All groups of order at most n, by increasing order.
inline std::vector<FiniteGroup> small_groups_up_to(std::size_t n) {
  std::vector<FiniteGroup> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto gs = small_groups(k);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

namespace detail {

inline void require_cap(std::size_t order, std::size_t cap, std::string_view what) {
  if (order > cap) {
    throw Error(ErrorKind::OrderCapExceeded, std::string(what) + " has order " + std::to_string(order) +
                                                 ", cap is " + std::to_string(cap));
  }
}

inline std::size_t perm_order(const std::vector<Elem>& p) {
  std::size_t result = 1;
  std::vector<char> seen(p.size(), 0);
  for (Elem i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Elem j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

/// Permutations of {0..n-1} accepted by `keep`, in lexicographic order.
template <class Keep>
std::vector<std::vector<Elem>> scan_permutations(std::size_t n, Keep&& keep) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<std::vector<Elem>> out;
  do {
    if (keep(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

/// Homomorphisms G -> Sym(n) whose generator images come from `perms`
/// (restricted to compatible orders), kept when `keep(table)` holds.
/// Tables are row-major |G| x n with row g the permutation of g.
/// The work is split by the image of the first generator; the merged output
/// is sorted, so it does not depend on scheduling.
template <class Keep>
std::vector<std::vector<Elem>> search_action_homs(const FiniteGroup& g, std::size_t n,
                                                  const std::vector<std::vector<Elem>>& perms, Keep&& keep,
                                                  unsigned threads) {
  const auto gens = generating_sequence(g);
  const std::size_t k = gens.size();
  std::vector<std::vector<const std::vector<Elem>*>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& p : perms) {
      if (g.element_order(gens[i]) % perm_order(p) == 0) candidates[i].push_back(&p);
    }
  }

  // Extends images of gens[0..level] over the subgroup they generate.
  auto extend = [&](std::size_t levels, const std::vector<const std::vector<Elem>*>& images,
                    std::vector<Elem>& table, std::vector<char>& reached, std::vector<Elem>& queue) {
    std::fill(reached.begin(), reached.end(), 0);
    queue.clear();
    const Elem e = g.identity();
    for (Elem x = 0; x < n; ++x) table[e * n + x] = x;
    reached[e] = 1;
    queue.push_back(e);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (std::size_t i = 0; i < levels; ++i) {
        const Elem y = g.mul(x, gens[i]);
        const auto& img = *images[i];
        if (!reached[y]) {
          for (Elem eta = 0; eta < n; ++eta) table[y * n + eta] = table[x * n + img[eta]];
          reached[y] = 1;
          queue.push_back(y);
        } else {
          for (Elem eta = 0; eta < n; ++eta) {
            if (table[y * n + eta] != table[x * n + img[eta]]) return false;
          }
        }
      }
    }
    return true;
  };

  if (k == 0) {
    std::vector<Elem> table(n);
    std::iota(table.begin(), table.end(), Elem{0});
    std::vector<std::vector<Elem>> out;
    if (keep(table)) out.push_back(std::move(table));
    return out;
  }

  std::vector<std::vector<std::vector<Elem>>> partitions(candidates[0].size());
  parallel_for(candidates[0].size(), threads, [&](std::size_t first) {
    std::vector<const std::vector<Elem>*> images(k);
    std::vector<Elem> table(g.order() * n);
    std::vector<char> reached(g.order());
    std::vector<Elem> queue;
    auto& found = partitions[first];
    images[0] = candidates[0][first];
    if (!extend(1, images, table, reached, queue)) return;
    auto recurse = [&](auto&& self, std::size_t level) -> void {
      if (level == k) {
        if (keep(table)) found.push_back(table);
        return;
      }
      for (const auto* p : candidates[level]) {
        images[level] = p;
        if (!extend(level + 1, images, table, reached, queue)) continue;
        self(self, level + 1);
      }
    };
    recurse(recurse, 1);
  });

  std::vector<std::vector<Elem>> out;
  for (auto& part : partitions) {
    for (auto& t : part) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool table_transitive(const std::vector<Elem>& table, std::size_t g_order, std::size_t n, Elem start) {
  std::vector<char> in(n, 0);
  std::vector<Elem> found{start};
  in[start] = 1;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Elem a = 0; a < g_order; ++a) {
      const Elem y = table[a * n + found[head]];
      if (!in[y]) {
        in[y] = 1;
        found.push_back(y);
      }
    }
  }
  return found.size() == n;
}

/// p(μ⋆η) = p(μ) ⋆ p(e)‾ ⋆ p(η) for a single permutation p of N.
inline bool satisfies_bracoid_law(const FiniteGroup& n, const std::vector<Elem>& p) {
  const Elem base = n.inverse(p[n.identity()]);
  for (Elem mu = 0; mu < n.order(); ++mu) {
    const Elem left = n.mul(p[mu], base);
    for (Elem eta = 0; eta < n.order(); ++eta) {
      if (p[n.mul(mu, eta)] != n.mul(left, p[eta])) return false;
    }
  }
  return true;
}

/// Row-major |G| x |N| tables of every transitive left action, optionally
/// restricted to those satisfying the left bracoid law. Strategy A.
inline std::vector<std::vector<Elem>> left_action_tables(const FiniteGroup& g, const FiniteGroup& n,
                                                         bool bracoid_law, const EnumOptions& opts) {
  require_cap(g.order(), opts.caps.enumeration, "acting group");
  require_cap(n.order(), std::min(opts.caps.enumeration, opts.caps.permutation_scan), "N");
  const auto perms = scan_permutations(n.order(), [&](const std::vector<Elem>& p) {
    return !bracoid_law || satisfies_bracoid_law(n, p);
  });
  const std::size_t nn = n.order();
  return search_action_homs(
      g, nn, perms,
      [&](const std::vector<Elem>& table) {
        if (!table_transitive(table, g.order(), nn, n.identity())) return false;
        if (!bracoid_law) return true;
        for (Elem a = 0; a < g.order(); ++a) {
          const std::vector<Elem> row(table.begin() + static_cast<std::ptrdiff_t>(a * nn),
                                      table.begin() + static_cast<std::ptrdiff_t>((a + 1) * nn));
          if (!satisfies_bracoid_law(n, row)) return false;
        }
        return true;
      },
      opts.threads);
}

/// Transposes a left action table of op(H) into a right action table of H.
inline std::vector<Elem> transpose(const std::vector<Elem>& table, std::size_t rows, std::size_t cols) {
  std::vector<Elem> out(table.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out[c * rows + r] = table[r * cols + c];
  }
  return out;
}

}  // namespace detail

/// Strategy A: all skew left bracoid structures on (G, N).
inline EnumerationResult<SkewLeftBracoid> enumerate_left_bracoids(const FiniteGroup& g, const FiniteGroup& n,
                                                                  const EnumOptions& opts = {}) {
  EnumerationResult<SkewLeftBracoid> result;
  for (auto& table : detail::left_action_tables(g, n, true, opts)) {
    result.structures.push_back(make_left_bracoid(g, n, std::move(table)));
  }
  result.raw_count = result.structures.size();
  return result;
}

/// Strategy B: reassemble actions from an orbit map and a homomorphism into
/// Aut(N), keeping those that are genuine transitive actions.
inline EnumerationResult<SkewLeftBracoid> enumerate_left_bracoids_via_gamma(const FiniteGroup& g,
                                                                            const FiniteGroup& n,
                                                                            const EnumOptions& opts = {}) {
  detail::require_cap(g.order(), opts.caps.enumeration, "acting group");
  detail::require_cap(n.order(), opts.caps.automorphisms, "N");
  const std::size_t nn = n.order();
  const auto auts = automorphisms(n, opts.caps);
  std::map<std::vector<Elem>, std::size_t> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index.emplace(auts[i].images, i);

  // compose[i][j] = auts[i] ∘ auts[j]
  std::vector<std::vector<std::size_t>> compose(auts.size(), std::vector<std::size_t>(auts.size()));
  for (std::size_t i = 0; i < auts.size(); ++i) {
    for (std::size_t j = 0; j < auts.size(); ++j) {
      std::vector<Elem> c(nn);
      for (Elem x = 0; x < nn; ++x) c[x] = auts[i].images[auts[j].images[x]];
      compose[i][j] = index.at(c);
    }
  }
  std::vector<Elem> id_images(nn);
  std::iota(id_images.begin(), id_images.end(), Elem{0});
  const std::size_t id = index.at(id_images);
  std::vector<std::size_t> aut_order(auts.size());
  for (std::size_t i = 0; i < auts.size(); ++i) {
    std::size_t k = 1;
    for (std::size_t x = i; x != id; x = compose[x][i]) ++k;
    aut_order[i] = k;
  }

  const auto gens = generating_sequence(g);
  const std::size_t k = gens.size();
  auto comp = [&](std::size_t a, std::size_t b) { return compose[a][b]; };

  // Homomorphisms γ: G -> Aut(N) as aut indices per element of G.
  std::vector<std::vector<std::size_t>> homs;
  {
    std::vector<std::vector<std::size_t>> cand(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t a = 0; a < auts.size(); ++a) {
        if (g.element_order(gens[i]) % aut_order[a] == 0) cand[i].push_back(a);
      }
    }
    std::vector<std::size_t> images(k);
    std::vector<std::optional<std::size_t>> values;
    auto recurse = [&](auto&& self, std::size_t level) -> void {
      if (!extend_from_generators<std::size_t>(g, std::span(gens).first(level),
                                               std::span<const std::size_t>(images).first(level), id, comp,
                                               values)) {
        return;
      }
      if (level == k) {
        std::vector<std::size_t> hom(g.order());
        for (Elem x = 0; x < g.order(); ++x) hom[x] = *values[x];
        homs.push_back(std::move(hom));
        return;
      }
      for (std::size_t a : cand[level]) {
        images[level] = a;
        self(self, level + 1);
      }
    };
    recurse(recurse, 0);
  }

  std::vector<std::vector<Elem>> tables;
  std::vector<Elem> orbit_values(k);
  std::vector<Elem> orbit_map(g.order());
  std::vector<char> reached(g.order());
  std::vector<Elem> queue;
  for (const auto& hom : homs) {
    // Orbit maps satisfy o(x s) = o(x) ⋆ γ(x)(o(s)); enumerate o on the
    // generators and extend.
    auto recurse = [&](auto&& self, std::size_t level) -> void {
      if (level < k) {
        for (Elem c = 0; c < nn; ++c) {
          orbit_values[level] = c;
          self(self, level + 1);
        }
        return;
      }
      std::fill(reached.begin(), reached.end(), 0);
      queue.assign(1, g.identity());
      orbit_map[g.identity()] = n.identity();
      reached[g.identity()] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Elem x = queue[head];
        for (std::size_t i = 0; i < k; ++i) {
          const Elem y = g.mul(x, gens[i]);
          const Elem value = n.mul(orbit_map[x], auts[hom[x]].images[orbit_values[i]]);
          if (!reached[y]) {
            reached[y] = 1;
            orbit_map[y] = value;
            queue.push_back(y);
          } else if (orbit_map[y] != value) {
            return;
          }
        }
      }
      std::vector<Elem> table(g.order() * nn);
      for (Elem x = 0; x < g.order(); ++x) {
        for (Elem eta = 0; eta < nn; ++eta) table[x * nn + eta] = n.mul(orbit_map[x], auts[hom[x]].images[eta]);
      }
      const auto act = LeftAction::unchecked(g, n, table);
      if (!find_action_violation(act) && is_transitive(act)) tables.push_back(std::move(table));
    };
    recurse(recurse, 0);
  }
  std::sort(tables.begin(), tables.end());

  EnumerationResult<SkewLeftBracoid> result;
  for (auto& table : tables) result.structures.push_back(make_left_bracoid(g, n, std::move(table)));
  result.raw_count = result.structures.size();
  return result;
}

/// All transitive left actions of G on the elements of N (no bracoid law).
inline std::vector<LeftAction> enumerate_transitive_left_actions(const FiniteGroup& g, const FiniteGroup& n,
                                                                 const EnumOptions& opts = {}) {
  std::vector<LeftAction> out;
  for (auto& table : detail::left_action_tables(g, n, false, opts)) {
    out.push_back(make_left_action(g, n, std::move(table)));
  }
  return out;
}

/// All transitive right actions of H on the elements of N, found as left
/// actions of the opposite group.
inline std::vector<RightAction> enumerate_transitive_right_actions(const FiniteGroup& h, const FiniteGroup& n,
                                                                   const EnumOptions& opts = {}) {
  std::vector<std::vector<Elem>> tables;
  for (const auto& t : detail::left_action_tables(opposite(h), n, false, opts)) {
    tables.push_back(detail::transpose(t, h.order(), n.order()));
  }
  std::sort(tables.begin(), tables.end());
  std::vector<RightAction> out;
  for (auto& t : tables) out.push_back(make_right_action(n, h, std::move(t)));
  return out;
}

/// All skew right bracoid structures on (H, N), via the opposite group.
inline EnumerationResult<SkewRightBracoid> enumerate_right_bracoids(const FiniteGroup& h, const FiniteGroup& n,
                                                                    const EnumOptions& opts = {}) {
  std::vector<std::vector<Elem>> tables;
  for (const auto& t : detail::left_action_tables(opposite(h), n, true, opts)) {
    tables.push_back(detail::transpose(t, h.order(), n.order()));
  }
  std::sort(tables.begin(), tables.end());
  EnumerationResult<SkewRightBracoid> result;
  for (auto& t : tables) result.structures.push_back(make_right_bracoid(h, n, std::move(t)));
  result.raw_count = result.structures.size();
  return result;
}

/// Pairs of left and right structures on N whose actions commute.
inline EnumerationResult<TwoSidedSkewBracoid> enumerate_two_sided(const FiniteGroup& g, const FiniteGroup& h,
                                                                  const FiniteGroup& n,
                                                                  const EnumOptions& opts = {}) {
  const auto lefts = enumerate_left_bracoids(g, n, opts);
  const auto rights = enumerate_right_bracoids(h, n, opts);
  EnumerationResult<TwoSidedSkewBracoid> result;
  for (const auto& l : lefts.structures) {
    for (const auto& r : rights.structures) {
      if (!find_eq6_violation(l.action(), r.action())) {
        result.structures.push_back(TwoSidedSkewBracoid::unchecked(l, r));
      }
    }
  }
  result.raw_count = result.structures.size();
  return result;
}

/// All skew braces whose ⋆-group is n. Each comes from a transitive action of
/// a group G with |G| = |N| (hence regular) satisfying the left bracoid law:
/// a·b = g_a ⊙ b where g_a is the unique element with g_a ⊙ e = a.
inline EnumerationResult<SkewBrace> enumerate_braces(const FiniteGroup& n, const EnumOptions& opts = {}) {
  detail::require_cap(n.order(), opts.caps.braces, "N");
  const std::size_t nn = n.order();
  std::map<std::vector<Elem>, std::string> dots;
  for (const auto& g : small_groups(nn)) {
    for (const auto& table : detail::left_action_tables(g, n, true, opts)) {
      std::vector<Elem> rep(nn);
      for (Elem a = 0; a < g.order(); ++a) rep[table[a * nn + n.identity()]] = a;
      std::vector<Elem> dot(nn * nn);
      for (Elem a = 0; a < nn; ++a) {
        for (Elem b = 0; b < nn; ++b) dot[a * nn + b] = table[rep[a] * nn + b];
      }
      dots.emplace(std::move(dot), g.label());
    }
  }
  EnumerationResult<SkewBrace> result;
  for (auto& [dot, label] : dots) {
    result.structures.push_back(make_brace(n, make_group_flat(label, n.element_names(), dot)));
  }
  result.raw_count = result.structures.size();
  return result;
}

// ---------------------------------------------------------------------------
// Isomorphism classes. Two structures on the same groups are equivalent when
// automorphisms φ of the actor group(s) and ψ of N intertwine the actions,
// ψ(g⊙η) = φ(g)⊙'ψ(η). The representative of a class is its lexicographically
// smallest action table.

namespace detail {

inline std::vector<Elem> relabel_left(const std::vector<Elem>& table, const std::vector<Elem>& phi,
                                      const std::vector<Elem>& psi) {
  const std::size_t nn = psi.size();
  std::vector<Elem> out(table.size());
  for (Elem a = 0; a < phi.size(); ++a) {
    for (Elem eta = 0; eta < nn; ++eta) out[phi[a] * nn + psi[eta]] = psi[table[a * nn + eta]];
  }
  return out;
}

inline std::vector<Elem> relabel_right(const std::vector<Elem>& table, const std::vector<Elem>& chi,
                                       const std::vector<Elem>& psi) {
  const std::size_t hh = chi.size();
  std::vector<Elem> out(table.size());
  for (Elem eta = 0; eta < psi.size(); ++eta) {
    for (Elem c = 0; c < hh; ++c) out[psi[eta] * hh + chi[c]] = psi[table[eta * hh + c]];
  }
  return out;
}

template <class S, class Key, class Build>
EnumerationResult<S> dedupe_by(const EnumerationResult<S>& in, Key&& canonical_key, Build&& build) {
  std::set<std::vector<Elem>> keys;
  for (const auto& s : in.structures) keys.insert(canonical_key(s));
  EnumerationResult<S> out;
  for (const auto& k : keys) out.structures.push_back(build(k));
  out.raw_count = in.raw_count;
  out.iso_class_count = keys.size();
  return out;
}

inline void require_same_groups(bool same) {
  if (!same) throw Error(ErrorKind::InvalidParameter, "dedupe needs structures over identical groups");
}

}  // namespace detail

/// Relabels a left structure by automorphisms φ of G and ψ of N.
inline SkewLeftBracoid relabel(const SkewLeftBracoid& b, const GroupMap& phi, const GroupMap& psi) {
  return SkewLeftBracoid::unchecked(LeftAction::unchecked(
      b.g_group(), b.n_group(), detail::relabel_left(b.action().table(), phi.images, psi.images)));
}

inline std::vector<Elem> canonical_key(const SkewLeftBracoid& b, const std::vector<GroupMap>& aut_g,
                                       const std::vector<GroupMap>& aut_n) {
  std::optional<std::vector<Elem>> best;
  for (const auto& psi : aut_n) {
    for (const auto& phi : aut_g) {
      auto t = detail::relabel_left(b.action().table(), phi.images, psi.images);
      if (!best || t < *best) best = std::move(t);
    }
  }
  return *best;
}

inline EnumerationResult<SkewLeftBracoid> dedupe_isomorphic(const EnumerationResult<SkewLeftBracoid>& in,
                                                            const OrderCaps& caps = OrderCaps::from_env()) {
  if (in.structures.empty()) return {{}, in.raw_count, 0};
  const auto g = in.structures.front().g_group();
  const auto n = in.structures.front().n_group();
  for (const auto& s : in.structures) {
    detail::require_same_groups(s.g_group().same_structure(g) && s.n_group().same_structure(n));
  }
  const auto aut_g = automorphisms(g, caps);
  const auto aut_n = automorphisms(n, caps);
  return detail::dedupe_by(
      in, [&](const SkewLeftBracoid& s) { return canonical_key(s, aut_g, aut_n); },
      [&](const std::vector<Elem>& k) { return make_left_bracoid(g, n, k); });
}

inline EnumerationResult<SkewRightBracoid> dedupe_isomorphic(const EnumerationResult<SkewRightBracoid>& in,
                                                             const OrderCaps& caps = OrderCaps::from_env()) {
  if (in.structures.empty()) return {{}, in.raw_count, 0};
  const auto h = in.structures.front().h_group();
  const auto n = in.structures.front().n_group();
  for (const auto& s : in.structures) {
    detail::require_same_groups(s.h_group().same_structure(h) && s.n_group().same_structure(n));
  }
  const auto aut_h = automorphisms(h, caps);
  const auto aut_n = automorphisms(n, caps);
  return detail::dedupe_by(
      in,
      [&](const SkewRightBracoid& s) {
        std::optional<std::vector<Elem>> best;
        for (const auto& psi : aut_n) {
          for (const auto& chi : aut_h) {
            auto t = detail::relabel_right(s.action().table(), chi.images, psi.images);
            if (!best || t < *best) best = std::move(t);
          }
        }
        return *best;
      },
      [&](const std::vector<Elem>& k) { return make_right_bracoid(h, n, k); });
}

/// Two-sided classes use triples (φ, χ, ψ) with ψ shared by both sides. For
/// fixed ψ the two halves of the key are minimised independently.
inline EnumerationResult<TwoSidedSkewBracoid> dedupe_isomorphic(const EnumerationResult<TwoSidedSkewBracoid>& in,
                                                                const OrderCaps& caps = OrderCaps::from_env()) {
  if (in.structures.empty()) return {{}, in.raw_count, 0};
  const auto g = in.structures.front().g_group();
  const auto h = in.structures.front().h_group();
  const auto n = in.structures.front().n_group();
  for (const auto& s : in.structures) {
    detail::require_same_groups(s.g_group().same_structure(g) && s.h_group().same_structure(h) &&
                                s.n_group().same_structure(n));
  }
  const auto aut_g = automorphisms(g, caps);
  const auto aut_h = automorphisms(h, caps);
  const auto aut_n = automorphisms(n, caps);
  const std::size_t left_size = g.order() * n.order();
  return detail::dedupe_by(
      in,
      [&](const TwoSidedSkewBracoid& s) {
        std::optional<std::vector<Elem>> best;
        for (const auto& psi : aut_n) {
          std::optional<std::vector<Elem>> l, r;
          for (const auto& phi : aut_g) {
            auto t = detail::relabel_left(s.left().action().table(), phi.images, psi.images);
            if (!l || t < *l) l = std::move(t);
          }
          for (const auto& chi : aut_h) {
            auto t = detail::relabel_right(s.right().action().table(), chi.images, psi.images);
            if (!r || t < *r) r = std::move(t);
          }
          l->insert(l->end(), r->begin(), r->end());
          if (!best || *l < *best) best = std::move(l);
        }
        return *best;
      },
      [&](const std::vector<Elem>& k) {
        std::vector<Elem> lt(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(left_size));
        std::vector<Elem> rt(k.begin() + static_cast<std::ptrdiff_t>(left_size), k.end());
        return TwoSidedSkewBracoid::unchecked(make_left_bracoid(g, n, std::move(lt)),
                                              make_right_bracoid(h, n, std::move(rt)));
      });
}

/// Braces are equivalent under ψ ∈ Aut(N, ⋆) with ψ(a·b) = ψ(a)·ψ(b).
inline EnumerationResult<SkewBrace> dedupe_isomorphic(const EnumerationResult<SkewBrace>& in,
                                                      const OrderCaps& caps = OrderCaps::from_env()) {
  if (in.structures.empty()) return {{}, in.raw_count, 0};
  const auto n = in.structures.front().star();
  for (const auto& s : in.structures) detail::require_same_groups(s.star().same_structure(n));
  const auto aut_n = automorphisms(n, caps);
  std::map<std::vector<Elem>, std::string> labels;
  auto key = [&](const SkewBrace& s) {
    std::optional<std::vector<Elem>> best;
    for (const auto& psi : aut_n) {
      auto t = detail::relabel_left(s.dot().flat_table(), psi.images, psi.images);
      if (!best || t < *best) best = std::move(t);
    }
    labels.emplace(*best, s.dot().label());
    return *best;
  };
  return detail::dedupe_by(in, key, [&](const std::vector<Elem>& k) {
    return make_brace(n, make_group_flat(labels.at(k), n.element_names(), k));
  });
}

/// Number of distinct maps γ(g); invariant under the equivalence above.
inline std::size_t gamma_image_size(const SkewLeftBracoid& b) {
  std::set<std::vector<Elem>> maps;
  for (Elem a = 0; a < b.g_group().order(); ++a) maps.insert(gamma(b, a).images);
  return maps.size();
}

template <class S>
bool contains(const EnumerationResult<S>& result, const S& s) {
  return std::find(result.structures.begin(), result.structures.end(), s) != result.structures.end();
}

}  // namespace bracoid
