#pragma once

// Skew left/right bracoids, skew braces, the derived maps γ, δ, α, β, and
// exhaustive checkers for the identities they satisfy.
//
// Notation in comments: ⊙ left action of G, ⊡ right action of H, ⋆ the
// product of N, x̄ the ⋆-inverse, e the identity of N.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracoid/action.hpp"
#include "bracoid/error.hpp"
#include "bracoid/group.hpp"
#include "bracoid/report.hpp"

namespace bracoid {

/// A self-map of N given by its images.
struct NMap {
  std::vector<Elem> images;

  Elem operator()(Elem eta) const { return images.at(eta); }

  bool is_bijective() const {
    std::vector<char> hit(images.size(), 0);
    for (Elem y : images) {
      if (y >= images.size() || hit[y]++) return false;
    }
    return true;
  }

  std::optional<NMap> inverse() const {
    if (!is_bijective()) return std::nullopt;
    NMap out{std::vector<Elem>(images.size())};
    for (Elem i = 0; i < images.size(); ++i) out.images[images[i]] = i;
    return out;
  }

  bool is_identity() const {
    for (Elem i = 0; i < images.size(); ++i) {
      if (images[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const NMap&, const NMap&) = default;
};

// ---------------------------------------------------------------------------
// Derived maps, defined on bare actions so they also apply to raw input.

/// γ(g): η ↦ (g⊙e)‾ ⋆ (g⊙η).
inline NMap gamma(const LeftAction& act, Elem g) {
  const auto& n = act.space();
  const Elem base = n.inverse(act(g, n.identity()));
  NMap out{std::vector<Elem>(n.order())};
  for (Elem eta = 0; eta < n.order(); ++eta) out.images[eta] = n.mul(base, act(g, eta));
  return out;
}

/// α(g): η ↦ γ(g)η ⋆ η̄.
inline NMap alpha(const LeftAction& act, Elem g) {
  const auto& n = act.space();
  NMap out = gamma(act, g);
  for (Elem eta = 0; eta < n.order(); ++eta) out.images[eta] = n.mul(out.images[eta], n.inverse(eta));
  return out;
}

/// δ(h): η ↦ (η⊡h) ⋆ (e⊡h)‾.
inline NMap delta(const RightAction& act, Elem h) {
  const auto& n = act.space();
  const Elem base = n.inverse(act(n.identity(), h));
  NMap out{std::vector<Elem>(n.order())};
  for (Elem eta = 0; eta < n.order(); ++eta) out.images[eta] = n.mul(act(eta, h), base);
  return out;
}

/// β(h): η ↦ η̄ ⋆ (η⊡h) ⋆ (e⊡h)‾. Needs only a right action, no bracoid law.
inline NMap beta(const RightAction& act, Elem h) {
  const auto& n = act.space();
  const Elem base = n.inverse(act(n.identity(), h));
  NMap out{std::vector<Elem>(n.order())};
  for (Elem eta = 0; eta < n.order(); ++eta) {
    out.images[eta] = n.mul(n.inverse(eta), act(eta, h), base);
  }
  return out;
}

namespace detail {

/// All γ(g) (resp. α(g), δ(h), β(h)) at once, row g holding the images.
template <class Action, class MapFn>
std::vector<Elem> map_table(const Action& act, MapFn&& fn) {
  const std::size_t n = act.space().order();
  std::vector<Elem> out(act.actor().order() * n);
  for (Elem a = 0; a < act.actor().order(); ++a) {
    const NMap m = fn(act, a);
    std::copy(m.images.begin(), m.images.end(), out.begin() + static_cast<std::ptrdiff_t>(a * n));
  }
  return out;
}

inline Witness first_unreached(const LeftAction& act) {
  const auto orb = orbit(act, act.space().identity());
  if (orb.size() == act.space().order()) return std::nullopt;
  for (Elem eta = 0; eta < act.space().order(); ++eta) {
    if (!std::binary_search(orb.begin(), orb.end(), eta)) {
      return WitnessList{"violation=NotTransitive", "unreached η=" + act.space().element_name(eta)};
    }
  }
  return std::nullopt;
}

inline Witness first_unreached(const RightAction& act) {
  const auto orb = orbit(act, act.space().identity());
  if (orb.size() == act.space().order()) return std::nullopt;
  for (Elem eta = 0; eta < act.space().order(); ++eta) {
    if (!std::binary_search(orb.begin(), orb.end(), eta)) {
      return WitnessList{"violation=NotTransitive", "unreached η=" + act.space().element_name(eta)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// First failure of g⊙(μ⋆η) = (g⊙μ) ⋆ (g⊙e)‾ ⋆ (g⊙η).
inline std::optional<Violation> find_eq2_violation(const LeftAction& act) {
  const auto& g = act.actor();
  const auto& n = act.space();
  for (Elem a = 0; a < g.order(); ++a) {
    const Elem base = n.inverse(act(a, n.identity()));
    for (Elem mu = 0; mu < n.order(); ++mu) {
      const Elem left = n.mul(act(a, mu), base);
      for (Elem eta = 0; eta < n.order(); ++eta) {
        if (act(a, n.mul(mu, eta)) != n.mul(left, act(a, eta))) {
          return Violation{ErrorKind::Eq2Violated,
                           {named("g", g, a), named("μ", n, mu), named("η", n, eta)}};
        }
      }
    }
  }
  return std::nullopt;
}

/// First failure of (η⋆μ)⊡h = (η⊡h) ⋆ (e⊡h)‾ ⋆ (μ⊡h).
inline std::optional<Violation> find_eq4_violation(const RightAction& act) {
  const auto& h = act.actor();
  const auto& n = act.space();
  for (Elem a = 0; a < h.order(); ++a) {
    const Elem base = n.inverse(act(n.identity(), a));
    for (Elem eta = 0; eta < n.order(); ++eta) {
      const Elem left = n.mul(act(eta, a), base);
      for (Elem mu = 0; mu < n.order(); ++mu) {
        if (act(n.mul(eta, mu), a) != n.mul(left, act(mu, a))) {
          return Violation{ErrorKind::Eq4Violated,
                           {named("h", h, a), named("η", n, eta), named("μ", n, mu)}};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structures.

class SkewLeftBracoid {
 public:
  /// No law is verified; for feeding deliberately broken input to checkers.
  static SkewLeftBracoid unchecked(LeftAction action) { return SkewLeftBracoid(std::move(action)); }

  const LeftAction& action() const noexcept { return action_; }
  const FiniteGroup& g_group() const noexcept { return action_.actor(); }
  const FiniteGroup& n_group() const noexcept { return action_.space(); }
  Elem act(Elem g, Elem eta) const noexcept { return action_(g, eta); }

  friend bool operator==(const SkewLeftBracoid&, const SkewLeftBracoid&) = default;

 private:
  explicit SkewLeftBracoid(LeftAction action) : action_(std::move(action)) {}
  LeftAction action_;
};

class SkewRightBracoid {
 public:
  static SkewRightBracoid unchecked(RightAction action) { return SkewRightBracoid(std::move(action)); }

  const RightAction& action() const noexcept { return action_; }
  const FiniteGroup& h_group() const noexcept { return action_.actor(); }
  const FiniteGroup& n_group() const noexcept { return action_.space(); }
  Elem act(Elem eta, Elem h) const noexcept { return action_(eta, h); }

  friend bool operator==(const SkewRightBracoid&, const SkewRightBracoid&) = default;

 private:
  explicit SkewRightBracoid(RightAction action) : action_(std::move(action)) {}
  RightAction action_;
};

/// Action laws, transitivity and the left bracoid law, in that order.
inline std::optional<Violation> find_left_bracoid_violation(const LeftAction& act) {
  if (auto v = find_action_violation(act)) return v;
  if (auto w = detail::first_unreached(act)) {
    return Violation{ErrorKind::NotTransitive, {w->begin() + 1, w->end()}};
  }
  return find_eq2_violation(act);
}

inline std::optional<Violation> find_right_bracoid_violation(const RightAction& act) {
  if (auto v = find_action_violation(act)) return v;
  if (auto w = detail::first_unreached(act)) {
    return Violation{ErrorKind::NotTransitive, {w->begin() + 1, w->end()}};
  }
  return find_eq4_violation(act);
}

inline SkewLeftBracoid make_left_bracoid(LeftAction action) {
  if (auto v = find_left_bracoid_violation(action)) throw Error(*v, "left bracoid");
  return SkewLeftBracoid::unchecked(std::move(action));
}

inline SkewLeftBracoid make_left_bracoid(FiniteGroup g, FiniteGroup n, std::vector<Elem> table) {
  return make_left_bracoid(LeftAction::unchecked(std::move(g), std::move(n), std::move(table)));
}

inline SkewRightBracoid make_right_bracoid(RightAction action) {
  if (auto v = find_right_bracoid_violation(action)) throw Error(*v, "right bracoid");
  return SkewRightBracoid::unchecked(std::move(action));
}

inline SkewRightBracoid make_right_bracoid(FiniteGroup h, FiniteGroup n, std::vector<Elem> table) {
  return make_right_bracoid(RightAction::unchecked(std::move(n), std::move(h), std::move(table)));
}

inline NMap gamma(const SkewLeftBracoid& b, Elem g) { return gamma(b.action(), g); }
inline NMap alpha(const SkewLeftBracoid& b, Elem g) { return alpha(b.action(), g); }
inline NMap delta(const SkewRightBracoid& b, Elem h) { return delta(b.action(), h); }
inline NMap beta(const SkewRightBracoid& b, Elem h) { return beta(b.action(), h); }

// ---------------------------------------------------------------------------
// Checkers. Every property is scanned exhaustively; a failing property keeps
// its first counterexample.

inline CheckReport check_left_bracoid_axioms(const SkewLeftBracoid& b) {
  CheckReport r;
  const auto& act = b.action();
  r.add("left.action_laws", to_witness(find_action_violation(act)));
  r.add("left.transitive", detail::first_unreached(act));
  r.add("left.eq2", to_witness(find_eq2_violation(act)));
  return r;
}

inline CheckReport check_right_bracoid_axioms(const SkewRightBracoid& b) {
  CheckReport r;
  const auto& act = b.action();
  r.add("right.action_laws", to_witness(find_action_violation(act)));
  r.add("right.transitive", detail::first_unreached(act));
  r.add("right.eq4", to_witness(find_eq4_violation(act)));
  return r;
}

/// (g⊙e) ⋆ γ(g)η = g⊙η;  (g⊙e) ⋆ η = g⊙(γ(g)⁻¹η);  γ(g)(g⁻¹⊙e) = (g⊙e)‾.
inline CheckReport check_remark_identities(const SkewLeftBracoid& b) {
  const auto& g = b.g_group();
  const auto& n = b.n_group();
  const auto& act = b.action();
  const Elem e = n.identity();
  CheckReport r;

  r.add("remark.orbit_factorization", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      const NMap gm = gamma(act, a);
      for (Elem eta = 0; eta < n.order(); ++eta) {
        if (n.mul(act(a, e), gm.images[eta]) != act(a, eta)) {
          return WitnessList{named("g", g, a), named("η", n, eta)};
        }
      }
    }
    return std::nullopt;
  }());

  r.add("remark.inverse_gamma", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      const auto inv = gamma(act, a).inverse();
      if (!inv) return WitnessList{named("g", g, a), "γ(g) is not bijective"};
      for (Elem eta = 0; eta < n.order(); ++eta) {
        if (n.mul(act(a, e), eta) != act(a, inv->images[eta])) {
          return WitnessList{named("g", g, a), named("η", n, eta)};
        }
      }
    }
    return std::nullopt;
  }());

  r.add("remark.gamma_of_inverse_orbit", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      const NMap gm = gamma(act, a);
      if (gm.images[act(g.inverse(a), e)] != n.inverse(act(a, e))) {
        return WitnessList{named("g", g, a)};
      }
    }
    return std::nullopt;
  }());
  return r;
}

/// (g⊙e)‾ ⋆ (g⊙η̄) ⋆ (g⊙e)‾ = (g⊙η)‾.
inline CheckReport check_inverse_identity(const SkewLeftBracoid& b) {
  const auto& g = b.g_group();
  const auto& n = b.n_group();
  const auto& act = b.action();
  CheckReport r;
  r.add("inverse_identity", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      const Elem base = n.inverse(act(a, n.identity()));
      for (Elem eta = 0; eta < n.order(); ++eta) {
        if (n.mul(base, act(a, n.inverse(eta)), base) != n.inverse(act(a, eta))) {
          return WitnessList{named("g", g, a), named("η", n, eta)};
        }
      }
    }
    return std::nullopt;
  }());
  return r;
}

inline CheckReport check_alpha_properties(const SkewLeftBracoid& b) {
  const auto& g = b.g_group();
  const auto& n = b.n_group();
  const std::size_t nn = n.order();
  const auto al = detail::map_table(b.action(), [](const LeftAction& a, Elem x) { return alpha(a, x); });
  auto A = [&](Elem a, Elem eta) { return al[a * nn + eta]; };
  const Elem e = n.identity();
  CheckReport r;

  // α(g)(η⋆μ) = α(g)η ⋆ η ⋆ α(g)μ ⋆ η̄
  r.add("alpha.1_product_rule", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem eta = 0; eta < nn; ++eta) {
        for (Elem mu = 0; mu < nn; ++mu) {
          const Elem rhs = n.mul(n.mul(A(a, eta), eta), n.mul(A(a, mu), n.inverse(eta)));
          if (A(a, n.mul(eta, mu)) != rhs) {
            return WitnessList{named("g", g, a), named("η", n, eta), named("μ", n, mu)};
          }
        }
      }
    }
    return std::nullopt;
  }());

  // α(g)e = α(e_G)η = e
  r.add("alpha.2_trivial_values", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      if (A(a, e) != e) return WitnessList{named("g", g, a), named("η", n, e)};
    }
    for (Elem eta = 0; eta < nn; ++eta) {
      if (A(g.identity(), eta) != e) return WitnessList{named("g", g, g.identity()), named("η", n, eta)};
    }
    return std::nullopt;
  }());

  // α(g)η̄ = η̄ ⋆ (α(g)η)‾ ⋆ η
  r.add("alpha.3_inverse_rule", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem eta = 0; eta < nn; ++eta) {
        const Elem inv = n.inverse(eta);
        if (A(a, inv) != n.mul(inv, n.inverse(A(a, eta)), eta)) {
          return WitnessList{named("g", g, a), named("η", n, eta)};
        }
      }
    }
    return std::nullopt;
  }());

  // α(gh)η = α(g)(α(h)η) ⋆ α(h)η ⋆ α(g)η
  r.add("alpha.4_composition_rule", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem c = 0; c < g.order(); ++c) {
        const Elem ac = g.mul(a, c);
        for (Elem eta = 0; eta < nn; ++eta) {
          const Elem rhs = n.mul(A(a, A(c, eta)), A(c, eta), A(a, eta));
          if (A(ac, eta) != rhs) {
            return WitnessList{named("g", g, a), named("h", g, c), named("η", n, eta)};
          }
        }
      }
    }
    return std::nullopt;
  }());
  return r;
}

inline CheckReport check_beta_properties(const SkewRightBracoid& b) {
  const auto& h = b.h_group();
  const auto& n = b.n_group();
  const std::size_t nn = n.order();
  const auto bt = detail::map_table(b.action(), [](const RightAction& a, Elem x) { return beta(a, x); });
  // B(h, η) = η^{β(h)}
  auto B = [&](Elem a, Elem eta) { return bt[a * nn + eta]; };
  const Elem e = n.identity();
  CheckReport r;

  // (μ⋆η)^β = η̄ ⋆ μ^β ⋆ η ⋆ η^β
  r.add("beta.1_product_rule", [&]() -> Witness {
    for (Elem a = 0; a < h.order(); ++a) {
      for (Elem mu = 0; mu < nn; ++mu) {
        for (Elem eta = 0; eta < nn; ++eta) {
          const Elem rhs = n.mul(n.mul(n.inverse(eta), B(a, mu)), n.mul(eta, B(a, eta)));
          if (B(a, n.mul(mu, eta)) != rhs) {
            return WitnessList{named("h", h, a), named("μ", n, mu), named("η", n, eta)};
          }
        }
      }
    }
    return std::nullopt;
  }());

  r.add("beta.2_trivial_values", [&]() -> Witness {
    for (Elem a = 0; a < h.order(); ++a) {
      if (B(a, e) != e) return WitnessList{named("h", h, a), named("η", n, e)};
    }
    for (Elem eta = 0; eta < nn; ++eta) {
      if (B(h.identity(), eta) != e) return WitnessList{named("h", h, h.identity()), named("η", n, eta)};
    }
    return std::nullopt;
  }());

  // η̄^β = η ⋆ (η^β)‾ ⋆ η̄
  r.add("beta.3_inverse_rule", [&]() -> Witness {
    for (Elem a = 0; a < h.order(); ++a) {
      for (Elem eta = 0; eta < nn; ++eta) {
        const Elem inv = n.inverse(eta);
        if (B(a, inv) != n.mul(eta, n.inverse(B(a, eta)), inv)) {
          return WitnessList{named("h", h, a), named("η", n, eta)};
        }
      }
    }
    return std::nullopt;
  }());
  return r;
}

namespace detail {

/// First map in `table` (rows indexed by actor) that is not a bijective
/// ⋆-endomorphism of n.
inline Witness first_non_automorphism(const FiniteGroup& actor, const FiniteGroup& n,
                                      const std::vector<Elem>& table, std::string_view key) {
  const std::size_t nn = n.order();
  for (Elem a = 0; a < actor.order(); ++a) {
    const NMap m{std::vector<Elem>(table.begin() + static_cast<std::ptrdiff_t>(a * nn),
                                   table.begin() + static_cast<std::ptrdiff_t>((a + 1) * nn))};
    if (!m.is_bijective()) return WitnessList{named(key, actor, a), "not bijective"};
    for (Elem x = 0; x < nn; ++x) {
      for (Elem y = 0; y < nn; ++y) {
        if (m.images[n.mul(x, y)] != n.mul(m.images[x], m.images[y])) {
          return WitnessList{named(key, actor, a), named("η", n, x), named("μ", n, y)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Each γ(g) is in Aut(N, ⋆) and γ(g·h) = γ(g) ∘ γ(h) (γ(h) applied first).
inline CheckReport check_gamma_homomorphism(const SkewLeftBracoid& b) {
  const auto& g = b.g_group();
  const auto& n = b.n_group();
  const std::size_t nn = n.order();
  const auto gt = detail::map_table(b.action(), [](const LeftAction& a, Elem x) { return gamma(a, x); });
  CheckReport r;
  r.add("gamma.automorphism", detail::first_non_automorphism(g, n, gt, "g"));
  r.add("gamma.homomorphism", [&]() -> Witness {
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem c = 0; c < g.order(); ++c) {
        const Elem ac = g.mul(a, c);
        for (Elem eta = 0; eta < nn; ++eta) {
          if (gt[ac * nn + eta] != gt[a * nn + gt[c * nn + eta]]) {
            return WitnessList{named("g", g, a), named("h", g, c), named("η", n, eta)};
          }
        }
      }
    }
    return std::nullopt;
  }());
  return r;
}

/// Each δ(h) is in Aut(N, ⋆) and η^{δ(g∘h)} = (η^{δ(g)})^{δ(h)}.
inline CheckReport check_delta_homomorphism(const SkewRightBracoid& b) {
  const auto& h = b.h_group();
  const auto& n = b.n_group();
  const std::size_t nn = n.order();
  const auto dt = detail::map_table(b.action(), [](const RightAction& a, Elem x) { return delta(a, x); });
  CheckReport r;
  r.add("delta.automorphism", detail::first_non_automorphism(h, n, dt, "h"));
  r.add("delta.homomorphism", [&]() -> Witness {
    for (Elem a = 0; a < h.order(); ++a) {
      for (Elem c = 0; c < h.order(); ++c) {
        const Elem ac = h.mul(a, c);
        for (Elem eta = 0; eta < nn; ++eta) {
          if (dt[ac * nn + eta] != dt[c * nn + dt[a * nn + eta]]) {
            return WitnessList{named("g", h, a), named("h", h, c), named("η", n, eta)};
          }
        }
      }
    }
    return std::nullopt;
  }());
  return r;
}

namespace detail {

inline Witness first_non_endomorphism(const FiniteGroup& actor, const FiniteGroup& n,
                                      const std::vector<Elem>& table, std::string_view key) {
  const std::size_t nn = n.order();
  for (Elem a = 0; a < actor.order(); ++a) {
    for (Elem x = 0; x < nn; ++x) {
      for (Elem y = 0; y < nn; ++y) {
        if (table[a * nn + n.mul(x, y)] != n.mul(table[a * nn + x], table[a * nn + y])) {
          return WitnessList{named(key, actor, a), named("η", n, x), named("μ", n, y)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// For abelian N every α(g) is a ⋆-endomorphism; not applicable otherwise.
inline CheckReport check_alpha_endomorphism(const SkewLeftBracoid& b) {
  CheckReport r;
  if (!is_abelian(b.n_group())) {
    r.add_not_applicable("alpha.endomorphism");
    return r;
  }
  const auto al = detail::map_table(b.action(), [](const LeftAction& a, Elem x) { return alpha(a, x); });
  r.add("alpha.endomorphism", detail::first_non_endomorphism(b.g_group(), b.n_group(), al, "g"));
  return r;
}

inline CheckReport check_beta_endomorphism(const SkewRightBracoid& b) {
  CheckReport r;
  if (!is_abelian(b.n_group())) {
    r.add_not_applicable("beta.endomorphism");
    return r;
  }
  const auto bt = detail::map_table(b.action(), [](const RightAction& a, Elem x) { return beta(a, x); });
  r.add("beta.endomorphism", detail::first_non_endomorphism(b.h_group(), b.n_group(), bt, "h"));
  return r;
}

/// Every identity a left bracoid satisfies, excluding its defining axioms.
inline CheckReport check_left_identities(const SkewLeftBracoid& b) {
  CheckReport r = check_remark_identities(b);
  r.append(check_inverse_identity(b));
  r.append(check_alpha_properties(b));
  r.append(check_gamma_homomorphism(b));
  r.append(check_alpha_endomorphism(b));
  return r;
}

inline CheckReport check_right_identities(const SkewRightBracoid& b) {
  CheckReport r = check_beta_properties(b);
  r.append(check_delta_homomorphism(b));
  r.append(check_beta_endomorphism(b));
  return r;
}

// ---------------------------------------------------------------------------
// Skew braces: one carrier, two group structures sharing element indices.

class SkewBrace {
 public:
  /// Requires equal orders; the brace law is not verified.
  static SkewBrace unchecked(FiniteGroup star, FiniteGroup dot) {
    if (star.order() != dot.order()) {
      throw Error(ErrorKind::CarrierMismatch, "star group has order " + std::to_string(star.order()) +
                                                  ", dot group has order " + std::to_string(dot.order()));
    }
    return SkewBrace(std::move(star), std::move(dot));
  }

  const FiniteGroup& star() const noexcept { return star_; }
  const FiniteGroup& dot() const noexcept { return dot_; }
  std::size_t size() const noexcept { return star_.order(); }

  friend bool operator==(const SkewBrace&, const SkewBrace&) = default;

 private:
  SkewBrace(FiniteGroup star, FiniteGroup dot) : star_(std::move(star)), dot_(std::move(dot)) {}
  FiniteGroup star_;
  FiniteGroup dot_;
};

/// First failure of a·(b⋆c) = (a·b) ⋆ ā ⋆ (a·c).
inline std::optional<Violation> find_eq1_violation(const SkewBrace& br) {
  const auto& s = br.star();
  const auto& d = br.dot();
  for (Elem a = 0; a < br.size(); ++a) {
    const Elem inv = s.inverse(a);
    for (Elem b = 0; b < br.size(); ++b) {
      const Elem left = s.mul(d.mul(a, b), inv);
      for (Elem c = 0; c < br.size(); ++c) {
        if (d.mul(a, s.mul(b, c)) != s.mul(left, d.mul(a, c))) {
          return Violation{ErrorKind::Eq1Violated, {named("a", s, a), named("b", s, b), named("c", s, c)}};
        }
      }
    }
  }
  return std::nullopt;
}

inline SkewBrace make_brace(FiniteGroup star, FiniteGroup dot) {
  auto br = SkewBrace::unchecked(std::move(star), std::move(dot));
  if (auto v = find_eq1_violation(br)) throw Error(*v, "skew brace");
  return br;
}

/// G = (B, ·), N = (B, ⋆), g⊙η = g·η.
inline SkewLeftBracoid brace_to_left_bracoid(const SkewBrace& br) {
  return make_left_bracoid(LeftAction::unchecked(br.dot(), br.star(), br.dot().flat_table()));
}

/// The brace's own γ-function: γ(b)a = b̄ ⋆ (b·a).
inline NMap brace_gamma(const SkewBrace& br, Elem b) {
  NMap out{std::vector<Elem>(br.size())};
  for (Elem a = 0; a < br.size(); ++a) out.images[a] = br.star().mul(br.star().inverse(b), br.dot().mul(b, a));
  return out;
}

}  // namespace bracoid
