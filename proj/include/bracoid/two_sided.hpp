#pragma once

// Two-sided skew bracoids, verifiers for the statements proved about them,
// and the brace-level radical ring / associativity checks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracoid/bracoid.hpp"

namespace bracoid {

class TwoSidedSkewBracoid {
 public:
  /// Requires both sides to share N; the laws are not verified.
  static TwoSidedSkewBracoid unchecked(SkewLeftBracoid left, SkewRightBracoid right) {
    if (!left.n_group().same_structure(right.n_group())) {
      throw Error(ErrorKind::SharedNMismatch, "left and right structures use different N");
    }
    return TwoSidedSkewBracoid(std::move(left), std::move(right));
  }

  const SkewLeftBracoid& left() const noexcept { return left_; }
  const SkewRightBracoid& right() const noexcept { return right_; }
  const FiniteGroup& g_group() const noexcept { return left_.g_group(); }
  const FiniteGroup& h_group() const noexcept { return right_.h_group(); }
  const FiniteGroup& n_group() const noexcept { return left_.n_group(); }

  friend bool operator==(const TwoSidedSkewBracoid&, const TwoSidedSkewBracoid&) = default;

 private:
  TwoSidedSkewBracoid(SkewLeftBracoid left, SkewRightBracoid right)
      : left_(std::move(left)), right_(std::move(right)) {}
  SkewLeftBracoid left_;
  SkewRightBracoid right_;
};

/// First failure of g⊙(η⊡h) = (g⊙η)⊡h.
inline std::optional<Violation> find_eq6_violation(const LeftAction& left, const RightAction& right) {
  const auto& g = left.actor();
  const auto& h = right.actor();
  const auto& n = left.space();
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem eta = 0; eta < n.order(); ++eta) {
      for (Elem c = 0; c < h.order(); ++c) {
        if (left(a, right(eta, c)) != right(left(a, eta), c)) {
          return Violation{ErrorKind::Eq6Violated, {named("g", g, a), named("η", n, eta), named("h", h, c)}};
        }
      }
    }
  }
  return std::nullopt;
}

inline TwoSidedSkewBracoid make_two_sided(SkewLeftBracoid left, SkewRightBracoid right) {
  auto t = TwoSidedSkewBracoid::unchecked(std::move(left), std::move(right));
  if (auto v = find_left_bracoid_violation(t.left().action())) throw Error(*v, "left side");
  if (auto v = find_right_bracoid_violation(t.right().action())) throw Error(*v, "right side");
  if (auto v = find_eq6_violation(t.left().action(), t.right().action())) throw Error(*v, "two-sided");
  return t;
}

inline CheckReport check_two_sided_axioms(const TwoSidedSkewBracoid& t) {
  CheckReport r = check_left_bracoid_axioms(t.left());
  r.append(check_right_bracoid_axioms(t.right()));
  r.add("two_sided.eq6", to_witness(find_eq6_violation(t.left().action(), t.right().action())));
  return r;
}

namespace detail {

inline Witness abelian_witness(const FiniteGroup& n) {
  if (auto p = noncommuting_pair(n)) return WitnessList{named("η", n, p->first), named("μ", n, p->second)};
  return std::nullopt;
}

/// α(g)(η^{β(h)}) = (α(g)η)^{β(h)} for all g, h, η.
inline Witness alpha_beta_commutation(const LeftAction& left, const RightAction& right) {
  const auto& g = left.actor();
  const auto& h = right.actor();
  const auto& n = left.space();
  const std::size_t nn = n.order();
  const auto al = map_table(left, [](const LeftAction& a, Elem x) { return alpha(a, x); });
  const auto bt = map_table(right, [](const RightAction& a, Elem x) { return beta(a, x); });
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem c = 0; c < h.order(); ++c) {
      for (Elem eta = 0; eta < nn; ++eta) {
        if (al[a * nn + bt[c * nn + eta]] != bt[c * nn + al[a * nn + eta]]) {
          return WitnessList{named("g", g, a), named("h", h, c), named("η", n, eta)};
        }
      }
    }
  }
  return std::nullopt;
}

/// (γ(g)η)^{δ(h)} = γ(g)(η^{δ(h)}) for all g, h, η.
inline Witness gamma_delta_commutation(const LeftAction& left, const RightAction& right) {
  const auto& g = left.actor();
  const auto& h = right.actor();
  const auto& n = left.space();
  const std::size_t nn = n.order();
  const auto gt = map_table(left, [](const LeftAction& a, Elem x) { return gamma(a, x); });
  const auto dt = map_table(right, [](const RightAction& a, Elem x) { return delta(a, x); });
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem c = 0; c < h.order(); ++c) {
      for (Elem eta = 0; eta < nn; ++eta) {
        if (dt[c * nn + gt[a * nn + eta]] != gt[a * nn + dt[c * nn + eta]]) {
          return WitnessList{named("g", g, a), named("h", h, c), named("η", n, eta)};
        }
      }
    }
  }
  return std::nullopt;
}

/// Hypothesis (a) shared by the statements about a left bracoid together
/// with a commuting transitive right action.
inline void add_right_action_hypotheses(VerdictBuilder& vb, const LeftAction& left,
                                        const RightAction& right) {
  vb.hypothesis("right_action_laws", to_witness(find_action_violation(right)));
  vb.hypothesis("right_action_transitive", first_unreached(right));
  vb.hypothesis("compatibility_eq6", to_witness(find_eq6_violation(left, right)));
}

}  // namespace detail

/// For abelian N: α(g) and β(h) are endomorphisms, γ(g) commutes with δ(h),
/// and α(g) commutes with β(h).
inline TheoremVerdict check_theorem_two_sided(const TwoSidedSkewBracoid& t) {
  const auto& left = t.left().action();
  const auto& right = t.right().action();
  VerdictBuilder vb("two_sided_abelian_commutation");
  vb.hypothesis("two_sided_axioms", [&]() -> Witness {
    if (auto v = find_left_bracoid_violation(left)) return to_witness(v);
    if (auto v = find_right_bracoid_violation(right)) return to_witness(v);
    return to_witness(find_eq6_violation(left, right));
  }());
  vb.hypothesis("N_abelian", detail::abelian_witness(t.n_group()));
  if (vb.hypotheses_hold()) {
    const auto& n = t.n_group();
    const auto al = detail::map_table(left, [](const LeftAction& a, Elem x) { return alpha(a, x); });
    const auto bt = detail::map_table(right, [](const RightAction& a, Elem x) { return beta(a, x); });
    vb.conclusion("alpha_endomorphism", detail::first_non_endomorphism(t.g_group(), n, al, "g"));
    vb.conclusion("beta_endomorphism", detail::first_non_endomorphism(t.h_group(), n, bt, "h"));
    vb.conclusion("gamma_delta_commute", detail::gamma_delta_commutation(left, right));
    vb.conclusion("alpha_beta_commute", detail::alpha_beta_commutation(left, right));
  }
  return std::move(vb).finish();
}

/// (g⊙η)^{β(h)} = α(g)(η^{β(h)}) ⋆ η^{β(h)} ⋆ α(g)(e⊡h), for a skew left
/// bracoid and a compatible transitive right action. N may be non-abelian
/// and the right action need not satisfy the right bracoid law.
inline TheoremVerdict check_prop_action_beta(const SkewLeftBracoid& left_bracoid, const RightAction& right) {
  const auto& left = left_bracoid.action();
  VerdictBuilder vb("action_beta_formula");
  if (!left.space().same_structure(right.space())) {
    vb.hypothesis("shared_N", WitnessList{"left and right N differ"});
    return std::move(vb).finish();
  }
  vb.hypothesis("left_skew_bracoid", to_witness(find_left_bracoid_violation(left)));
  detail::add_right_action_hypotheses(vb, left, right);
  if (vb.hypotheses_hold()) {
    const auto& g = left.actor();
    const auto& h = right.actor();
    const auto& n = left.space();
    const std::size_t nn = n.order();
    const Elem e = n.identity();
    const auto al = detail::map_table(left, [](const LeftAction& a, Elem x) { return alpha(a, x); });
    const auto bt = detail::map_table(right, [](const RightAction& a, Elem x) { return beta(a, x); });
    vb.conclusion("action_beta_formula", [&]() -> Witness {
      for (Elem a = 0; a < g.order(); ++a) {
        for (Elem eta = 0; eta < nn; ++eta) {
          for (Elem c = 0; c < h.order(); ++c) {
            const Elem b_eta = bt[c * nn + eta];
            const Elem rhs = n.mul(al[a * nn + b_eta], b_eta, al[a * nn + right(e, c)]);
            if (bt[c * nn + left(a, eta)] != rhs) {
              return WitnessList{named("g", g, a), named("η", n, eta), named("h", h, c)};
            }
          }
        }
      }
      return std::nullopt;
    }());
  }
  return std::move(vb).finish();
}

namespace detail {

inline VerdictBuilder abelian_pair_hypotheses(std::string theorem, const SkewLeftBracoid& left_bracoid,
                                              const RightAction& right) {
  const auto& left = left_bracoid.action();
  VerdictBuilder vb(std::move(theorem));
  if (!left.space().same_structure(right.space())) {
    vb.hypothesis("shared_N", WitnessList{"left and right N differ"});
    return vb;
  }
  vb.hypothesis("left_skew_bracoid", to_witness(find_left_bracoid_violation(left)));
  vb.hypothesis("N_abelian", abelian_witness(left.space()));
  add_right_action_hypotheses(vb, left, right);
  vb.hypothesis("alpha_beta_commute", alpha_beta_commutation(left, right));
  return vb;
}

}  // namespace detail

/// Under N abelian, (a) and (b): η̄^{β(h)} = (η^{β(h)})‾ and
/// η̄⊡h = (e⊡h)² ⋆ (η⊡h)‾.
inline TheoremVerdict check_prop_inverse_beta(const SkewLeftBracoid& left_bracoid, const RightAction& right) {
  auto vb = detail::abelian_pair_hypotheses("inverse_beta", left_bracoid, right);
  if (vb.hypotheses_hold()) {
    const auto& h = right.actor();
    const auto& n = right.space();
    const std::size_t nn = n.order();
    const Elem e = n.identity();
    const auto bt = detail::map_table(right, [](const RightAction& a, Elem x) { return beta(a, x); });
    vb.conclusion("inverse_beta", [&]() -> Witness {
      for (Elem c = 0; c < h.order(); ++c) {
        for (Elem eta = 0; eta < nn; ++eta) {
          if (bt[c * nn + n.inverse(eta)] != n.inverse(bt[c * nn + eta])) {
            return WitnessList{named("η", n, eta), named("h", h, c)};
          }
        }
      }
      return std::nullopt;
    }());
    vb.conclusion("inverse_action", [&]() -> Witness {
      for (Elem c = 0; c < h.order(); ++c) {
        const Elem base = right(e, c);
        for (Elem eta = 0; eta < nn; ++eta) {
          if (right(n.inverse(eta), c) != n.mul(base, base, n.inverse(right(eta, c)))) {
            return WitnessList{named("η", n, eta), named("h", h, c)};
          }
        }
      }
      return std::nullopt;
    }());
  }
  return std::move(vb).finish();
}

/// Under N abelian, (a) and (b) the right action satisfies the right bracoid
/// law. The law is evaluated even when a hypothesis fails, for information.
inline TheoremVerdict check_lau_converse(const SkewLeftBracoid& left_bracoid, const RightAction& right) {
  auto vb = detail::abelian_pair_hypotheses("two_sided_from_commutation", left_bracoid, right);
  if (left_bracoid.n_group().same_structure(right.space())) {
    vb.conclusion("right_eq4", to_witness(find_eq4_violation(right)));
  }
  return std::move(vb).finish();
}

// ---------------------------------------------------------------------------
// Brace level.

/// a ∗ b = ā ⋆ (a·b) ⋆ b̄.
inline Elem brace_star(const SkewBrace& br, Elem a, Elem b) {
  const auto& s = br.star();
  return s.mul(s.inverse(a), br.dot().mul(a, b), s.inverse(b));
}

/// The right bracoid law with ⊡ = · reads (a⋆b)·c = (a·c) ⋆ c̄ ⋆ (b·c),
/// since e⊡c = c when both operations share their identity.
inline std::optional<Violation> find_right_brace_violation(const SkewBrace& br) {
  const auto& s = br.star();
  const auto& d = br.dot();
  for (Elem a = 0; a < br.size(); ++a) {
    for (Elem b = 0; b < br.size(); ++b) {
      for (Elem c = 0; c < br.size(); ++c) {
        if (d.mul(s.mul(a, b), c) != s.mul(d.mul(a, c), s.inverse(c), d.mul(b, c))) {
          return Violation{ErrorKind::Eq4Violated, {named("a", s, a), named("b", s, b), named("c", s, c)}};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool brace_is_two_sided(const SkewBrace& br) { return !find_right_brace_violation(br); }

/// η⊡h = η·h, N = (B, ⋆), H = (B, ·).
inline RightAction brace_right_action(const SkewBrace& br) {
  return RightAction::unchecked(br.star(), br.dot(), br.dot().flat_table());
}

namespace detail {

inline Witness star_associativity(const SkewBrace& br) {
  const auto& s = br.star();
  for (Elem a = 0; a < br.size(); ++a) {
    for (Elem b = 0; b < br.size(); ++b) {
      const Elem ab = brace_star(br, a, b);
      for (Elem c = 0; c < br.size(); ++c) {
        if (brace_star(br, ab, c) != brace_star(br, a, brace_star(br, b, c))) {
          return WitnessList{named("a", s, a), named("b", s, b), named("c", s, c)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// For a two-sided brace with abelian ⋆: ∗ is associative and distributes
/// over ⋆ on both sides, and a ⋆ b ⋆ (a∗b) = a·b.
inline TheoremVerdict check_rump_radical_ring(const SkewBrace& br) {
  const auto& s = br.star();
  const auto& d = br.dot();
  const std::size_t n = br.size();
  VerdictBuilder vb("radical_ring");
  vb.hypothesis("star_abelian", detail::abelian_witness(s));
  vb.hypothesis("eq1", to_witness(find_eq1_violation(br)));
  vb.hypothesis("two_sided", to_witness(find_right_brace_violation(br)));
  if (vb.hypotheses_hold()) {
    vb.conclusion("star_op_associative", detail::star_associativity(br));
    vb.conclusion("left_distributive", [&]() -> Witness {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (brace_star(br, a, s.mul(b, c)) != s.mul(brace_star(br, a, b), brace_star(br, a, c)))
              return WitnessList{named("a", s, a), named("b", s, b), named("c", s, c)};
      return std::nullopt;
    }());
    vb.conclusion("right_distributive", [&]() -> Witness {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (brace_star(br, s.mul(a, b), c) != s.mul(brace_star(br, a, c), brace_star(br, b, c)))
              return WitnessList{named("a", s, a), named("b", s, b), named("c", s, c)};
      return std::nullopt;
    }());
    vb.conclusion("adjoint_identity", [&]() -> Witness {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (s.mul(a, b, brace_star(br, a, b)) != d.mul(a, b))
            return WitnessList{named("a", s, a), named("b", s, b)};
      return std::nullopt;
    }());
  }
  return std::move(vb).finish();
}

/// For a left brace (abelian ⋆) whose ∗ is associative, the brace is
/// two-sided. Two-sidedness is reported even when ∗ is not associative.
inline TheoremVerdict check_lau_brace(const SkewBrace& br) {
  VerdictBuilder vb("associative_star_two_sided");
  vb.hypothesis("star_abelian", detail::abelian_witness(br.star()));
  vb.hypothesis("eq1", to_witness(find_eq1_violation(br)));
  vb.hypothesis("star_op_associative", detail::star_associativity(br));
  vb.conclusion("two_sided", to_witness(find_right_brace_violation(br)));
  return std::move(vb).finish();
}

/// The brace seen as a bracoid reproduces its own maps: the bracoid γ equals
/// the brace γ, and α(a)b = a∗b = β(b)a.
inline CheckReport check_brace_bridges(const SkewBrace& br) {
  const auto& s = br.star();
  const auto left = LeftAction::unchecked(br.dot(), br.star(), br.dot().flat_table());
  const auto right = brace_right_action(br);
  CheckReport r;
  r.add("brace.gamma_matches", [&]() -> Witness {
    for (Elem b = 0; b < br.size(); ++b) {
      const auto bg = brace_gamma(br, b);
      const auto lg = gamma(left, b);
      for (Elem a = 0; a < br.size(); ++a) {
        if (bg.images[a] != lg.images[a]) return WitnessList{named("b", s, b), named("a", s, a)};
      }
    }
    return std::nullopt;
  }());
  r.add("brace.alpha_is_star", [&]() -> Witness {
    for (Elem a = 0; a < br.size(); ++a) {
      const auto al = alpha(left, a);
      for (Elem b = 0; b < br.size(); ++b) {
        if (al.images[b] != brace_star(br, a, b)) return WitnessList{named("a", s, a), named("b", s, b)};
      }
    }
    return std::nullopt;
  }());
  r.add("brace.beta_is_star", [&]() -> Witness {
    for (Elem b = 0; b < br.size(); ++b) {
      const auto bt = beta(right, b);
      for (Elem a = 0; a < br.size(); ++a) {
        if (bt.images[a] != brace_star(br, a, b)) return WitnessList{named("a", s, a), named("b", s, b)};
      }
    }
    return std::nullopt;
  }());
  return r;
}

}  // namespace bracoid
