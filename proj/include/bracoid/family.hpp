#pragma once

// The dihedral two-sided family on N = D_d with G = GT_t, H = HW_w, plus
// structures obtained from skew braces.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bracoid/two_sided.hpp"

namespace bracoid {

struct DihedralExampleParams {
  std::size_t t = 1;
  std::size_t w = 1;
  std::size_t d = 1;
};

namespace detail {

// Closed forms on raw (unreduced) exponents:
//   x^i y^j ⊙ μ^r η^s = μ^{i + (-1)^j r} η^{j + s}
//   μ^r η^s ⊡ a^k b^l = μ^{r + (-1)^s k} η^{s + l}
inline Elem family_left_rule(long long i, long long j, long long r, long long s, long long d) {
  const long long rr = mod(i + sign_pow(mod(j, 2)) * r, d);
  const long long ss = mod(j + s, 2);
  return static_cast<Elem>(rr + d * ss);
}

inline Elem family_right_rule(long long r, long long s, long long k, long long l, long long d) {
  const long long rr = mod(r + sign_pow(mod(s, 2)) * k, d);
  const long long ss = mod(s + l, 2);
  return static_cast<Elem>(rr + d * ss);
}

/// Evaluates both rules on alternative spellings of the same group element
/// (x^{i+t}, y^{j+4}, a^{k+2w}, and a^k b^{l+2} = a^{k+w} b^l) and reports
/// the first disagreement.
inline std::optional<WitnessList> family_spelling_conflict(std::size_t t, std::size_t w, std::size_t d) {
  const auto tt = static_cast<long long>(t), ww = static_cast<long long>(w), dd = static_cast<long long>(d);
  for (long long r = 0; r < dd; ++r) {
    for (long long s = 0; s < 2; ++s) {
      for (long long j = 0; j < 4; ++j) {
        for (long long i = 0; i < tt; ++i) {
          const Elem canonical = family_left_rule(i, j, r, s, dd);
          if (family_left_rule(i + tt, j, r, s, dd) != canonical ||
              family_left_rule(i, j + 4, r, s, dd) != canonical) {
            return WitnessList{"left", "i=" + std::to_string(i), "j=" + std::to_string(j),
                               "r=" + std::to_string(r), "s=" + std::to_string(s)};
          }
        }
      }
      for (long long l = 0; l < 2; ++l) {
        for (long long k = 0; k < 2 * ww; ++k) {
          const Elem canonical = family_right_rule(r, s, k, l, dd);
          if (family_right_rule(r, s, k + 2 * ww, l, dd) != canonical ||
              family_right_rule(r, s, k, l + 2, dd) != family_right_rule(r, s, k + ww, l, dd)) {
            return WitnessList{"right", "k=" + std::to_string(k), "l=" + std::to_string(l),
                               "r=" + std::to_string(r), "s=" + std::to_string(s)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::vector<Elem> family_left_table(const FiniteGroup& g, const FiniteGroup& n, std::size_t t,
                                           std::size_t d) {
  std::vector<Elem> table(g.order() * n.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const auto i = static_cast<long long>(x % t), j = static_cast<long long>(x / t);
    for (Elem eta = 0; eta < n.order(); ++eta) {
      const auto r = static_cast<long long>(eta % d), s = static_cast<long long>(eta / d);
      table[x * n.order() + eta] = family_left_rule(i, j, r, s, static_cast<long long>(d));
    }
  }
  return table;
}

inline std::vector<Elem> family_right_table(const FiniteGroup& h, const FiniteGroup& n, std::size_t w,
                                            std::size_t d) {
  const std::size_t m = 2 * w;
  std::vector<Elem> table(n.order() * h.order());
  for (Elem eta = 0; eta < n.order(); ++eta) {
    const auto r = static_cast<long long>(eta % d), s = static_cast<long long>(eta / d);
    for (Elem y = 0; y < h.order(); ++y) {
      const auto k = static_cast<long long>(y % m), l = static_cast<long long>(y / m);
      table[eta * h.order() + y] = family_right_rule(r, s, k, l, static_cast<long long>(d));
    }
  }
  return table;
}

}  // namespace detail

inline bool valid_params(const DihedralExampleParams& p) {
  return p.t > 0 && p.w > 0 && p.d > 0 && std::gcd(p.t, p.w) % p.d == 0;
}

/// G = GT_t acting on the left and H = HW_w on the right of N = D_d.
/// Throws DivisibilityViolated unless d | gcd(t, w).
inline TwoSidedSkewBracoid dihedral_example(const DihedralExampleParams& p) {
  if (p.t == 0 || p.w == 0 || p.d == 0) {
    throw Error(ErrorKind::InvalidParameter, "t, w and d must be positive");
  }
  if (!valid_params(p)) {
    throw Error(ErrorKind::DivisibilityViolated,
                "d = " + std::to_string(p.d) + " does not divide gcd(t, w) = " +
                    std::to_string(std::gcd(p.t, p.w)));
  }
  if (auto w = detail::family_spelling_conflict(p.t, p.w, p.d)) {
    throw Error(ErrorKind::WellDefinednessViolated, "action depends on the spelling of a group element", *w);
  }
  const auto g = presented_G(p.t);
  const auto h = presented_H(p.w);
  const auto n = dihedral(p.d);
  auto left = LeftAction::unchecked(g, n, detail::family_left_table(g, n, p.t, p.d));
  auto right = RightAction::unchecked(n, h, detail::family_right_table(h, n, p.w, p.d));
  // Validating the tabulated actions against the full multiplication of G
  // and H discharges the relations y^4 = 1 and b^2 = a^w.
  if (auto v = find_action_violation(left)) throw Error(ErrorKind::WellDefinednessViolated, "left rule", v->witness);
  if (auto v = find_action_violation(right)) throw Error(ErrorKind::WellDefinednessViolated, "right rule", v->witness);
  return make_two_sided(make_left_bracoid(std::move(left)), make_right_bracoid(std::move(right)));
}

/// Both operations equal to the product of g.
inline SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace::unchecked(g, g); }

/// g⊙η = g·η and η⊡h = η·h on a two-sided brace.
inline TwoSidedSkewBracoid brace_both_sided_bracoid(const SkewBrace& br) {
  if (auto v = find_eq1_violation(br)) throw Error(*v, "not a skew brace");
  if (auto v = find_right_brace_violation(br)) throw Error(ErrorKind::NotTwoSidedBrace, "", v->witness);
  return make_two_sided(brace_to_left_bracoid(br), make_right_bracoid(brace_right_action(br)));
}

}  // namespace bracoid
