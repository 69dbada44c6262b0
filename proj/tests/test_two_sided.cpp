#include <catch_amalgamated.hpp>

#include "bracoid/family.hpp"

using namespace bracoid;

namespace {

void require_flag(const TheoremVerdict& v, VerdictFlag flag) {
  INFO(v.theorem);
  CHECK(v.flag == flag);
}

}  // namespace

TEST_CASE("verdict flags") {
  {
    VerdictBuilder vb("t");
    vb.hypothesis("h1", std::nullopt).conclusion("c1", std::nullopt);
    const auto v = std::move(vb).finish();
    CHECK(v.flag == VerdictFlag::ok);
    CHECK(v.conclusion == true);
    CHECK_FALSE(v.witness);
  }
  {
    VerdictBuilder vb("t");
    vb.hypothesis("h1", std::nullopt).conclusion("c1", std::nullopt).conclusion("c2", WitnessList{"x=1"});
    const auto v = std::move(vb).finish();
    CHECK(v.flag == VerdictFlag::counterexample_to_theorem);
    CHECK(v.conclusion == false);
    CHECK(*v.witness == WitnessList{"statement=c2", "x=1"});
  }
  {
    VerdictBuilder vb("t");
    vb.hypothesis("h1", WitnessList{"y=2"}).conclusion("c1", WitnessList{"x=1"});
    const auto v = std::move(vb).finish();
    CHECK(v.flag == VerdictFlag::not_applicable);
    CHECK(v.hypothesis("h1") == false);
    CHECK(v.witness->front() == "statement=h1");
  }
}

TEST_CASE("commuting actions on the abelian example") {
  const auto ex = dihedral_example({4, 6, 2});
  CHECK(check_two_sided_axioms(ex).ok());
  const auto v = check_theorem_two_sided(ex);
  require_flag(v, VerdictFlag::ok);
  CHECK(v.conclusion == true);
  CHECK(v.hypothesis("N_abelian") == true);

  require_flag(check_prop_action_beta(ex.left(), ex.right().action()), VerdictFlag::ok);
  require_flag(check_prop_inverse_beta(ex.left(), ex.right().action()), VerdictFlag::ok);
  require_flag(check_lau_converse(ex.left(), ex.right().action()), VerdictFlag::ok);
}

TEST_CASE("non-abelian N leaves abelian statements inapplicable") {
  const auto ex = dihedral_example({3, 3, 3});
  const auto v = check_theorem_two_sided(ex);
  require_flag(v, VerdictFlag::not_applicable);
  CHECK(v.hypothesis("N_abelian") == false);
  CHECK_FALSE(v.conclusion.has_value());
  // The action/β formula needs no commutativity.
  require_flag(check_prop_action_beta(ex.left(), ex.right().action()), VerdictFlag::ok);
  require_flag(check_prop_inverse_beta(ex.left(), ex.right().action()), VerdictFlag::not_applicable);
}

TEST_CASE("gamma and delta commute on the example, checked pointwise") {
  const auto ex = dihedral_example({2, 4, 2});
  const auto& n = ex.n_group();
  for (Elem g = 0; g < ex.g_group().order(); ++g) {
    for (Elem h = 0; h < ex.h_group().order(); ++h) {
      for (Elem eta = 0; eta < n.order(); ++eta) {
        CHECK(delta(ex.right(), h)(gamma(ex.left(), g)(eta)) == gamma(ex.left(), g)(delta(ex.right(), h)(eta)));
        CHECK(beta(ex.right(), h)(alpha(ex.left(), g)(eta)) == alpha(ex.left(), g)(beta(ex.right(), h)(eta)));
      }
    }
  }
}

TEST_CASE("eq6 violations") {
  // Left translation and right translation of D3 commute (associativity),
  // but the left translation of D3 against the right action η ⊡ h = h̄·η does not.
  const auto d3 = dihedral(3);
  const auto l = left_translation(d3);
  CHECK_FALSE(find_eq6_violation(l, right_translation(d3)));

  std::vector<Elem> t(36);
  for (Elem eta = 0; eta < 6; ++eta) {
    for (Elem h = 0; h < 6; ++h) t[eta * 6 + h] = d3.mul(d3.inverse(h), eta);
  }
  const auto r = make_right_action(d3, d3, std::move(t));
  const auto v = find_eq6_violation(l, r);
  REQUIRE(v);
  CHECK(v->kind == ErrorKind::Eq6Violated);
  CHECK(v->witness.size() == 3);
  CHECK_THROWS_AS(make_two_sided(make_left_bracoid(l), make_right_bracoid(r)), Error);

  CHECK_THROWS_AS(
      TwoSidedSkewBracoid::unchecked(make_left_bracoid(l), make_right_bracoid(right_translation(cyclic(6)))), Error);
}

TEST_CASE("hypothesis failures are reported, not counted as counterexamples") {
  // Left translation of C4 with η ⊡ h = η - h: every hypothesis holds.
  const auto c4 = cyclic(4);
  const auto left = make_left_bracoid(left_translation(c4));
  std::vector<Elem> t(16);
  for (Elem eta = 0; eta < 4; ++eta) {
    for (Elem h = 0; h < 4; ++h) t[eta * 4 + h] = (eta + 4 - h) % 4;
  }
  const auto right = make_right_action(c4, c4, std::move(t));
  require_flag(check_lau_converse(left, right), VerdictFlag::ok);

  // Against a right action that breaks compatibility the statement is not
  // applicable.
  const auto d3 = dihedral(3);
  std::vector<Elem> u(36);
  for (Elem eta = 0; eta < 6; ++eta) {
    for (Elem h = 0; h < 6; ++h) u[eta * 6 + h] = d3.mul(d3.inverse(h), eta);
  }
  const auto v = check_prop_action_beta(make_left_bracoid(left_translation(d3)), make_right_action(d3, d3, std::move(u)));
  require_flag(v, VerdictFlag::not_applicable);
  CHECK(v.hypothesis("compatibility_eq6") == false);

  const auto mismatch = check_lau_converse(left, right_translation(cyclic(2)));
  require_flag(mismatch, VerdictFlag::not_applicable);
  CHECK(mismatch.hypothesis("shared_N") == false);
}

TEST_CASE("brace-level statements on trivial braces") {
  for (const auto& g : {cyclic(1), cyclic(4), direct_product(cyclic(2), cyclic(2)), cyclic(6)}) {
    const auto br = trivial_brace(g);
    // ⋆ = · gives a ∗ b = e for abelian groups.
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) CHECK(brace_star(br, a, b) == g.identity());
    }
    CHECK(brace_is_two_sided(br));
    require_flag(check_rump_radical_ring(br), VerdictFlag::ok);
    require_flag(check_lau_brace(br), VerdictFlag::ok);
    CHECK(check_brace_bridges(br).ok());
    const auto ts = brace_both_sided_bracoid(br);
    require_flag(check_theorem_two_sided(ts), VerdictFlag::ok);
  }
  const auto d3 = trivial_brace(dihedral(3));
  require_flag(check_rump_radical_ring(d3), VerdictFlag::not_applicable);
  require_flag(check_lau_brace(d3), VerdictFlag::not_applicable);
  CHECK(check_brace_bridges(d3).ok());
}

TEST_CASE("the opposite-group brace on D3") {
  // a · b = b ⋆ a satisfies both the left and the right brace law.
  const auto d3 = dihedral(3);
  const auto br = make_brace(d3, opposite(d3));
  CHECK(brace_is_two_sided(br));
  CHECK(check_brace_bridges(br).ok());
  const auto ts = brace_both_sided_bracoid(br);
  require_flag(check_theorem_two_sided(ts), VerdictFlag::not_applicable);
  require_flag(check_prop_action_beta(ts.left(), ts.right().action()), VerdictFlag::ok);
  require_flag(check_rump_radical_ring(br), VerdictFlag::not_applicable);
}
