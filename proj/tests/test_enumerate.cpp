#include <catch_amalgamated.hpp>

#include <optional>
#include <set>

#include "bracoid/enumerate.hpp"
#include "oracles.hpp"

using namespace bracoid;

namespace {

std::set<std::vector<Elem>> tables(const EnumerationResult<SkewLeftBracoid>& r) {
  std::set<std::vector<Elem>> out;
  for (const auto& s : r.structures) out.insert(s.action().table());
  return out;
}

const FiniteGroup& v4() {
  static const auto g = direct_product(cyclic(2), cyclic(2));
  return g;
}

}  // namespace

TEST_CASE("trivial cases") {
  CHECK(enumerate_left_bracoids(cyclic(1), cyclic(1)).raw_count == 1);
  CHECK(enumerate_left_bracoids_via_gamma(cyclic(1), cyclic(1)).raw_count == 1);
  CHECK(enumerate_right_bracoids(cyclic(1), cyclic(1)).raw_count == 1);
  CHECK(enumerate_two_sided(cyclic(1), cyclic(1), cyclic(1)).raw_count == 1);
  CHECK(enumerate_braces(cyclic(1)).raw_count == 1);
  CHECK(enumerate_left_bracoids(cyclic(1), cyclic(4)).raw_count == 0);

  const auto c2 = enumerate_left_bracoids(cyclic(2), cyclic(2));
  CHECK(contains(c2, make_left_bracoid(left_translation(cyclic(2)))));
}

TEST_CASE("strategy A matches an exhaustive scan of permutation assignments") {
  const FiniteGroup actors[] = {cyclic(1), cyclic(2), cyclic(3), cyclic(4), v4(), dihedral(3)};
  const FiniteGroup spaces[] = {cyclic(1), cyclic(2), cyclic(3)};
  for (const auto& g : actors) {
    for (const auto& n : spaces) {
      INFO(g.label() << " on " << n.label());
      const auto expected = oracle::left_bracoids(g, n);
      CHECK(tables(enumerate_left_bracoids(g, n)) == expected);
      CHECK(tables(enumerate_left_bracoids_via_gamma(g, n)) == expected);
    }
  }
  // Larger N against the oracle, with a small actor.
  CHECK(tables(enumerate_left_bracoids(cyclic(4), cyclic(4))) == oracle::left_bracoids(cyclic(4), cyclic(4)));
  CHECK(tables(enumerate_left_bracoids(v4(), v4())) == oracle::left_bracoids(v4(), v4()));
}

TEST_CASE("strategies A and B agree") {
  const std::pair<FiniteGroup, FiniteGroup> cases[] = {
      {presented_G(3), dihedral(3)}, {dihedral(4), v4()},          {presented_H(2), cyclic(4)},
      {cyclic(6), dihedral(3)},      {cyclic(8), cyclic(4)},       {presented_G(2), dihedral(2)}};
  for (const auto& [g, n] : cases) {
    INFO(g.label() << " on " << n.label());
    const auto a = enumerate_left_bracoids(g, n);
    const auto b = enumerate_left_bracoids_via_gamma(g, n);
    CHECK(a.raw_count == b.raw_count);
    CHECK(tables(a) == tables(b));
  }
}

TEST_CASE("the dihedral example is found") {
  const auto ex = dihedral_example({3, 3, 3});
  CHECK(contains(enumerate_left_bracoids(presented_G(3), dihedral(3)), ex.left()));
  CHECK(contains(enumerate_left_bracoids_via_gamma(presented_G(3), dihedral(3)), ex.left()));
  CHECK(contains(enumerate_right_bracoids(presented_H(3), dihedral(3)), ex.right()));
  CHECK(contains(enumerate_two_sided(presented_G(3), presented_H(3), dihedral(3)), ex));
}

TEST_CASE("right structures are validated mirrors") {
  for (const auto& h : {cyclic(4), v4(), dihedral(3), presented_H(2)}) {
    for (const auto& n : {cyclic(2), v4()}) {
      if (h.order() % n.order() != 0) continue;
      const auto r = enumerate_right_bracoids(h, n);
      // The exhaustive oracle only for small assignment spaces.
      if (h.order() <= 4 || n.order() <= 2) CHECK(r.raw_count == oracle::left_bracoids(opposite(h), n).size());
      CHECK(r.raw_count == enumerate_left_bracoids(opposite(h), n).raw_count);
      for (const auto& s : r.structures) CHECK(check_right_bracoid_axioms(s).ok());
    }
  }
  CHECK(enumerate_transitive_right_actions(cyclic(2), cyclic(2)).size() == 1);
  CHECK(enumerate_transitive_left_actions(cyclic(3), cyclic(3)).size() == 2);
}

TEST_CASE("enumerated structures pass every checker") {
  for (const auto& s : enumerate_left_bracoids(presented_G(2), v4()).structures) {
    CHECK(check_left_identities(s).ok());
  }
  for (const auto& t : enumerate_two_sided(dihedral(2), dihedral(2), cyclic(2)).structures) {
    CHECK(check_two_sided_axioms(t).ok());
    CHECK(check_theorem_two_sided(t).flag == VerdictFlag::ok);
  }
}

TEST_CASE("brace enumeration matches transported tables") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& star : small_groups(n)) {
      INFO(star.label());
      const auto r = enumerate_braces(star);
      std::set<std::vector<Elem>> found;
      for (const auto& br : r.structures) {
        CHECK_FALSE(find_eq1_violation(br));
        found.insert(br.dot().flat_table());
      }
      CHECK(found == oracle::brace_dot_tables(star, small_groups(n)));
      CHECK(contains(r, make_brace(star, make_group_flat(star.label(), star.element_names(), star.flat_table()))));
    }
  }
  // Frozen from the scan above.
  CHECK(enumerate_braces(cyclic(4)).raw_count == 2);
}

TEST_CASE("brace isomorphism classes match the known census") {
  const std::size_t census[] = {1, 1, 1, 4, 1, 6, 1, 47};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t classes = 0;
    for (const auto& star : small_groups(n)) classes += *dedupe_isomorphic(enumerate_braces(star)).iso_class_count;
    CHECK(classes == census[n - 1]);
  }
}

TEST_CASE("dedupe") {
  const auto ex = dihedral_example({3, 3, 3});
  EnumerationResult<SkewLeftBracoid> dup{{ex.left(), ex.left()}, 2, std::nullopt};
  CHECK(*dedupe_isomorphic(dup).iso_class_count == 1);

  // A relabelling by automorphisms that moves the table lands in the same
  // class.
  const auto aut_g = automorphisms(ex.g_group());
  const auto aut_n = automorphisms(ex.n_group());
  std::optional<SkewLeftBracoid> moved;
  for (const auto& phi : aut_g) {
    for (const auto& psi : aut_n) {
      const auto candidate = relabel(ex.left(), phi, psi);
      CHECK_FALSE(find_left_bracoid_violation(candidate.action()));
      if (!moved && !(candidate == ex.left())) moved = candidate;
    }
  }
  REQUIRE(moved);
  const auto copy = *moved;
  EnumerationResult<SkewLeftBracoid> pair{{ex.left(), copy}, 2, std::nullopt};
  const auto merged = dedupe_isomorphic(pair);
  CHECK(*merged.iso_class_count == 1);
  CHECK(merged.raw_count == 2);

  // γ-image size separates classes and is preserved inside each.
  const auto all = enumerate_left_bracoids(presented_G(3), dihedral(3));
  const auto classes = dedupe_isomorphic(all);
  std::map<std::vector<Elem>, std::size_t> key_to_size;
  for (const auto& s : all.structures) {
    const auto key = canonical_key(s, aut_g, aut_n);
    const auto [it, fresh] = key_to_size.emplace(key, gamma_image_size(s));
    CHECK(it->second == gamma_image_size(s));
  }
  CHECK(key_to_size.size() == *classes.iso_class_count);
  std::set<std::size_t> sizes;
  for (const auto& [k, sz] : key_to_size) sizes.insert(sz);
  CHECK(sizes.size() > 1);

  const auto twice = dedupe_isomorphic(classes);
  CHECK(twice.structures == classes.structures);
  for (const auto& s : classes.structures) CHECK(contains(all, s));
}

TEST_CASE("two-sided and brace dedupe") {
  const auto ts = enumerate_two_sided(presented_G(1), presented_H(1), cyclic(2));
  const auto d = dedupe_isomorphic(ts);
  CHECK(*d.iso_class_count <= ts.raw_count);
  CHECK(dedupe_isomorphic(d).structures == d.structures);
  for (const auto& s : d.structures) CHECK(contains(ts, s));

  const auto braces = dedupe_isomorphic(enumerate_braces(dihedral(3)));
  CHECK(dedupe_isomorphic(braces).structures == braces.structures);

  EnumerationResult<SkewLeftBracoid> mixed{
      {make_left_bracoid(left_translation(cyclic(2))), make_left_bracoid(left_translation(cyclic(3)))}, 2, {}};
  CHECK_THROWS_AS(dedupe_isomorphic(mixed), Error);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(enumerate_left_bracoids(cyclic(13), cyclic(1)), Error);
  CHECK_THROWS_AS(enumerate_left_bracoids(cyclic(9), cyclic(9)), Error);
  CHECK_THROWS_AS(enumerate_braces(cyclic(9)), Error);
  EnumOptions small;
  small.caps.enumeration = 3;
  try {
    enumerate_left_bracoids(cyclic(4), cyclic(2), small);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
}

TEST_CASE("output does not depend on the thread count") {
  EnumOptions one;
  one.threads = 1;
  EnumOptions many;
  many.threads = 4;
  const auto a = enumerate_left_bracoids(presented_G(2), v4(), one);
  const auto b = enumerate_left_bracoids(presented_G(2), v4(), many);
  CHECK(a.structures == b.structures);
  CHECK(enumerate_braces(cyclic(8), one).structures == enumerate_braces(cyclic(8), many).structures);
}
