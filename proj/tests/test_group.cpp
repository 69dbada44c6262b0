#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "bracoid/group.hpp"
#include "oracles.hpp"

using namespace bracoid;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("cyclic groups") {
  const auto c1 = cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.mul(0, 0) == 0);
  CHECK(FiniteGroup{}.order() == 1);

  const auto c6 = cyclic(6);
  CHECK(c6.label() == "C6");
  CHECK(is_abelian(c6));
  CHECK(c6.mul(4, 5) == 3);
  CHECK(c6.element_order(2) == 3);
  CHECK(c6.power(1, -1) == 5);
  CHECK(kind_of([] { cyclic(0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("dihedral product agrees with the closed form") {
  for (std::size_t d = 1; d <= 7; ++d) {
    const auto g = dihedral(d);
    REQUIRE(g.order() == 2 * d);
    const auto dd = static_cast<long long>(d);
    for (long long r1 = 0; r1 < dd; ++r1) {
      for (long long s1 = 0; s1 < 2; ++s1) {
        for (long long r2 = 0; r2 < dd; ++r2) {
          for (long long s2 = 0; s2 < 2; ++s2) {
            const long long r = ((r1 + (s1 ? -r2 : r2)) % dd + dd) % dd;
            const auto expected = "μ^" + std::to_string(r) + " η^" + std::to_string((s1 + s2) % 2);
            CHECK(g.element_name(g.mul(r1 + dd * s1, r2 + dd * s2)) == expected);
          }
        }
      }
    }
    CHECK(is_abelian(g) == (d <= 2));
  }
}

TEST_CASE("presented groups satisfy their relations") {
  for (std::size_t t = 1; t <= 6; ++t) {
    const auto g = presented_G(t);
    REQUIRE(g.order() == 4 * t);
    const Elem x = *g.find("x^" + std::to_string(t > 1 ? 1 : 0) + " y^0");
    const Elem y = *g.find("x^0 y^1");
    CHECK(g.power(x, static_cast<long long>(t)) == g.identity());
    CHECK(g.power(y, 4) == g.identity());
    CHECK(g.element_order(y) == 4);
    CHECK(g.mul(g.inverse(y), x, y) == g.inverse(x));
    // x^i y^j is literally the product of powers.
    for (Elem i = 0; i < t; ++i) {
      for (Elem j = 0; j < 4; ++j) {
        CHECK(g.mul(g.power(x, static_cast<long long>(i)), g.power(y, static_cast<long long>(j))) == i + t * j);
      }
    }
  }
  for (std::size_t w = 1; w <= 6; ++w) {
    const auto h = presented_H(w);
    REQUIRE(h.order() == 4 * w);
    const Elem a = *h.find("a^1 b^0");
    const Elem b = *h.find("a^0 b^1");
    CHECK(h.element_order(a) == 2 * w);
    CHECK(h.mul(b, b) == h.power(a, static_cast<long long>(w)));
    CHECK(h.mul(h.inverse(b), a, b) == h.inverse(a));
    CHECK(h.element_order(b) == 4);
  }
}

TEST_CASE("HW2 is the quaternion group") {
  const auto q = presented_H(2);
  std::size_t involutions = 0;
  for (Elem a = 0; a < q.order(); ++a) involutions += q.element_order(a) == 2;
  CHECK(involutions == 1);
  CHECK_FALSE(is_abelian(q));
}

TEST_CASE("direct product and opposite") {
  const auto p = direct_product(cyclic(2), cyclic(3));
  CHECK(p.label() == "C2 x C3");
  CHECK(p.element_name(4) == "(g^1,g^1)");
  CHECK(are_isomorphic(p, cyclic(6)));
  CHECK(!oracle::isomorphisms(p, cyclic(6)).empty());

  const auto d3 = dihedral(3);
  const auto op = opposite(d3);
  CHECK(op.label() == "op(D3)");
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) CHECK(op.mul(a, b) == d3.mul(b, a));
  }
  CHECK(opposite(cyclic(5)).same_structure(cyclic(5)));
}

TEST_CASE("make_group rejects non-groups") {
  const std::vector<std::string> two{"a", "b"};
  CHECK(kind_of([&] { make_group_flat("x", two, {0, 1, 1}); }) == ErrorKind::Shape);
  CHECK(kind_of([&] { make_group_flat("x", two, {0, 1, 1, 2}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { make_group_flat("x", {"a", "a"}, {0, 1, 1, 0}); }) == ErrorKind::DuplicateElementName);
  CHECK(kind_of([&] { make_group_flat("x", two, {0, 0, 1, 1}); }) == ErrorKind::NotLatinSquare);
  CHECK(kind_of([&] { make_group_flat("x", {}, {}); }) == ErrorKind::Shape);
  CHECK(kind_of([&] { make_group_from_table(two, {{0, 1}, {1}}); }) == ErrorKind::Shape);

  // A Latin square with no identity element.
  CHECK(kind_of([&] { make_group_flat("x", {"a", "b", "c"}, {1, 0, 2, 0, 2, 1, 2, 1, 0}); }) == ErrorKind::NoIdentity);

  // Order-5 loop with identity 0 that is not associative.
  const std::vector<Elem> loop{0, 1, 2, 3, 4,  //
                               1, 0, 3, 4, 2,  //
                               2, 4, 0, 1, 3,  //
                               3, 2, 4, 0, 1,  //
                               4, 3, 1, 2, 0};
  CHECK(kind_of([&] { make_group_flat("x", {"e", "p", "q", "r", "s"}, loop); }) == ErrorKind::NotAssociative);

  try {
    make_group_flat("x", {"e", "p", "q", "r", "s"}, loop);
  } catch (const Error& e) {
    REQUIRE(e.witness().size() == 3);
    CHECK(e.witness()[0].rfind("a=", 0) == 0);
  }

  const auto g = make_group_from_table({"e", "t"}, {{0, 1}, {1, 0}}, "mine");
  CHECK(g.label() == "mine");
  CHECK(g.same_structure(make_group_flat("other", {"e", "t"}, {0, 1, 1, 0})));
  CHECK_FALSE(g == make_group_flat("other", {"e", "t"}, {0, 1, 1, 0}));
}

TEST_CASE("generating sequences generate") {
  for (const auto& g : {cyclic(1), cyclic(12), dihedral(6), presented_G(3), presented_H(3),
                        direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))}) {
    const auto gens = generating_sequence(g);
    std::set<Elem> closure{g.identity()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (Elem x : std::vector<Elem>(closure.begin(), closure.end())) {
        for (Elem s : gens) grew |= closure.insert(g.mul(x, s)).second;
      }
    }
    CHECK(closure.size() == g.order());
  }
  CHECK(generating_sequence(cyclic(1)).empty());
  CHECK(generating_sequence(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))).size() == 3);
}

TEST_CASE("automorphism counts match a scan over all bijections") {
  const FiniteGroup groups[] = {cyclic(1),
                                cyclic(2),
                                cyclic(5),
                                cyclic(6),
                                cyclic(8),
                                direct_product(cyclic(2), cyclic(2)),
                                direct_product(cyclic(4), cyclic(2)),
                                direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
                                dihedral(3),
                                dihedral(4),
                                presented_H(2),
                                presented_G(2)};
  for (const auto& g : groups) {
    const auto auts = automorphisms(g);
    std::set<std::vector<Elem>> found;
    for (const auto& m : auts) {
      CHECK(is_homomorphism(m));
      CHECK(m.is_bijective());
      found.insert(m.images);
    }
    CHECK(found.size() == auts.size());
    CHECK(found == oracle::isomorphisms(g, g));
  }
}

TEST_CASE("isomorphism search") {
  CHECK(are_isomorphic(direct_product(cyclic(3), cyclic(2)), cyclic(6)));
  CHECK_FALSE(are_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  CHECK_FALSE(are_isomorphic(dihedral(4), presented_H(2)));
  CHECK(are_isomorphic(dihedral(3), opposite(dihedral(3))));
  CHECK_FALSE(are_isomorphic(cyclic(3), cyclic(4)));

  const auto auts = automorphisms(dihedral(4));
  const auto& phi = auts.back();
  CHECK(compose(phi, inverse_map(phi)) == identity_map(dihedral(4)));
}

TEST_CASE("order caps") {
  OrderCaps caps;
  caps.automorphisms = 4;
  CHECK(kind_of([&] { automorphisms(cyclic(5), caps); }) == ErrorKind::OrderCapExceeded);
  CHECK(automorphisms(cyclic(4), caps).size() == 2);

  ::setenv("BRACOID_ORDER_CAP", "5", 1);
  const auto env = OrderCaps::from_env();
  ::unsetenv("BRACOID_ORDER_CAP");
  CHECK(env.automorphisms == 5);
  CHECK(env.enumeration == 5);
  CHECK(env.permutation_scan == 5);
  CHECK(env.braces == 5);
  CHECK(OrderCaps::from_env().enumeration == 12);
}
