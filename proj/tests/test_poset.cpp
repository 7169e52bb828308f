#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "matchmonoid/builtin.hpp"
#include "matchmonoid/config.hpp"
#include "matchmonoid/errors.hpp"
#include "matchmonoid/induced.hpp"
#include "matchmonoid/poset.hpp"
#include "test_util.hpp"

using namespace matchmonoid;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::bad_parameter;
}

}  // namespace

TEST_CASE("builder rejects structural defects with the right code") {
  CHECK(code_of([] { build_poset(3, {{0, 1}, {1, 2}, {2, 0}}); }) ==
        Errc::cycle_detected);
  CHECK(code_of([] { build_poset(2, {{0, 0}}); }) == Errc::bad_parameter);
  CHECK(code_of([] { build_poset(2, {{0, 2}}); }) == Errc::bad_parameter);
  CHECK(code_of([] { build_poset(4, {{0, 2}, {1, 2}, {2, 3}}); }) ==
        Errc::no_minimum);
  CHECK(code_of([] { build_poset(3, {{0, 1}, {0, 2}}); }) == Errc::no_maximum);
  // Pentagon: one side has two steps, the other one, into the same top.
  CHECK(code_of([] {
          build_poset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
        }) == Errc::not_graded);
  CHECK(code_of([] { build_poset(2, {{0, 1}}, {"only-one-label"}); }) ==
        Errc::bad_parameter);
}

TEST_CASE("transitive input edges are dropped, covers are canonical") {
  PosetPtr p = build_poset(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p->covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(recompute_covers(*p) == p->covers);

  PosetPtr b3 = boolean_lattice(3);
  CHECK(recompute_covers(*b3) == b3->covers);
}

TEST_CASE("ranks, bottom, top on the families") {
  PosetPtr c = chain(5);
  CHECK(c->n == 5);
  CHECK(c->bottom == 0);
  CHECK(c->top == 4);
  CHECK(c->max_rank() == 4);

  PosetPtr b = boolean_lattice(3);
  CHECK(b->n == 8);
  CHECK(b->max_rank() == 3);
  CHECK(b->atoms().size() == 3);

  PosetPtr d = divisor_poset(360);  // 2^3 * 3^2 * 5
  CHECK(d->n == 24);
  CHECK(d->label(d->bottom) == "1");
  CHECK(d->label(d->top) == "360");
  CHECK(d->max_rank() == 6);  // Omega(360)
}

TEST_CASE("order relation and intervals") {
  PosetPtr d = divisor_poset(60);
  auto id_of = [&](const std::string& lbl) {
    for (int i = 0; i < d->n; ++i)
      if (d->label(i) == lbl) return i;
    FAIL("missing label ", lbl);
    return -1;
  };
  CHECK(d->leq(id_of("2"), id_of("12")));
  CHECK_FALSE(d->leq(id_of("4"), id_of("6")));
  CHECK(d->interval(id_of("2"), id_of("12")).count() == 4);  // 2,4,6,12

  auto iv = is_interval(*d, std::vector<int>{id_of("2"), id_of("4"), id_of("6"),
                                             id_of("12")});
  REQUIRE(iv.has_value());
  CHECK(iv->first == id_of("2"));
  CHECK(iv->second == id_of("12"));
  CHECK_FALSE(is_interval(*d, std::vector<int>{id_of("2"), id_of("3")}).has_value());
  CHECK(code_of([&] { is_interval(*d, std::vector<int>{}); }) ==
        Errc::empty_subset);
}

TEST_CASE("Moebius values match the independent recursion") {
  for (PosetPtr p : {chain(6), boolean_lattice(4), divisor_poset(360),
                     product({chain(3), chain(3)})}) {
    for (int x = 0; x < p->n; ++x)
      for (int y = 0; y < p->n; ++y)
        if (p->leq(x, y))
          CHECK(mobius(*p, x, y) == Integer(testutil::naive_mobius(*p, x, y)));
  }
}

TEST_CASE("Moebius known closed forms") {
  PosetPtr c = chain(4);
  CHECK(mobius(*c, 0, 0) == 1);
  CHECK(mobius(*c, 0, 1) == -1);
  CHECK(mobius(*c, 0, 2) == 0);
  CHECK(mobius(*c, 0, 3) == 0);
  CHECK(code_of([&] { mobius(*c, 2, 1); }) == Errc::not_comparable);

  // On the divisor poset, mu(1, n) is the arithmetic Moebius function.
  PosetPtr d = divisor_poset(30);
  CHECK(mobius(*d, d->bottom, d->top) == -1);  // mu(30), squarefree 3 primes
  PosetPtr d4 = divisor_poset(4);
  CHECK(mobius(*d4, d4->bottom, d4->top) == 0);

  // mu on the Boolean lattice alternates with corank.
  PosetPtr b = boolean_lattice(4);
  CHECK(mobius(*b, b->bottom, b->top) == 1);
}

TEST_CASE("Moebius row sums vanish") {
  PosetPtr b = boolean_lattice(3);
  for (int x = 0; x < b->n; ++x)
    for (int y = 0; y < b->n; ++y) {
      if (!b->lt(x, y)) continue;
      Integer sum = 0;
      b->interval(x, y).for_each([&](int z) { sum += b->mobius_total(x, z); });
      CHECK(sum == 0);
    }
}

TEST_CASE("Eulerian classification") {
  CHECK(chain(2)->eulerian());
  CHECK_FALSE(chain(3)->eulerian());
  CHECK(boolean_lattice(2)->eulerian());
  CHECK(boolean_lattice(4)->eulerian());
  CHECK(divisor_poset(30)->eulerian());   // isomorphic to B3
  CHECK_FALSE(divisor_poset(12)->eulerian());
  CHECK_FALSE(divisor_poset(360)->eulerian());
  CHECK(is_eulerian(*boolean_lattice(3)));
}

TEST_CASE("products: encoding, covers, Moebius factorization") {
  PosetPtr a = chain(3);
  PosetPtr b = divisor_poset(12);
  PosetPtr p = product({a, b});
  CHECK(p->n == a->n * b->n);

  std::vector<int> sizes = {a->n, b->n};
  for (int id = 0; id < p->n; ++id) {
    std::vector<int> co = product_decode(sizes, id);
    CHECK(product_encode(sizes, co) == id);
  }

  // Order is componentwise.
  for (int x = 0; x < p->n; ++x)
    for (int y = 0; y < p->n; ++y) {
      auto cx = product_decode(sizes, x), cy = product_decode(sizes, y);
      CHECK(p->leq(x, y) ==
            (a->leq(cx[0], cy[0]) && b->leq(cx[1], cy[1])));
    }

  // Moebius multiplies across factors.
  for (int x : {0, 1, 5, 7})
    for (int y : {7, 11, 15, 17}) {
      if (!p->leq(x, y)) continue;
      auto cx = product_decode(sizes, x), cy = product_decode(sizes, y);
      CHECK(mobius(*p, x, y) ==
            mobius(*a, cx[0], cy[0]) * mobius(*b, cx[1], cy[1]));
    }

  // B2 is the square of the 2-chain.
  CHECK(testutil::poset_isomorphic(*product({chain(2), chain(2)}),
                                   *boolean_lattice(2)));
  CHECK(code_of([] { product({}); }) == Errc::empty_factor_list);
}

TEST_CASE("ideal below atoms") {
  PosetPtr b = boolean_lattice(3);
  std::vector<int> atoms = b->atoms();
  REQUIRE(atoms.size() == 3);

  Bitset all = ideal_below_atoms(*b, atoms);
  CHECK(all.count() == static_cast<std::size_t>(b->n));

  Bitset two = ideal_below_atoms(*b, {atoms[0], atoms[1]});
  CHECK(two.count() == 4);  // a sub-square
  two.for_each([&](int x) { CHECK(b->rank[x] <= 2); });

  Bitset none = ideal_below_atoms(*b, {});
  CHECK(none.count() == 1);
  CHECK(none.test(b->bottom));

  CHECK(code_of([&] { ideal_below_atoms(*b, {b->top}); }) == Errc::not_atoms);
}

TEST_CASE("element cap is enforced and adjustable") {
  std::size_t before = config::element_cap();
  config::set_element_cap(16);
  CHECK(code_of([] { chain(17); }) == Errc::cap_exceeded);
  CHECK(chain(16)->n == 16);
  config::set_element_cap(before);
}

TEST_CASE("induced subposets: gradedness with the ambient rank") {
  PosetPtr b = boolean_lattice(3);

  // A full interval is graded.
  InducedSubposet cube(b, b->interval(b->bottom, b->top));
  CHECK(cube.graded_with_ambient_rank());

  // Bottom + the three coatoms + top: covers from bottom jump two ranks.
  std::vector<int> elems = {b->bottom, b->top};
  for (int x = 0; x < b->n; ++x)
    if (b->rank[x] == 2) elems.push_back(x);
  InducedSubposet gappy(b, elems);
  CHECK_FALSE(gappy.graded_with_ambient_rank());

  // Induced Moebius agrees with a standalone poset built from the same covers.
  InducedSubposet half(b, ideal_below_atoms(*b, {b->atoms()[0], b->atoms()[1]}));
  CHECK(half.graded_with_ambient_rank());
  CHECK(half.mobius_total(0, half.size() - 1) == 1);

  CHECK(code_of([&] { InducedSubposet(b, std::vector<int>{}); }) ==
        Errc::empty_subset);
}

TEST_CASE("builtin grammar round trips the families") {
  CHECK(builtin_poset("chain:5")->n == 5);
  CHECK(builtin_poset("divisors:12")->n == 6);
  CHECK(builtin_poset("bruhat:3")->n == 6);
  CHECK(builtin_poset("involutions:4")->n == 10);
  CHECK(builtin_poset("product:(chain:2,chain:2)")->n == 4);
  CHECK(testutil::poset_isomorphic(
      *builtin_poset("product:(product:(chain:2,chain:2),chain:2)"),
      *boolean_lattice(3)));

  for (const char* bad : {"chain", "chain:", "chain:x", "chain:3x", "frob:3",
                          "product:(chain:2", "product:()", "product:chain:2"})
    CHECK(code_of([&] { builtin_poset(bad); }) == Errc::parse_error);
}

TEST_CASE("DOT output is deterministic and rank-aware") {
  PosetPtr p = divisor_poset(12);
  std::string dot = to_dot(*p);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"1\"") != std::string::npos);
  CHECK(dot.find("\"12\"") != std::string::npos);
  CHECK(dot == to_dot(*p));
}
