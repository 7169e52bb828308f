#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>

#include "doctest.h"
#include "matchmonoid/builtin.hpp"
#include "matchmonoid/errors.hpp"
#include "matchmonoid/matching.hpp"
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

std::vector<PosetPtr> small_test_posets() {  // all of them have <= 12 elements
  return {chain(2),
          chain(4),
          chain(6),
          boolean_lattice(2),
          boolean_lattice(3),
          divisor_poset(12),
          divisor_poset(60),
          builtin_poset("bruhat:3"),
          builtin_poset("involutions:3"),
          builtin_poset("product:(chain:3,chain:2)"),
          builtin_poset("product:(chain:4,chain:3)")};
}

}  // namespace

TEST_CASE("special condition is equivalent to the lifting property") {
  for (PosetPtr p : small_test_posets()) {
    for (const auto& table : testutil::all_perfect_matchings(*p)) {
      Matching m = make_matching(p, table);
      CHECK(is_special(m) == satisfies_lifting(m));
    }
    for (const auto& table : testutil::all_partial_matchings(*p)) {
      PartialMatching m = make_partial_matching(p, table);
      CHECK(is_special(m) == satisfies_lifting(m));
    }
  }
}

TEST_CASE("enumerators agree with filtered brute force") {
  for (PosetPtr p : small_test_posets()) {
    std::vector<std::vector<std::int32_t>> expect_perfect;
    for (const auto& table : testutil::all_perfect_matchings(*p))
      if (is_special(make_matching(p, table))) expect_perfect.push_back(table);
    std::vector<Matching> got_perfect = enumerate_special_matchings(p);
    REQUIRE(got_perfect.size() == expect_perfect.size());
    for (std::size_t i = 0; i < got_perfect.size(); ++i)
      CHECK(got_perfect[i].partner == expect_perfect[i]);

    std::vector<std::vector<std::int32_t>> expect_partial;
    for (const auto& table : testutil::all_partial_matchings(*p))
      if (is_special(make_partial_matching(p, table)))
        expect_partial.push_back(table);
    std::vector<PartialMatching> got_partial =
        enumerate_special_partial_matchings(p);
    REQUIRE(got_partial.size() == expect_partial.size());
    for (std::size_t i = 0; i < got_partial.size(); ++i)
      CHECK(got_partial[i].partner == expect_partial[i]);
  }
}

TEST_CASE("cube: nine perfect matchings, three of them special") {
  PosetPtr b3 = boolean_lattice(3);
  CHECK(testutil::all_perfect_matchings(*b3).size() == 9);
  CHECK(enumerate_special_matchings(b3).size() == 3);
  CHECK(enumerate_special_matchings(boolean_lattice(2)).size() == 2);
}

TEST_CASE("chains: partial matchings count Fibonacci numbers") {
  for (int n = 2; n <= 10; ++n)
    CHECK(enumerate_special_partial_matchings(chain(n)).size() ==
          static_cast<std::size_t>(testutil::fib(n - 1)));
  CHECK(enumerate_special_matchings(chain(5)).empty());  // odd size
  CHECK(code_of([] { enumerate_special_partial_matchings(chain(1)); }) ==
        Errc::too_small);
}

TEST_CASE("matching constructors validate their tables") {
  PosetPtr c4 = chain(4);
  CHECK(code_of([&] { make_matching(c4, {1, 0, 3, 1}); }) ==
        Errc::bad_parameter);  // not an involution
  CHECK(code_of([&] { make_matching(c4, {0, 1, 3, 2}); }) ==
        Errc::bad_parameter);  // fixed points in a perfect matching
  CHECK(code_of([&] { make_matching(c4, {3, 2, 1, 0}); }) ==
        Errc::bad_parameter);  // 0-3 is not a cover pair
  CHECK(code_of([&] { make_matching(c4, {1, 0, 3, 9}); }) ==
        Errc::bad_parameter);

  PosetPtr b2 = boolean_lattice(2);
  CHECK(code_of([&] { make_partial_matching(b2, {0, 1, 2, 3}); }) ==
        Errc::bad_parameter);  // top must move
  // Fixed points below the top are fine.
  PartialMatching ok = make_partial_matching(b2, {0, 3, 2, 1});
  CHECK_FALSE(is_special(ok));
  CHECK(code_of([&] { idempotent_from_partial(ok); }) == Errc::not_special);
}

TEST_CASE("idempotents from matchings take the lower member") {
  PosetPtr b3 = boolean_lattice(3);
  for (const Matching& m : enumerate_special_matchings(b3)) {
    Endo e = idempotent_from_matching(m);
    CHECK(is_idempotent(e));
    CHECK(check_membership(e).in_or_k());
    for (int x = 0; x < b3->n; ++x)
      CHECK(e.image[x] == (b3->leq(x, m.partner[x]) ? x : m.partner[x]));
  }

  for (const PartialMatching& m :
       enumerate_special_partial_matchings(chain(6))) {
    Endo e = idempotent_from_partial(m);
    CHECK(is_idempotent(e));
    CHECK(check_membership(e).in_or_k());
    for (int x = 0; x < 6; ++x) {
      if (m.partner[x] == x) CHECK(e.image[x] == x);
      else CHECK(e.image[x] == std::min<int>(x, m.partner[x]));
    }
  }

  // A non-special perfect matching of the cube is rejected.
  bool found_non_special = false;
  for (const auto& table : testutil::all_perfect_matchings(*b3)) {
    Matching m = make_matching(b3, table);
    if (is_special(m)) continue;
    found_non_special = true;
    CHECK(code_of([&] { idempotent_from_matching(m); }) == Errc::not_special);
    break;
  }
  CHECK(found_non_special);
}

TEST_CASE("generated monoids nest: perfect within partial within Or(K)") {
  for (PosetPtr p : {chain(5), boolean_lattice(2), divisor_poset(12),
                     builtin_poset("bruhat:3")}) {
    std::vector<Endo> gens_m, gens_p;
    for (const Matching& m : enumerate_special_matchings(p))
      gens_m.push_back(idempotent_from_matching(m));
    for (const PartialMatching& m : enumerate_special_partial_matchings(p))
      gens_p.push_back(idempotent_from_partial(m));

    MonoidClosure monoid = generate_closure(p, gens_m);
    MonoidClosure partial_monoid = generate_closure(p, gens_p);

    for (const Endo& e : monoid.elements) CHECK(partial_monoid.contains(e));
    for (const Endo& e : partial_monoid.elements)
      CHECK(check_membership(e).in_or_k());
  }
}

TEST_CASE("partial matching monoid of a chain has Catalan size") {
  for (int n = 4; n <= 9; ++n) {
    PosetPtr c = chain(n);
    std::vector<Endo> gens;
    for (const PartialMatching& m : enumerate_special_partial_matchings(c))
      gens.push_back(idempotent_from_partial(m));
    MonoidClosure closure = generate_closure(c, gens);
    CHECK(closure.elements.size() ==
          static_cast<std::size_t>(1 + testutil::catalan(n - 2)));
  }
}

TEST_CASE("product decomposition check, two-factor form") {
  ProductDecompositionReport rep =
      product_decomposition_check(chain(3), chain(2));
  CHECK(rep.pass());
  CHECK(rep.direct_count == 1);
  CHECK(rep.lifted_count == 1);
  CHECK(rep.direct_partial_count == 2);
  CHECK(rep.lifted_partial_count == 2);
  CHECK(rep.monoid_size == 2);
  CHECK(rep.partial_monoid_size == 4);
}
