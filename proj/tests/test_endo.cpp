#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>

#include "doctest.h"
#include "matchmonoid/endo.hpp"
#include "matchmonoid/errors.hpp"
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

std::vector<Endo> endos_from_tables(
    PosetPtr p, const std::vector<std::vector<std::int32_t>>& tables) {
  std::vector<Endo> out;
  for (const auto& t : tables) out.push_back(make_endo(p, t));
  return out;
}

// Clears one mixed-radix bit of the Boolean-lattice element id: the
// coordinate projection onto a facet.
Endo clear_bit(PosetPtr b, int bit) {
  std::vector<std::int32_t> image(b->n);
  for (int x = 0; x < b->n; ++x) image[x] = x & ~(1 << bit);
  return make_endo(b, image);
}

}  // namespace

TEST_CASE("membership check flags the right violations") {
  PosetPtr c = chain(4);
  CHECK(check_membership(make_endo(c, {0, 0, 1, 3})).in_or_k());

  MembershipResult not_regressive = check_membership(make_endo(c, {0, 2, 2, 3}));
  CHECK_FALSE(not_regressive.regressive);
  REQUIRE(not_regressive.witness.has_value());
  CHECK(*not_regressive.witness == std::pair<int, int>{1, 1});

  MembershipResult not_monotone = check_membership(make_endo(c, {0, 1, 0, 3}));
  CHECK(not_monotone.regressive);
  CHECK_FALSE(not_monotone.order_preserving);
  REQUIRE(not_monotone.witness.has_value());
  CHECK(*not_monotone.witness == std::pair<int, int>{1, 2});

  CHECK(code_of([&] { make_endo(c, {0, 1}); }) == Errc::bad_parameter);
  CHECK(code_of([&] { make_endo(c, {0, 1, 2, 9}); }) == Errc::bad_parameter);
}

TEST_CASE("composition applies the right factor first") {
  PosetPtr c = chain(3);
  Endo f = make_endo(c, {0, 0, 2});
  Endo g = make_endo(c, {0, 1, 1});
  CHECK(compose(f, g).image == std::vector<std::int32_t>{0, 0, 0});
  CHECK(compose(g, f).image == std::vector<std::int32_t>{0, 0, 1});

  PosetPtr c2 = chain(3);  // distinct object, same shape
  CHECK(code_of([&] { compose(f, make_endo(c2, {0, 0, 0})); }) ==
        Errc::poset_mismatch);
}

TEST_CASE("brute-force Or(K) counts and closure saturation") {
  PosetPtr c4 = chain(4);
  auto tables = testutil::brute_or_k(*c4);
  CHECK(tables.size() == testutil::catalan(4));  // 14

  MonoidClosure closure = generate_closure(c4, endos_from_tables(c4, tables));
  CHECK(closure.elements.size() == tables.size());
  CHECK(std::is_sorted(closure.elements.begin(), closure.elements.end(),
                       [](const Endo& a, const Endo& b) {
                         return a.image < b.image;
                       }));
  CHECK(closure.elements[closure.identity_index] == identity_endo(c4));

  PosetPtr b2 = boolean_lattice(2);
  CHECK(testutil::brute_or_k(*b2).size() == 9);
}

TEST_CASE("closure words witness their elements") {
  PosetPtr b = boolean_lattice(3);
  std::vector<Endo> gens = {clear_bit(b, 0), clear_bit(b, 1), clear_bit(b, 2)};
  MonoidClosure closure = generate_closure(b, gens);
  CHECK(closure.elements.size() == 8);

  for (const Endo& e : closure.elements) {
    Endo acc = identity_endo(b);
    for (int letter : e.word) acc = compose(acc, closure.generators[letter]);
    CHECK(acc == e);
  }
}

TEST_CASE("closure rejects bad generators and respects the budget") {
  PosetPtr c = chain(3);
  CHECK(code_of([&] {
          generate_closure(c, {make_endo(c, {0, 2, 2})});
        }) == Errc::not_in_or_k);

  PosetPtr c4 = chain(4);
  auto all = endos_from_tables(c4, testutil::brute_or_k(*c4));
  CHECK(code_of([&] {
          generate_closure(c4, all, ClosureOptions{.budget = 5});
        }) == Errc::closure_budget_exceeded);
}

TEST_CASE("natural order of commuting projections is Boolean") {
  PosetPtr b = boolean_lattice(3);
  MonoidClosure closure =
      generate_closure(b, {clear_bit(b, 0), clear_bit(b, 1), clear_bit(b, 2)});
  REQUIRE(closure.idempotents.size() == 8);  // every element is idempotent

  std::vector<Endo> idems = closure.idempotent_elements();
  IdempotentOrder order = idempotent_order_relation(idems);
  CHECK(order.hasse.size() == 12);

  // The identity is the minimum of the natural order.
  std::size_t id_pos = 0;
  for (std::size_t i = 0; i < idems.size(); ++i)
    if (idems[i] == identity_endo(b)) id_pos = i;
  for (std::size_t j = 0; j < idems.size(); ++j)
    CHECK(order.leq[id_pos].test(j));

  PosetPtr as_poset = idempotent_order(idems);
  CHECK(testutil::poset_isomorphic(*as_poset, *boolean_lattice(3)));
}

TEST_CASE("join of idempotents is the absorbing element of their closure") {
  PosetPtr b = boolean_lattice(3);
  Endo e0 = clear_bit(b, 0), e1 = clear_bit(b, 1);
  Endo both = compose(e0, e1);

  CHECK(join_idempotents(e0, e1) == both);
  CHECK(join_idempotents(e0, e0) == e0);
  CHECK(join_idempotents(identity_endo(b), e1) == e1);

  PosetPtr c = chain(3);
  CHECK(code_of([&] {
          join_idempotents(make_endo(c, {0, 0, 1}), identity_endo(c));
        }) == Errc::not_idempotent);
}

TEST_CASE("Galois adjunction and Moebius transport hold for idempotents") {
  PosetPtr b2 = boolean_lattice(2);
  for (const auto& table : testutil::brute_or_k(*b2)) {
    Endo f = make_endo(b2, table);
    if (!is_idempotent(f)) continue;
    GaloisReport rep = galois_verify(f);
    CHECK(rep.adjunction_ok);
    CHECK(rep.rota_ok);
  }

  // Including the idempotent whose bottom fiber is not an interval.
  PosetPtr b3 = boolean_lattice(3);
  std::vector<std::int32_t> image(b3->n);
  for (int x = 0; x < b3->n; ++x) image[x] = x == b3->top ? x : b3->bottom;
  Endo squash = make_endo(b3, image);
  REQUIRE(is_idempotent(squash));
  CHECK(galois_verify(squash).ok());
}

TEST_CASE("image sets and fibers") {
  PosetPtr b2 = boolean_lattice(2);
  Endo f = make_endo(b2, {0, 0, 0, 3});
  CHECK(image_set(f).to_vector() == std::vector<int>{0, 3});
  CHECK(fiber(f, 0) == std::vector<int>{0, 1, 2});
  CHECK(fiber(f, 3) == std::vector<int>{3});
  CHECK(fiber_mask(f, 0).count() == 3);
}
