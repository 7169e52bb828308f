// Symmetric groups under Bruhat order: the dominance comparison, parabolic
// quotient projections and their fiber formulas, 0-Hecke products, the
// two-sided closure, and the involution posets with their twisted matchings.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "matchmonoid/coxeter.hpp"
#include "matchmonoid/endo.hpp"
#include "matchmonoid/idempotent_analysis.hpp"
#include "matchmonoid/matching.hpp"
#include "matchmonoid/poset.hpp"
#include "test_util.hpp"

using namespace matchmonoid;

namespace {

std::vector<std::vector<int>> subsets_of(int m) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= m; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Bruhat order rebuilt from scratch: covers are right multiplications by a
// transposition raising the length by exactly one, then transitive closure.
std::vector<std::vector<bool>> reflection_order(const BruhatContext& ctx) {
  int sz = static_cast<int>(ctx.perms.size());
  std::vector<std::vector<bool>> leq(sz, std::vector<bool>(sz, false));
  for (int u = 0; u < sz; ++u) leq[u][u] = true;
  std::vector<std::pair<int, int>> covers;
  for (int u = 0; u < sz; ++u) {
    const Permutation& pu = ctx.perms[u];
    for (int i = 1; i <= ctx.n; ++i)
      for (int j = i + 1; j <= ctx.n; ++j) {
        Permutation pv = pu;
        std::swap(pv.word[i - 1], pv.word[j - 1]);
        if (pv.length() == pu.length() + 1) covers.push_back({u, ctx.id_of(pv)});
      }
  }
  // Propagate along covers in rank order (covers always raise the rank).
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : covers)
      for (int u = 0; u < sz; ++u)
        if (leq[u][a] && !leq[u][b]) leq[u][b] = true, changed = true;
  }
  return leq;
}

std::vector<int> coset_ids(const BruhatContext& ctx, const QuotientSpec& spec,
                           const Permutation& u) {
  std::set<int> ids;
  std::vector<int> wi = parabolic_subgroup(ctx, spec.I);
  std::vector<int> wj = parabolic_subgroup(ctx, spec.J);
  auto put = [&](const Permutation& w) { ids.insert(ctx.id_of(w)); };
  switch (spec.side) {
    case Side::right:
      for (int b : wj) put(perm_multiply(u, ctx.perms[b]));
      break;
    case Side::left:
      for (int a : wi) put(perm_multiply(ctx.perms[a], u));
      break;
    case Side::two_sided:
      for (int a : wi)
        for (int b : wj)
          put(perm_multiply(perm_multiply(ctx.perms[a], u), ctx.perms[b]));
      break;
  }
  return {ids.begin(), ids.end()};
}

// The generator subset {i : w s_j w^{-1} = s_i for some j in J}.
std::vector<int> conjugated_generators(const Permutation& w,
                                       const std::vector<int>& J) {
  int n = w.n();
  std::set<int> out;
  Permutation winv = w.inverse();
  for (int j : J) {
    Permutation c =
        perm_multiply(perm_multiply(w, adjacent_transposition(n, j)), winv);
    for (int i = 1; i < n; ++i)
      if (c == adjacent_transposition(n, i)) out.insert(i);
  }
  return {out.begin(), out.end()};
}

Endo stabilize(const Endo& e) {
  Endo g = e;
  for (int guard = 0; guard < 64; ++guard) {
    if (is_idempotent(g)) return g;
    g = compose(g, e);
  }
  FAIL("iteration did not stabilize");
  return g;
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  Permutation w = perm_from_string("3142");
  CHECK(w.str() == "3142");
  CHECK(w.n() == 4);
  CHECK(w.length() == 3);  // inversions 31, 32, 42
  CHECK(w.inverse().str() == "2413");
  CHECK_FALSE(w.is_involution());
  CHECK(perm_from_string("4321").length() == 6);
  CHECK(perm_identity(4).length() == 0);

  Permutation s1 = adjacent_transposition(3, 1);
  Permutation s2 = adjacent_transposition(3, 2);
  CHECK(s1.str() == "213");
  CHECK(s2.str() == "132");
  CHECK(perm_multiply(s1, s2).str() == "231");
  CHECK(perm_multiply(s2, s1).str() == "312");
  CHECK(s1.is_involution());
  CHECK(s1.two_cycles() == 1);
  CHECK(perm_from_string("2143").two_cycles() == 2);
  CHECK(perm_from_string("321").two_cycles() == 1);
}

TEST_CASE("dominance comparison matches the reflection-generated order") {
  for (int n = 2; n <= 4; ++n) {
    const BruhatContext& ctx = bruhat_context(n);
    auto oracle = reflection_order(ctx);
    int sz = static_cast<int>(ctx.perms.size());
    for (int u = 0; u < sz; ++u)
      for (int v = 0; v < sz; ++v) {
        CAPTURE(n);
        CAPTURE(ctx.perms[u].str());
        CAPTURE(ctx.perms[v].str());
        bool dom = bruhat_leq(ctx.perms[u], ctx.perms[v]);
        CHECK(dom == oracle[u][v]);
        CHECK(dom == ctx.poset->leq(u, v));
      }
    for (int u = 0; u < sz; ++u)
      CHECK(ctx.poset->rank[u] == ctx.perms[u].length());
  }
}

TEST_CASE("coset minima: well-defined, minimal, and length-additive") {
  const BruhatContext& ctx = bruhat_context(4);
  for (const auto& J : subsets_of(3)) {
    QuotientSpec spec{4, {}, J, Side::right};
    std::vector<int> wj = parabolic_subgroup(ctx, J);
    for (const Permutation& w : ctx.perms) {
      Permutation rep = proj_element(spec, w);
      // w = rep * x with x in W_J and lengths adding up.
      Permutation x = perm_multiply(rep.inverse(), w);
      CHECK(std::binary_search(wj.begin(), wj.end(), ctx.id_of(x)));
      CHECK(w.length() == rep.length() + x.length());
      // Same representative across the coset, and a true Bruhat minimum.
      for (int b : wj) {
        Permutation u = perm_multiply(w, ctx.perms[b]);
        CHECK(proj_element(spec, u) == rep);
        CHECK(bruhat_leq(rep, u));
      }
    }
  }
}

TEST_CASE("one-sided projections commute into the two-sided one") {
  const BruhatContext& ctx = bruhat_context(4);
  for (const auto& I : subsets_of(3))
    for (const auto& J : subsets_of(3)) {
      Endo p = proj_endo({4, {}, J, Side::right});
      Endo q = proj_endo({4, I, {}, Side::left});
      Endo both = proj_endo({4, I, J, Side::two_sided});
      CHECK(compose(q, p) == both);
      CHECK(compose(p, q) == both);
      CHECK(is_idempotent(both));
      CHECK(check_membership(both).in_or_k());
      (void)ctx;
    }
}

TEST_CASE("quotient fibers are intervals with the predicted tops") {
  for (int n = 2; n <= 4; ++n) {
    const BruhatContext& ctx = bruhat_context(n);
    for (const auto& I : subsets_of(n - 1))
      for (const auto& J : subsets_of(n - 1))
        for (Side side : {Side::right, Side::left, Side::two_sided}) {
          if (side == Side::right && !I.empty()) continue;
          if (side == Side::left && !J.empty()) continue;
          QuotientSpec spec{n, I, J, side};
          Endo e = proj_endo(spec);
          for (int v : image_set(e).to_vector()) {
            const Permutation& u = ctx.perms[v];
            Permutation top;
            switch (side) {
              case Side::right:
                top = perm_multiply(u, longest_element(n, J));
                break;
              case Side::left:
                top = perm_multiply(longest_element(n, I), u);
                break;
              case Side::two_sided: {
                std::vector<int> jw = conjugated_generators(u, J);
                std::vector<int> meet;
                std::set_intersection(I.begin(), I.end(), jw.begin(), jw.end(),
                                      std::back_inserter(meet));
                Permutation head = proj_element({n, {}, meet, Side::right},
                                                longest_element(n, I));
                top = perm_multiply(perm_multiply(head, u),
                                    longest_element(n, J));
                break;
              }
            }
            CAPTURE(n);
            CAPTURE(u.str());
            std::vector<int> box =
                ctx.poset->interval(v, ctx.id_of(top)).to_vector();
            CHECK(fiber(e, v) == box);
            CHECK(coset_ids(ctx, spec, u) == box);
          }
        }
  }
}

TEST_CASE("bounded coset maxima match brute force") {
  const BruhatContext& ctx = bruhat_context(4);
  std::vector<QuotientSpec> specs;
  for (const auto& I : subsets_of(3))
    for (const auto& J : subsets_of(3))
      specs.push_back({4, I, J, Side::two_sided});
  for (const auto& J : subsets_of(3)) {
    specs.push_back({4, {}, J, Side::right});
    specs.push_back({4, J, {}, Side::left});
  }
  for (const QuotientSpec& spec : specs) {
    Endo e = proj_endo(spec);
    // The bounded maximum is only guaranteed when the composite cuts
    // intervals cleanly; outside that the slice may have several maximal
    // elements (e.g. I={1}, J={2}, u=1234, v=3124).
    if (!is_projection(e)) continue;
    std::vector<int> image = image_set(e).to_vector();
    for (int a : image)
      for (int b : image) {
        if (!ctx.poset->leq(a, b)) continue;
        const Permutation& u = ctx.perms[a];
        const Permutation& v = ctx.perms[b];
        // Unique maximum of coset(u) ∩ [u, v], by inspection.
        std::vector<int> hits;
        for (int c : coset_ids(ctx, spec, u))
          if (ctx.poset->leq(a, c) && ctx.poset->leq(c, b)) hits.push_back(c);
        REQUIRE_FALSE(hits.empty());
        int best = -1;
        for (int h : hits) {
          bool top = true;
          for (int other : hits)
            if (!ctx.poset->leq(other, h)) top = false;
          if (top) best = h;
        }
        CAPTURE(u.str());
        CAPTURE(v.str());
        REQUIRE(best >= 0);
        CHECK(ctx.id_of(coset_max(spec, u, v)) == best);
      }
  }
}

TEST_CASE("iterating a word product stabilizes onto the support projection") {
  const BruhatContext& ctx = bruhat_context(4);
  for (const Permutation& v : ctx.perms) {
    if (v.length() == 0) continue;
    std::vector<int> word = reduced_word(v);
    CHECK(static_cast<int>(word.size()) == v.length());
    std::vector<int> supp(word.begin(), word.end());
    std::sort(supp.begin(), supp.end());
    supp.erase(std::unique(supp.begin(), supp.end()), supp.end());

    Endo limit = stabilize(hecke_product(4, Side::right, word));
    CHECK(limit == proj_endo({4, {}, supp, Side::right}));
  }
}

TEST_CASE("word products respect braid moves and idempotency") {
  Endo a = hecke_product(3, Side::right, {1, 2, 1});
  Endo b = hecke_product(3, Side::right, {2, 1, 2});
  CHECK(a == b);
  CHECK(a == proj_endo({3, {}, {1, 2}, Side::right}));
  CHECK(hecke_product(3, Side::right, {1, 1}) ==
        hecke_product(3, Side::right, {1}));
  CHECK(hecke_product(4, Side::left, {1, 3}) ==
        hecke_product(4, Side::left, {3, 1}));
  CHECK(hecke_product(4, Side::left, reduced_word_w0(4, {1, 2, 3})) ==
        proj_endo({4, {1, 2, 3}, {}, Side::left}));
}

TEST_CASE("longest parabolic elements and reduced words") {
  CHECK(longest_element(4, {1, 2, 3}).str() == "4321");
  CHECK(longest_element(4, {1}).str() == "2134");
  CHECK(longest_element(4, {1, 3}).str() == "2143");
  CHECK(longest_element(5, {2, 3}).str() == "14325");
  CHECK(longest_element(4, {}).str() == "1234");

  for (int n = 2; n <= 4; ++n) {
    for (const auto& J : subsets_of(n - 1)) {
      Permutation w0j = longest_element(n, J);
      std::vector<int> word = reduced_word_w0(n, J);
      CHECK(static_cast<int>(word.size()) == w0j.length());
      Permutation acc = perm_identity(n);
      for (int s : word) acc = perm_multiply(acc, adjacent_transposition(n, s));
      CHECK(acc == w0j);
    }
    for (const Permutation& w : bruhat_context(n).perms) {
      std::vector<int> word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == w.length());
      Permutation acc = perm_identity(n);
      for (int s : word) acc = perm_multiply(acc, adjacent_transposition(n, s));
      CHECK(acc == w);
    }
  }
}

TEST_CASE("multiplication matchings of the full group") {
  CHECK(multiplication_matchings(2).size() == 1);
  CHECK(multiplication_matchings(3).size() == 4);
  CHECK(multiplication_matchings(4).size() == 6);
  for (const Matching& m : multiplication_matchings(4)) CHECK(is_special(m));
  // All six are pairwise distinct tables.
  auto ms = multiplication_matchings(4);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      CHECK(ms[i].partner != ms[j].partner);
}

TEST_CASE("two-sided closure idempotents are the double projections") {
  for (int n = 3; n <= 4; ++n) {
    MonoidClosure cl = closure_WLR(n);
    std::set<std::vector<std::int32_t>> tables;
    for (const auto& I : subsets_of(n - 1))
      for (const auto& J : subsets_of(n - 1))
        tables.insert(proj_endo({n, I, J, Side::two_sided}).image);
    CHECK(cl.idempotents.size() == tables.size());
    for (const auto& t : tables) CHECK(cl.find(t).has_value());
    CHECK(cl.elements[cl.identity_index].image ==
          identity_endo(cl.poset).image);
  }
  CHECK(closure_WLR(3).idempotents.size() == 10);
}

TEST_CASE("parabolic maps against brute-force maxima") {
  const BruhatContext& ctx = bruhat_context(4);
  for (const auto& J : subsets_of(3)) {
    std::vector<int> wj = parabolic_subgroup(ctx, J);
    for (const Permutation& w : ctx.perms) {
      std::vector<int> below;
      for (int b : wj)
        if (bruhat_leq(ctx.perms[b], w)) below.push_back(b);
      REQUIRE_FALSE(below.empty());
      int best = -1;
      for (int h : below) {
        bool top = true;
        for (int other : below)
          if (!ctx.poset->leq(other, h)) top = false;
        if (top) best = h;
      }
      REQUIRE(best >= 0);  // the maximum exists and is unique
      CHECK(ctx.id_of(parabolic_map(w, J)) == best);
      if (w.is_involution()) CHECK(parabolic_map(w, J).is_involution());
    }
  }
}

TEST_CASE("involution posets") {
  CHECK(involution_context(2).invols.size() == 2);
  CHECK(involution_context(3).invols.size() == 4);
  CHECK(involution_context(4).invols.size() == 10);
  CHECK(involution_context(5).invols.size() == 26);

  // Four elements in a diamond: the rank halves the usual length count.
  CHECK(testutil::poset_isomorphic(*involution_poset(3), *boolean_lattice(2)));
  CHECK(involution_poset(4)->eulerian());

  const InvolContext& ctx = involution_context(4);
  for (int i = 0; i < static_cast<int>(ctx.invols.size()); ++i) {
    const Permutation& w = ctx.invols[i];
    CHECK(w.is_involution());
    CHECK(ctx.poset->rank[i] == (w.length() + w.two_cycles()) / 2);
  }
}

TEST_CASE("twisted matchings and their restricted projections") {
  for (int s = 1; s <= 3; ++s) {
    Matching m = twisted_matching(4, s);
    CHECK(is_special(m));
    CHECK(idempotent_from_matching(m) == hat_projection(4, {s}));
  }
  CHECK(twisted_matching(4, 1).partner != twisted_matching(4, 2).partner);
  CHECK(twisted_matching(4, 2).partner != twisted_matching(4, 3).partner);

  CHECK(hat_projection(4, {}) == identity_endo(involution_poset(4)));
  for (const auto& J : subsets_of(3)) {
    Endo e = hat_projection(4, J);
    CHECK(is_idempotent(e));
    CHECK(check_membership(e).in_or_k());
  }
  CHECK(image_set(hat_projection(4, {1, 2, 3})).to_vector() ==
        std::vector<int>{0});
}

TEST_CASE("projection tables match their closed-form classification") {
  for (int m = 1; m <= 3; ++m) {
    // Entries range over proper nonempty subsets.
    std::size_t proper = (std::size_t(1) << m) - 2;
    ProjectionTable group = projection_tables(m, false);
    CHECK(group.num_generators == m);
    CHECK_FALSE(group.involutions_kind);
    CHECK(group.entries.size() == proper * proper);
    CHECK(group.matches_closed_form);
    for (const auto& entry : group.entries)
      CHECK(entry.projection == entry.closed_form);

    ProjectionTable inv = projection_tables(m, true);
    CHECK(inv.involutions_kind);
    CHECK(inv.entries.size() == proper);
    CHECK(inv.matches_closed_form);
  }

  // Spot checks of the predictions themselves.
  CHECK(group_projection_closed_form(3, {1}, {1, 2}));
  CHECK(group_projection_closed_form(3, {2, 3}, {3}));
  CHECK_FALSE(group_projection_closed_form(3, {1, 3}, {1, 3}));
  CHECK_FALSE(group_projection_closed_form(2, {1}, {2}));
  CHECK(group_projection_closed_form(2, {1}, {1}));
  CHECK(involution_projection_closed_form(3, {2}));
  CHECK(involution_projection_closed_form(3, {1, 2}));
  CHECK(involution_projection_closed_form(3, {2, 3}));
  CHECK_FALSE(involution_projection_closed_form(3, {1, 3}));

  // Rendering is deterministic.
  ProjectionTable t = projection_tables(2, false);
  CHECK(projection_table_text(t) == projection_table_text(t));
  CHECK_FALSE(projection_table_text(t).empty());
}
