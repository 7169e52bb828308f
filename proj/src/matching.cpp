#include "matchmonoid/matching.hpp"

#include <algorithm>

#include "matchmonoid/config.hpp"
#include "matchmonoid/errors.hpp"
#include "matchmonoid/parallel.hpp"

namespace matchmonoid {

namespace {

bool cover_adjacent(const Poset& p, int a, int b) {
  int lo = p.rank[a] < p.rank[b] ? a : b;
  int hi = lo == a ? b : a;
  if (p.rank[hi] != p.rank[lo] + 1 || !p.leq(lo, hi)) return false;
  return true;  // rank-adjacent comparable pairs are covers in a graded poset
}

void validate_partner(const Poset& p, const std::vector<std::int32_t>& partner,
                      bool allow_fixed) {
  if (static_cast<int>(partner.size()) != p.n)
    fail(Errc::bad_parameter, "partner table size mismatch");
  for (int x = 0; x < p.n; ++x) {
    int y = partner[x];
    if (y < 0 || y >= p.n) fail(Errc::bad_parameter, "partner out of range");
    if (partner[y] != x) fail(Errc::bad_parameter, "partner table is not involutive");
    if (y == x) {
      if (!allow_fixed)
        fail(Errc::bad_parameter, "matching leaves element " + std::to_string(x) +
                                      " unmatched");
      continue;
    }
    if (!cover_adjacent(p, x, y))
      fail(Errc::bad_parameter, "matched pair is not a cover pair");
  }
  if (allow_fixed && p.n >= 2 && partner[p.top] == p.top)
    fail(Errc::bad_parameter, "partial matching must move the top element");
}

// The special condition over every decided cover pair touching w.
bool special_ok_around(const Poset& p, const std::vector<std::int32_t>& partner,
                       int w) {
  auto check_pair = [&](int x, int y) {
    if (partner[x] < 0 || partner[y] < 0) return true;
    if (partner[y] == x) return true;
    return p.leq(partner[x], partner[y]);
  };
  for (int x : p.covers_below(w))
    if (!check_pair(x, w)) return false;
  for (int y : p.covers_above(w))
    if (!check_pair(w, y)) return false;
  return true;
}

struct MatchSearch {
  const Poset& p;
  bool partial;
  std::vector<int> order;  // processing order
  std::vector<std::int32_t> partner;
  std::vector<std::vector<std::int32_t>> results;

  MatchSearch(const Poset& poset, bool allow_fixed)
      : p(poset), partial(allow_fixed), partner(poset.n, -1) {
    for (int x = 0; x < p.n; ++x) order.push_back(x);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return p.rank[a] != p.rank[b] ? p.rank[a] < p.rank[b] : a < b;
    });
    if (partial) {
      // the top is forced downward; decide it first
      order.erase(std::find(order.begin(), order.end(), p.top));
      order.insert(order.begin(), p.top);
    }
  }

  std::vector<int> candidates(int u) const {
    std::vector<int> cand;
    for (int v : p.covers_below(u))
      if (partner[v] < 0) cand.push_back(v);
    if (!(partial && u == p.top))
      for (int v : p.covers_above(u))
        if (partner[v] < 0) cand.push_back(v);
    std::sort(cand.begin(), cand.end());
    if (partial && u != p.top) cand.push_back(u);
    return cand;
  }

  bool assign(int u, int v) {
    partner[u] = v;
    partner[v] = u;
    if (!special_ok_around(p, partner, u) ||
        (v != u && !special_ok_around(p, partner, v))) {
      partner[u] = -1;
      partner[v] = -1;
      return false;
    }
    return true;
  }

  void unassign(int u, int v) {
    partner[u] = -1;
    partner[v] = -1;
  }

  void run(std::size_t from) {
    config::check_deadline();
    while (from < order.size() && partner[order[from]] >= 0) ++from;
    if (from == order.size()) {
      results.push_back(partner);
      return;
    }
    int u = order[from];
    for (int v : candidates(u)) {
      if (assign(u, v)) run(from + 1);
      if (partner[u] == u || partner[u] == v) unassign(u, v);
    }
  }
};

std::vector<std::vector<std::int32_t>> enumerate_partner_tables(const Poset& p,
                                                                bool partial) {
  if (!partial && p.n % 2 != 0) return {};
  MatchSearch probe(p, partial);
  int first = probe.order[0];
  std::vector<int> top_candidates = probe.candidates(first);
  std::vector<std::vector<std::vector<std::int32_t>>> buckets(top_candidates.size());
  parallel_chunks(top_candidates.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      MatchSearch search(p, partial);
      if (search.assign(first, top_candidates[i])) {
        search.run(0);
        buckets[i] = std::move(search.results);
      }
    }
  });
  std::vector<std::vector<std::int32_t>> all;
  for (auto& b : buckets)
    for (auto& t : b) all.push_back(std::move(t));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

Matching make_matching(PosetPtr p, std::vector<std::int32_t> partner) {
  validate_partner(*p, partner, false);
  return Matching{std::move(p), std::move(partner)};
}

PartialMatching make_partial_matching(PosetPtr p, std::vector<std::int32_t> partner) {
  validate_partner(*p, partner, true);
  return PartialMatching{std::move(p), std::move(partner)};
}

namespace {

bool special_condition(const Poset& p, const std::vector<std::int32_t>& partner) {
  for (auto [x, y] : p.covers) {
    if (partner[y] == x) continue;
    if (!p.leq(partner[x], partner[y])) return false;
  }
  return true;
}

bool lifting_condition(const Poset& p, const std::vector<std::int32_t>& partner,
                       bool non_strict) {
  for (int u = 0; u < p.n; ++u) {
    bool u_ok = non_strict ? p.rank[partner[u]] >= p.rank[u]
                           : p.rank[partner[u]] > p.rank[u];
    if (!u_ok) continue;
    for (int v = 0; v < p.n; ++v) {
      if (!p.leq(u, v)) continue;
      bool v_ok = non_strict ? p.rank[partner[v]] <= p.rank[v]
                             : p.rank[partner[v]] < p.rank[v];
      if (!v_ok) continue;
      if (!p.leq(partner[u], v) || !p.leq(u, partner[v])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_special(const Matching& m) { return special_condition(*m.poset, m.partner); }
bool is_special(const PartialMatching& m) {
  return special_condition(*m.poset, m.partner);
}

bool satisfies_lifting(const Matching& m) {
  return lifting_condition(*m.poset, m.partner, false);
}
bool satisfies_lifting(const PartialMatching& m) {
  return lifting_condition(*m.poset, m.partner, true);
}

std::vector<Matching> enumerate_special_matchings(PosetPtr p) {
  std::vector<Matching> out;
  for (auto& t : enumerate_partner_tables(*p, false))
    out.push_back(Matching{p, std::move(t)});
  return out;
}

std::vector<PartialMatching> enumerate_special_partial_matchings(PosetPtr p) {
  if (p->n < 2)
    fail(Errc::too_small, "partial matchings need at least two elements");
  std::vector<PartialMatching> out;
  for (auto& t : enumerate_partner_tables(*p, true))
    out.push_back(PartialMatching{p, std::move(t)});
  return out;
}

Endo idempotent_from_matching(const Matching& m) {
  if (!is_special(m)) fail(Errc::not_special, "matching violates the special condition");
  const Poset& p = *m.poset;
  std::vector<std::int32_t> image(p.n);
  for (int x = 0; x < p.n; ++x)
    image[x] = p.rank[m.partner[x]] > p.rank[x] ? x : m.partner[x];
  return make_endo(m.poset, std::move(image));
}

Endo idempotent_from_partial(const PartialMatching& m) {
  if (!is_special(m))
    fail(Errc::not_special, "partial matching violates the special condition");
  const Poset& p = *m.poset;
  std::vector<std::int32_t> image(p.n);
  for (int x = 0; x < p.n; ++x)
    image[x] = p.rank[m.partner[x]] >= p.rank[x] ? x : m.partner[x];
  return make_endo(m.poset, std::move(image));
}

namespace {

// Lift a factor matching to the product poset, acting on coordinate i.
std::vector<std::int32_t> lift_partner(const std::vector<int>& sizes, int n,
                                       std::size_t i,
                                       const std::vector<std::int32_t>& factor_partner) {
  std::vector<std::int32_t> out(n);
  for (int id = 0; id < n; ++id) {
    std::vector<int> coords = product_decode(sizes, id);
    coords[i] = factor_partner[coords[i]];
    out[id] = product_encode(sizes, coords);
  }
  return out;
}

// Componentwise product of factor endofunctions under the mixed-radix coding.
std::vector<std::int32_t> tuple_endo(const std::vector<int>& sizes, int n,
                                     const std::vector<const Endo*>& parts) {
  std::vector<std::int32_t> out(n);
  for (int id = 0; id < n; ++id) {
    std::vector<int> coords = product_decode(sizes, id);
    for (std::size_t i = 0; i < parts.size(); ++i) coords[i] = (*parts[i])(coords[i]);
    out[id] = product_encode(sizes, coords);
  }
  return out;
}

bool monoid_product_check(const std::vector<PosetPtr>& factors,
                          const std::vector<int>& sizes, PosetPtr prod,
                          const std::vector<Endo>& prod_gens,
                          const std::vector<std::vector<Endo>>& factor_gens,
                          std::size_t* monoid_size, std::size_t* factor_product) {
  MonoidClosure big = generate_closure(prod, prod_gens);
  std::vector<MonoidClosure> smalls;
  std::size_t expect = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    smalls.push_back(generate_closure(factors[i], factor_gens[i]));
    expect *= smalls.back().elements.size();
  }
  *monoid_size = big.elements.size();
  *factor_product = expect;
  if (big.elements.size() != expect) return false;
  // Every componentwise tuple must appear in the product closure.
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    std::vector<const Endo*> parts;
    for (std::size_t i = 0; i < factors.size(); ++i)
      parts.push_back(&smalls[i].elements[idx[i]]);
    if (!big.find(tuple_endo(sizes, prod->n, parts)).has_value()) return false;
    std::size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++idx[i] < smalls[i].elements.size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
  }
}

}  // namespace

ProductDecompositionReport product_decomposition_check(
    const std::vector<PosetPtr>& factors) {
  if (factors.empty()) fail(Errc::empty_factor_list, "no factors");
  PosetPtr prod = product(factors);
  std::vector<int> sizes;
  for (const auto& f : factors) sizes.push_back(f->n);

  ProductDecompositionReport rep;

  // Total matchings.
  std::vector<std::vector<std::int32_t>> direct;
  for (auto& m : enumerate_special_matchings(prod)) direct.push_back(m.partner);
  std::vector<std::vector<std::int32_t>> lifted;
  std::vector<std::vector<Endo>> factor_gens(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (auto& m : enumerate_special_matchings(factors[i])) {
      lifted.push_back(lift_partner(sizes, prod->n, i, m.partner));
      factor_gens[i].push_back(idempotent_from_matching(m));
    }
  std::sort(lifted.begin(), lifted.end());
  rep.direct_count = direct.size();
  rep.lifted_count = lifted.size();
  rep.matchings_match = direct == lifted;

  std::vector<Endo> prod_gens;
  for (auto& t : direct)
    prod_gens.push_back(idempotent_from_matching(Matching{prod, t}));
  rep.monoid_product_ok =
      monoid_product_check(factors, sizes, prod, prod_gens, factor_gens,
                           &rep.monoid_size, &rep.factor_monoid_product);

  // Partial matchings.
  std::vector<std::vector<std::int32_t>> direct_p;
  for (auto& m : enumerate_special_partial_matchings(prod))
    direct_p.push_back(m.partner);
  std::vector<std::vector<std::int32_t>> lifted_p;
  std::vector<std::vector<Endo>> factor_gens_p(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (auto& m : enumerate_special_partial_matchings(factors[i])) {
      lifted_p.push_back(lift_partner(sizes, prod->n, i, m.partner));
      factor_gens_p[i].push_back(idempotent_from_partial(m));
    }
  std::sort(lifted_p.begin(), lifted_p.end());
  rep.direct_partial_count = direct_p.size();
  rep.lifted_partial_count = lifted_p.size();
  rep.partial_matchings_match = direct_p == lifted_p;

  std::vector<Endo> prod_gens_p;
  for (auto& t : direct_p)
    prod_gens_p.push_back(idempotent_from_partial(PartialMatching{prod, t}));
  rep.partial_monoid_product_ok = monoid_product_check(
      factors, sizes, prod, prod_gens_p, factor_gens_p, &rep.partial_monoid_size,
      &rep.partial_factor_monoid_product);

  return rep;
}

ProductDecompositionReport product_decomposition_check(PosetPtr p1, PosetPtr p2) {
  return product_decomposition_check(std::vector<PosetPtr>{std::move(p1), std::move(p2)});
}

}  // namespace matchmonoid
