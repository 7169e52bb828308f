#ifndef MATCHMONOID_MATCHING_HPP
#define MATCHMONOID_MATCHING_HPP

#include <cstdint>
#include <vector>

#include "matchmonoid/endo.hpp"
#include "matchmonoid/poset.hpp"

namespace matchmonoid {

// A perfect matching of the Hasse diagram: an involution without fixed
// points whose orbits are cover pairs.
struct Matching {
  PosetPtr poset;
  std::vector<std::int32_t> partner;
};

// A partial matching: fixed points allowed everywhere except the top, which
// must be matched to a coatom.
struct PartialMatching {
  PosetPtr poset;
  std::vector<std::int32_t> partner;
};

// Structural validation (involutivity, cover adjacency, totality / the top
// rule). BadParameter on violation.
Matching make_matching(PosetPtr p, std::vector<std::int32_t> partner);
PartialMatching make_partial_matching(PosetPtr p, std::vector<std::int32_t> partner);

// x covered by y and x != M(y) implies M(x) <= M(y).
bool is_special(const Matching& m);
bool is_special(const PartialMatching& m);

// u <= v with u covered by M(u) and M(v) covered by v implies M(u) <= v and
// u <= M(v). The partial variant uses the non-strict comparisons, so fixed
// points qualify on both sides.
bool satisfies_lifting(const Matching& m);
bool satisfies_lifting(const PartialMatching& m);

// All special (partial) matchings, canonically sorted by partner table.
// Backtracking over elements in (rank, id) order with incremental pruning on
// the special condition; the partial variant branches the top over coatoms
// first. Results are independent of worker count.
std::vector<Matching> enumerate_special_matchings(PosetPtr p);
std::vector<PartialMatching> enumerate_special_partial_matchings(PosetPtr p);

// P(x) = min(x, M(x)); requires the matching to be special (NotSpecial).
Endo idempotent_from_matching(const Matching& m);
// P(x) = x when x <= M(x), else M(x).
Endo idempotent_from_partial(const PartialMatching& m);

// Machine check of the Cartesian decomposition: the special (partial)
// matchings of a product are exactly the factor-lifted ones, and the
// generated monoids multiply.
struct ProductDecompositionReport {
  bool matchings_match = false;          // sm(product) == lifts
  bool partial_matchings_match = false;  // sm_p(product) == partial lifts
  bool monoid_product_ok = false;        // |M(prod)| == prod |M(K_i)| + embedding
  bool partial_monoid_product_ok = false;
  std::size_t direct_count = 0, lifted_count = 0;
  std::size_t direct_partial_count = 0, lifted_partial_count = 0;
  std::size_t monoid_size = 0, factor_monoid_product = 0;
  std::size_t partial_monoid_size = 0, partial_factor_monoid_product = 0;
  bool pass() const {
    return matchings_match && partial_matchings_match && monoid_product_ok &&
           partial_monoid_product_ok;
  }
};

ProductDecompositionReport product_decomposition_check(
    const std::vector<PosetPtr>& factors);
ProductDecompositionReport product_decomposition_check(PosetPtr p1, PosetPtr p2);

}  // namespace matchmonoid

#endif
