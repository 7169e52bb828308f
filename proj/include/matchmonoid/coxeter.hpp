#pragma once

#include <string>
#include <vector>

#include "matchmonoid/endo.hpp"
#include "matchmonoid/matching.hpp"
#include "matchmonoid/poset.hpp"

namespace matchmonoid {

// A permutation of [n] in one-line notation (1-based values). Products use
// standard function composition: (u*v)(i) = u(v(i)).
struct Permutation {
  std::vector<int> word;

  int n() const { return static_cast<int>(word.size()); }
  int operator()(int i) const { return word[i - 1]; }  // 1-based
  bool operator==(const Permutation& o) const { return word == o.word; }
  bool operator!=(const Permutation& o) const { return word != o.word; }
  bool operator<(const Permutation& o) const { return word < o.word; }

  int length() const;           // inversion count
  Permutation inverse() const;
  bool is_involution() const;
  int two_cycles() const;       // number of 2-cycles (absolute length)
  std::string str() const;      // e.g. "2134"
};

Permutation perm_identity(int n);
Permutation perm_from_string(const std::string& one_line);
Permutation perm_multiply(const Permutation& u, const Permutation& v);
// s_i: the adjacent transposition swapping values/positions i, i+1 (1-based,
// 1 <= i <= n-1).
Permutation adjacent_transposition(int n, int i);

// The subword/dominance criterion for Bruhat comparison, independent of any
// poset construction (used as a cross-check oracle as well).
bool bruhat_leq(const Permutation& u, const Permutation& v);

// The symmetric group S_n under Bruhat order, with elements indexed by the
// lexicographic rank of their one-line notation. Cached per n.
struct BruhatContext {
  int n = 0;
  PosetPtr poset;                   // rank = Coxeter length
  std::vector<Permutation> perms;   // by element id (lexicographic)
  int id_of(const Permutation& w) const;
};

const BruhatContext& bruhat_context(int n);  // 2 <= n <= 7
PosetPtr bruhat_poset(int n);

enum class Side { right, left, two_sided };
const char* side_name(Side s);  // "right" / "left" / "double"

// Parabolic quotient data: right quotients use J, left use I, double use both.
// Generator indices are 1-based (s_1 .. s_{n-1}).
struct QuotientSpec {
  int n = 0;
  std::vector<int> I;
  std::vector<int> J;
  Side side = Side::right;
};

// Minimal coset representative: w^J, ^Iw, or ^I w^J by side.
Permutation proj_element(const QuotientSpec& spec, const Permutation& w);
// The same map as an endofunction of the Bruhat poset (P^J, Q^I, Q^I P^J).
Endo proj_endo(const QuotientSpec& spec);

// Composite of single-generator quotient projections along `word` (1-based
// generator indices, not necessarily reduced); right side composes P^{s},
// left side Q^{s}. The rightmost letter acts first.
Endo hecke_product(int n, Side side, const std::vector<int>& word);

// The longest element of the parabolic subgroup W_J (block reversals), and
// one reduced word for it.
Permutation longest_element(int n, const std::vector<int>& J);
std::vector<int> reduced_word_w0(int n, const std::vector<int>& J);

// One reduced word for w (greedy descent stripping).
std::vector<int> reduced_word(const Permutation& w);

// All elements of W_J as poset element ids, ascending.
std::vector<int> parabolic_subgroup(const BruhatContext& ctx,
                                    const std::vector<int>& J);

// The 2(n-1) multiplication matchings z -> zs / z -> sz of the full Bruhat
// poset, deduplicated (right s_1.., then left s_1.., first occurrence kept).
std::vector<Matching> multiplication_matchings(int n);

// The two-sided 0-Hecke closure generated by all P^{M} of multiplication
// matchings; asserts that its idempotents are exactly the distinct double
// projection tables Q^I P^J. Capped at n <= 5.
MonoidClosure closure_WLR(int n);

// max{v in W_J : v <= w}; existence is a structural guarantee.
Permutation parabolic_map(const Permutation& w, const std::vector<int>& J);

// max(coset(u) ∩ [u,v]) where coset(u) is u W_J, W_I u, or W_I u W_J by
// side; u, v must lie in the quotient image with u <= v.
Permutation coset_max(const QuotientSpec& spec, const Permutation& u,
                      const Permutation& v);

// Involutions of S_n under the induced Bruhat order; rank is
// (length + #2-cycles) / 2, verified against the cover structure. Cached.
struct InvolContext {
  int n = 0;
  PosetPtr poset;
  std::vector<Permutation> invols;  // by element id (lexicographic)
  int id_of(const Permutation& w) const;
};

const InvolContext& involution_context(int n);  // 2 <= n <= 7
PosetPtr involution_poset(int n);

// The conjugation/multiplication matching v -> vs (when svs = v) or svs on
// the involution poset; verified special.
Matching twisted_matching(int n, int s);

// Restriction of Q^J P^J to involutions, computed as the composite of
// twisted-matching idempotents along a reduced word of w0(J) and verified
// against the direct restriction.
Endo hat_projection(int n, const std::vector<int>& J);

// Projection classification tables over all quotient specs of a group with
// `num_generators` generators (so the group is S_{num_generators+1}).
struct ProjectionTableEntry {
  std::vector<int> I;  // empty for the involution kind
  std::vector<int> J;
  bool projection = false;
  bool closed_form = false;  // the predicted classification
};

struct ProjectionTable {
  int num_generators = 0;
  bool involutions_kind = false;
  std::vector<ProjectionTableEntry> entries;
  bool matches_closed_form = false;
};

ProjectionTable projection_tables(int num_generators, bool involutions_kind);
std::string projection_table_text(const ProjectionTable& table);

// Closed-form predictions for the two tables: Q^I P^J is a special
// projection iff I∩J ∈ {I,J} and both I, J are prefix or suffix intervals
// of [num_generators]; the involution projection needs J a singleton,
// prefix, or suffix interval.
bool group_projection_closed_form(int num_generators, const std::vector<int>& I,
                                  const std::vector<int>& J);
bool involution_projection_closed_form(int num_generators,
                                       const std::vector<int>& J);

}  // namespace matchmonoid
