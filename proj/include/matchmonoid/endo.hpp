#ifndef MATCHMONOID_ENDO_HPP
#define MATCHMONOID_ENDO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchmonoid/bitset.hpp"
#include "matchmonoid/integer.hpp"
#include "matchmonoid/poset.hpp"

namespace matchmonoid {

// An endofunction of a poset, stored as a full image table. `word` is a
// witnessing product over some generator list (meaningful for closure
// elements; empty for directly constructed functions and for the identity).
struct Endo {
  PosetPtr poset;
  std::vector<std::int32_t> image;
  std::vector<int> word;

  int n() const { return static_cast<int>(image.size()); }
  int operator()(int x) const { return image[x]; }
  bool operator==(const Endo& o) const { return image == o.image; }
  bool operator!=(const Endo& o) const { return !(*this == o); }
};

Endo identity_endo(PosetPtr p);
Endo make_endo(PosetPtr p, std::vector<std::int32_t> image);

struct MembershipResult {
  bool regressive = false;
  bool order_preserving = false;
  // First violated pair: (x,x) for regressivity, (x,y) with x < y for
  // monotonicity. Deterministic (ascending scan).
  std::optional<std::pair<int, int>> witness;
  bool in_or_k() const { return regressive && order_preserving; }
};

// Exhaustive check of f(x) <= x and x <= y => f(x) <= f(y).
MembershipResult check_membership(const Endo& f);

// f after g. Both must live on the same poset object (PosetMismatch).
Endo compose(const Endo& f, const Endo& g);

bool is_idempotent(const Endo& f);
Bitset image_set(const Endo& f);
// Fiber of an image element v: {x : f(x) == v}.
std::vector<int> fiber(const Endo& f, int v);
Bitset fiber_mask(const Endo& f, int v);

// The submonoid generated by `gens` inside Or(K), closed by breadth-first
// right-multiplication with table interning. Deterministic: elements end up
// sorted lexicographically by image table regardless of generator order or
// worker count; each element keeps a shortest witnessing word over `gens`.
struct MonoidClosure {
  PosetPtr poset;
  std::vector<Endo> generators;
  std::vector<Endo> elements;        // sorted by image table
  std::vector<std::size_t> idempotents;  // ascending indices into elements
  std::size_t identity_index = 0;

  std::optional<std::size_t> find(const std::vector<std::int32_t>& image) const;
  bool contains(const Endo& f) const { return find(f.image).has_value(); }
  std::vector<Endo> idempotent_elements() const;
};

struct ClosureOptions {
  std::size_t budget = 0;  // 0: use config::closure_budget()
};

MonoidClosure generate_closure(PosetPtr p, std::vector<Endo> gens,
                               ClosureOptions opts = {});

// The natural order on a list of idempotents: P <= Q iff PQ = QP = Q (so the
// identity, when present, is the minimum). Verified to be a partial order.
struct IdempotentOrder {
  std::vector<Endo> elements;              // as given
  std::vector<Bitset> leq;                 // leq[i].test(j) <=> e_i <= e_j
  std::vector<std::pair<int, int>> hasse;  // covers, sorted
};

IdempotentOrder idempotent_order_relation(const std::vector<Endo>& elems);

// The same order materialized as a graded Poset (NotGraded where the order
// has no unit-step rank function). Labels default to positional names.
PosetPtr idempotent_order(const std::vector<Endo>& elems,
                          std::vector<std::string> labels = {});

// Least upper bound of two idempotents of Or(K) in the natural order: the
// unique absorbing idempotent inside the closure of {p, q}.
Endo join_idempotents(const Endo& p, const Endo& q);

// For an idempotent P, the inclusion of imm(P) and P form a Galois
// connection; checks the adjunction and the Mobius transport identity
// mu_imm(x, v) = sum over the fiber of x of mu_K(u, v).
struct GaloisReport {
  bool adjunction_ok = false;
  bool rota_ok = false;
  // (x, y/v) of the first failure, ambient ids.
  std::optional<std::pair<int, int>> witness;
  bool ok() const { return adjunction_ok && rota_ok; }
};

GaloisReport galois_verify(const Endo& p);

}  // namespace matchmonoid

#endif
