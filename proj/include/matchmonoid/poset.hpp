#ifndef MATCHMONOID_POSET_HPP
#define MATCHMONOID_POSET_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matchmonoid/bitset.hpp"
#include "matchmonoid/integer.hpp"

namespace matchmonoid {

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

// A finite graded poset with a minimum and a maximum. Instances are built
// through build_poset (or the family constructors) and are immutable
// afterwards; the only mutable state is the lazily computed Mobius/Eulerian
// cache, guarded by a mutex so rows are written exactly once.
class Poset {
 public:
  int n = 0;
  // Hasse diagram, lexicographically sorted (lower, upper). Transitive input
  // edges are dropped during construction.
  std::vector<std::pair<int, int>> covers;
  std::vector<int> rank;  // rank[bottom] == 0; +1 along every cover
  int bottom = 0;
  int top = 0;
  std::vector<std::string> labels;  // always size n

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  // {z : x <= z <= y}; empty bitset when incomparable.
  Bitset interval(int x, int y) const { return up_[x] & down_[y]; }
  const Bitset& up_set(int x) const { return up_[x]; }
  const Bitset& down_set(int y) const { return down_[y]; }
  const std::vector<int>& covers_above(int x) const { return cov_up_[x]; }
  const std::vector<int>& covers_below(int x) const { return cov_down_[x]; }
  int max_rank() const { return rank[top]; }
  const Bitset& atom_mask() const { return atoms_; }
  std::vector<int> atoms() const { return atoms_.to_vector(); }
  const std::string& label(int x) const { return labels[x]; }

  // mu(x, y) for comparable pairs, 0 otherwise. Memoized per source row.
  Integer mobius_total(int x, int y) const;
  // Whole row x as a vector indexed by y (0 where incomparable).
  std::shared_ptr<const std::vector<Integer>> mobius_row(int x) const;

  // True iff mu(x,y) == (-1)^(rank(y)-rank(x)) on every comparable pair.
  // Cached. When true, the 4-element rank-2 interval consequence is asserted.
  bool eulerian() const;

 private:
  friend PosetPtr build_poset(int, std::vector<std::pair<int, int>>,
                              std::vector<std::string>);
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<int>> cov_up_, cov_down_;
  Bitset atoms_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<int, std::shared_ptr<const std::vector<Integer>>>
      mobius_rows_;
  mutable std::optional<bool> eulerian_;
};

// Validates and normalizes: rejects cycles, multiple minima/maxima, rank
// conflicts; drops transitive input edges; derives ranks from the bottom.
// labels may be empty (decimal ids are used) or have exactly n entries.
PosetPtr build_poset(int n, std::vector<std::pair<int, int>> covers,
                     std::vector<std::string> labels = {});

// mu(x, y); requires x <= y (NotComparable otherwise).
Integer mobius(const Poset& p, int x, int y);

bool is_eulerian(const Poset& p);

// If elems (as a set) equals a closed interval [min, max], returns that pair.
std::optional<std::pair<int, int>> is_interval(const Poset& p,
                                               const std::vector<int>& elems);
std::optional<std::pair<int, int>> is_interval(const Poset& p,
                                               const Bitset& elems);

// Recomputes the Hasse diagram from the order relation; equal to p.covers by
// construction (exposed so tests can assert the idempotence invariant).
std::vector<std::pair<int, int>> recompute_covers(const Poset& p);

// Cartesian product. Element ids are mixed-radix encodings of factor tuples
// (last factor varies fastest); product_encode/product_decode convert.
PosetPtr product(const std::vector<PosetPtr>& factors);
int product_encode(const std::vector<int>& sizes, const std::vector<int>& coords);
std::vector<int> product_decode(const std::vector<int>& sizes, int id);

// Families.
PosetPtr chain(int n);                // n >= 1 elements 0 < 1 < ... < n-1
PosetPtr boolean_lattice(int k);      // 2^k subsets, k >= 0
PosetPtr divisor_poset(long long n);  // divisors of n >= 1 ordered by divisibility

// K_A: elements all of whose atoms lie in the given atom subset. The result
// is downward closed and contains the bottom.
Bitset ideal_below_atoms(const Poset& p, const std::vector<int>& atom_subset);

// Deterministic Graphviz rendering of the Hasse diagram, edges bottom-to-top,
// elements rank-aligned.
std::string to_dot(const Poset& p, const std::string& graph_name = "hasse");

}  // namespace matchmonoid

#endif
