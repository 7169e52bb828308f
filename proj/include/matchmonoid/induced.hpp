#ifndef MATCHMONOID_INDUCED_HPP
#define MATCHMONOID_INDUCED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "matchmonoid/bitset.hpp"
#include "matchmonoid/integer.hpp"
#include "matchmonoid/poset.hpp"

namespace matchmonoid {

// The induced subposet on a subset of a poset's elements. Unlike Poset this
// carrier makes no gradedness promises; images and complements of idempotents
// are analyzed through it, including the cases where they fail to be graded.
class InducedSubposet {
 public:
  InducedSubposet(PosetPtr ambient, const Bitset& elems);
  InducedSubposet(PosetPtr ambient, std::vector<int> elems);

  int size() const { return static_cast<int>(elems_.size()); }
  int ambient_id(int local) const { return elems_[local]; }
  // -1 when the ambient element is outside the carrier.
  int local_id(int ambient) const { return local_[ambient]; }
  const std::vector<int>& elements() const { return elems_; }
  const Poset& ambient() const { return *ambient_; }

  bool leq(int lx, int ly) const { return up_[lx].test(ly); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Graded with the ambient rank as rank function: unique minimum and
  // maximum, and every induced cover climbs exactly one ambient rank step.
  bool graded_with_ambient_rank() const;

  // Mobius function of the induced order (0 when incomparable). Local ids.
  Integer mobius_total(int lx, int ly) const;

 private:
  void init();
  PosetPtr ambient_;
  std::vector<int> elems_;   // ascending ambient ids
  std::vector<int> local_;   // ambient -> local
  std::vector<Bitset> up_, down_;
  std::vector<std::pair<int, int>> covers_;
  mutable std::vector<std::optional<std::vector<Integer>>> mobius_rows_;
};

}  // namespace matchmonoid

#endif
