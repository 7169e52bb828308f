#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchmonoid/endo.hpp"
#include "matchmonoid/integer.hpp"

namespace matchmonoid {

// Tri-state outcome for structure checks: a check whose hypothesis does not
// apply is skipped, never failed.
enum class Flag : std::uint8_t { skipped, passed, failed };

const char* flag_name(Flag f);

struct TheoremFlags {
  Flag image_graded = Flag::skipped;       // image graded by the ambient rank
  Flag complement_graded = Flag::skipped;  // complement + bottom graded likewise
  Flag partition_ok = Flag::skipped;       // K partitions into fiber intervals
  Flag atoms_ok = Flag::skipped;           // bottom fiber = ideal below its atoms
  Flag complement_lemma = Flag::skipped;   // [u,v] misses image iff u < P(v) fails

  bool any_failed() const {
    return image_graded == Flag::failed || complement_graded == Flag::failed ||
           partition_ok == Flag::failed || atoms_ok == Flag::failed ||
           complement_lemma == Flag::failed;
  }
};

// Outcome of the fibers-are-intervals analysis. When ok, retract_top[v] is
// the fiber maximum v^P for every image point v (and -1 elsewhere), and the
// intervals [v, v^P] have been verified to partition the carrier.
struct RetractResult {
  bool ok = false;
  std::vector<std::int32_t> retract_top;
  std::optional<int> non_interval_fiber;  // witness image point when !ok
};

// Projection predicate with a deterministic witness: the failing image pair
// (x, y) minimizing (rank difference, x, y), plus the offending set
// [x,y] ∩ fiber(x).
struct ProjectionCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;
  std::vector<int> witness_set;
};

struct IdempotentReport {
  Endo endo;
  std::vector<int> image;  // sorted image element ids
  std::vector<std::pair<int, std::vector<int>>> fibers;
  RetractResult retract;
  ProjectionCheck projection;
  std::optional<bool> special;  // set iff a closure was supplied
  TheoremFlags flags;
};

RetractResult interval_retract(const Endo& p_endo);

ProjectionCheck projection_check(const Endo& p_endo);
bool is_projection(const Endo& p_endo);

// Möbius function of the image subposet at (x, y), computed by every
// applicable route (induced recursion, fiber transport sum, and the signed
// rank rule on Eulerian posets for projections); the routes must agree.
Integer mobius_image(const Endo& p_endo, int x, int y);

// Checks the gradedness and fiber theorems that apply to this idempotent.
// Gradedness claims are only asserted over Eulerian ambient posets: on a
// non-Eulerian poset they are skipped, or rejected when require_eulerian is
// set. The complement-interval lemma is checked unconditionally.
TheoremFlags verify_structure_theorems(const Endo& p_endo,
                                       const MonoidClosure& closure,
                                       bool require_eulerian = false);

IdempotentReport analyze(const Endo& p_endo,
                         const MonoidClosure* closure = nullptr,
                         bool require_eulerian = false);

}  // namespace matchmonoid
