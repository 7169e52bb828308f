#include "matchmonoid/idempotent_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "matchmonoid/config.hpp"
#include "matchmonoid/errors.hpp"
#include "matchmonoid/induced.hpp"
#include "matchmonoid/parallel.hpp"

namespace matchmonoid {

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::skipped: return "skipped";
    case Flag::passed: return "passed";
    case Flag::failed: return "failed";
  }
  return "unknown";
}

namespace {

void require_idempotent(const Endo& f) {
  if (!check_membership(f).in_or_k())
    fail(Errc::not_in_or_k, "endofunction is not regressive order-preserving");
  if (!is_idempotent(f)) fail(Errc::not_idempotent, "endofunction is not idempotent");
}

// Smallest failing index under a parallel scan, or `total` if none fails.
template <typename Check>
std::size_t first_failure(std::size_t total, Check&& bad) {
  std::atomic<std::size_t> first{total};
  parallel_chunks(total, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (i >= first.load(std::memory_order_relaxed)) return;
      if ((i & 0xfff) == 0) config::check_deadline();
      if (bad(i)) {
        std::size_t cur = first.load(std::memory_order_relaxed);
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  return first.load();
}

}  // namespace

RetractResult interval_retract(const Endo& p_endo) {
  require_idempotent(p_endo);
  const Poset& K = *p_endo.poset;
  RetractResult res;
  res.retract_top.assign(K.n, -1);
  Bitset covered(K.n);
  for (int v : image_set(p_endo).to_vector()) {
    Bitset fib = fiber_mask(p_endo, v);
    auto iv = is_interval(K, fib);
    if (!iv) {
      res.ok = false;
      res.non_interval_fiber = v;
      res.retract_top.assign(K.n, -1);
      return res;
    }
    if (iv->first != v)
      throw std::logic_error("fiber minimum differs from its image point");
    res.retract_top[v] = iv->second;
    covered |= fib;
  }
  if (covered.count() != static_cast<std::size_t>(K.n))
    throw std::logic_error("fiber intervals fail to cover the poset");
  res.ok = true;
  return res;
}

ProjectionCheck projection_check(const Endo& p_endo) {
  require_idempotent(p_endo);
  const Poset& K = *p_endo.poset;
  std::vector<int> img = image_set(p_endo).to_vector();

  std::vector<Bitset> fib(K.n);
  for (int v : img) fib[v] = fiber_mask(p_endo, v);

  // Comparable image pairs, smallest rank differences first so that a
  // failure witness is as local as possible.
  std::vector<std::pair<int, int>> pairs;
  for (int x : img)
    for (int y : img)
      if (K.leq(x, y)) pairs.emplace_back(x, y);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    int da = K.rank[a.second] - K.rank[a.first];
    int db = K.rank[b.second] - K.rank[b.first];
    if (da != db) return da < db;
    return a < b;
  });

  std::size_t bad = first_failure(pairs.size(), [&](std::size_t i) {
    auto [x, y] = pairs[i];
    Bitset s = K.interval(x, y);
    s &= fib[x];
    return !is_interval(K, s).has_value();
  });

  ProjectionCheck res;
  res.ok = bad == pairs.size();
  if (!res.ok) {
    res.witness = pairs[bad];
    Bitset s = K.interval(pairs[bad].first, pairs[bad].second);
    s &= fib[pairs[bad].first];
    res.witness_set = s.to_vector();
  }
  return res;
}

bool is_projection(const Endo& p_endo) { return projection_check(p_endo).ok; }

Integer mobius_image(const Endo& p_endo, int x, int y) {
  require_idempotent(p_endo);
  const Poset& K = *p_endo.poset;
  Bitset img = image_set(p_endo);
  if (x < 0 || x >= K.n || y < 0 || y >= K.n || !img.test(x) || !img.test(y))
    fail(Errc::not_in_image, "both endpoints must lie in the image");
  if (!K.leq(x, y)) fail(Errc::not_comparable, "endpoints are not comparable");

  InducedSubposet sub(p_endo.poset, img);
  Integer via_induced = sub.mobius_total(sub.local_id(x), sub.local_id(y));

  Integer via_transport = 0;
  for (int u : fiber(p_endo, x))
    if (K.leq(u, y)) via_transport += K.mobius_total(u, y);
  if (via_induced != via_transport)
    throw std::logic_error("image Mobius routes disagree: induced " +
                           integer_str(via_induced) + " vs fiber transport " +
                           integer_str(via_transport));

  if (K.eulerian() && is_projection(p_endo)) {
    Integer via_rank = 0;
    if (K.interval(x, y).is_subset_of(img))
      via_rank = (K.rank[y] - K.rank[x]) % 2 == 0 ? 1 : -1;
    if (via_induced != via_rank)
      throw std::logic_error("image Mobius routes disagree: induced " +
                             integer_str(via_induced) + " vs signed rank rule " +
                             integer_str(via_rank));
  }
  return via_induced;
}

namespace {

Flag check_complement_lemma(const Endo& e,
                            std::optional<std::pair<int, int>>* witness) {
  const Poset& K = *e.poset;
  Bitset img = image_set(e);
  std::vector<int> outside;
  for (int x = 0; x < K.n; ++x)
    if (!img.test(x)) outside.push_back(x);

  std::vector<std::pair<int, int>> pairs;
  for (int u : outside)
    for (int v : outside)
      if (K.leq(u, v)) pairs.emplace_back(u, v);

  std::size_t bad = first_failure(pairs.size(), [&](std::size_t i) {
    auto [u, v] = pairs[i];
    bool misses_image = !K.interval(u, v).intersects(img);
    bool below_projection = K.lt(u, e(v));
    return misses_image == below_projection;
  });
  if (bad == pairs.size()) return Flag::passed;
  if (witness) *witness = pairs[bad];
  return Flag::failed;
}

TheoremFlags verify_impl(const Endo& e, const MonoidClosure* closure,
                         bool require_eulerian) {
  require_idempotent(e);
  if (closure && closure->poset.get() != e.poset.get())
    fail(Errc::poset_mismatch, "closure lives on a different poset");
  const Poset& K = *e.poset;

  bool eul = K.eulerian();
  if (!eul && require_eulerian)
    fail(Errc::not_eulerian, "gradedness checks require an Eulerian poset");

  TheoremFlags fl;
  ProjectionCheck pc = projection_check(e);
  std::optional<bool> special;
  if (closure) special = closure->contains(e);
  Bitset img = image_set(e);

  if (eul && pc.ok) {
    InducedSubposet image_sub(e.poset, img);
    fl.image_graded =
        image_sub.graded_with_ambient_rank() ? Flag::passed : Flag::failed;

    Bitset bottom_fiber = fiber_mask(e, K.bottom);
    std::vector<int> atom_subset;
    for (int a : K.atoms())
      if (bottom_fiber.test(a)) atom_subset.push_back(a);
    fl.atoms_ok = ideal_below_atoms(K, atom_subset) == bottom_fiber
                      ? Flag::passed
                      : Flag::failed;
  }

  if (eul && pc.ok && special.has_value() && *special) {
    Bitset comp(K.n);
    for (int x = 0; x < K.n; ++x)
      if (!img.test(x)) comp.set(x);
    comp.set(K.bottom);
    InducedSubposet comp_sub(e.poset, comp);
    fl.complement_graded =
        comp_sub.graded_with_ambient_rank() ? Flag::passed : Flag::failed;
  }

  // Fibers of a special idempotent must be intervals partitioning K; for a
  // plain idempotent a retract is a bonus, never a failure.
  if (interval_retract(e).ok)
    fl.partition_ok = Flag::passed;
  else if (special.has_value() && *special)
    fl.partition_ok = Flag::failed;

  fl.complement_lemma = check_complement_lemma(e, nullptr);
  return fl;
}

}  // namespace

TheoremFlags verify_structure_theorems(const Endo& p_endo,
                                       const MonoidClosure& closure,
                                       bool require_eulerian) {
  return verify_impl(p_endo, &closure, require_eulerian);
}

IdempotentReport analyze(const Endo& p_endo, const MonoidClosure* closure,
                         bool require_eulerian) {
  require_idempotent(p_endo);
  const Poset& K = *p_endo.poset;

  IdempotentReport rep;
  rep.endo = p_endo;
  rep.image = image_set(p_endo).to_vector();

  std::size_t fiber_total = 0;
  for (int v : rep.image) {
    std::vector<int> f = fiber(p_endo, v);
    fiber_total += f.size();
    for (int z : f)
      if (!K.leq(v, z))
        throw std::logic_error("fiber element below its image point");
    rep.fibers.emplace_back(v, std::move(f));
  }
  if (fiber_total != static_cast<std::size_t>(K.n))
    throw std::logic_error("fibers fail to partition the carrier");

  rep.retract = interval_retract(p_endo);
  rep.projection = projection_check(p_endo);
  if (closure) rep.special = closure->contains(p_endo);
  rep.flags = verify_impl(p_endo, closure, require_eulerian);
  return rep;
}

}  // namespace matchmonoid
