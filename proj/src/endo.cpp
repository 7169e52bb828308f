#include "matchmonoid/endo.hpp"

#include <algorithm>
#include <unordered_map>

#include "matchmonoid/config.hpp"
#include "matchmonoid/errors.hpp"
#include "matchmonoid/induced.hpp"
#include "matchmonoid/parallel.hpp"

namespace matchmonoid {

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void require_same_poset(const Endo& f, const Endo& g) {
  if (f.poset.get() != g.poset.get())
    fail(Errc::poset_mismatch, "endofunctions live on different posets");
}

}  // namespace

Endo identity_endo(PosetPtr p) {
  Endo e;
  e.poset = std::move(p);
  e.image.resize(e.poset->n);
  for (int x = 0; x < e.poset->n; ++x) e.image[x] = x;
  return e;
}

Endo make_endo(PosetPtr p, std::vector<std::int32_t> image) {
  if (static_cast<int>(image.size()) != p->n)
    fail(Errc::bad_parameter, "image table size mismatch");
  for (std::int32_t y : image)
    if (y < 0 || y >= p->n) fail(Errc::bad_parameter, "image value out of range");
  Endo e;
  e.poset = std::move(p);
  e.image = std::move(image);
  return e;
}

MembershipResult check_membership(const Endo& f) {
  const Poset& p = *f.poset;
  MembershipResult r;
  r.regressive = true;
  r.order_preserving = true;
  for (int x = 0; x < p.n && r.regressive; ++x)
    if (!p.leq(f(x), x)) {
      r.regressive = false;
      r.witness = {x, x};
    }
  for (int x = 0; x < p.n && r.order_preserving; ++x)
    for (int y = 0; y < p.n; ++y)
      if (x != y && p.leq(x, y) && !p.leq(f(x), f(y))) {
        r.order_preserving = false;
        if (!r.witness) r.witness = {x, y};
        break;
      }
  return r;
}

Endo compose(const Endo& f, const Endo& g) {
  require_same_poset(f, g);
  Endo h;
  h.poset = f.poset;
  h.image.resize(f.image.size());
  for (std::size_t x = 0; x < g.image.size(); ++x) h.image[x] = f.image[g.image[x]];
  h.word = f.word;
  h.word.insert(h.word.end(), g.word.begin(), g.word.end());
  return h;
}

bool is_idempotent(const Endo& f) {
  for (std::size_t x = 0; x < f.image.size(); ++x)
    if (f.image[f.image[x]] != f.image[x]) return false;
  return true;
}

Bitset image_set(const Endo& f) {
  Bitset out(f.image.size());
  for (std::int32_t y : f.image) out.set(y);
  return out;
}

std::vector<int> fiber(const Endo& f, int v) {
  std::vector<int> out;
  for (int x = 0; x < f.n(); ++x)
    if (f(x) == v) out.push_back(x);
  return out;
}

Bitset fiber_mask(const Endo& f, int v) {
  Bitset out(f.image.size());
  for (int x = 0; x < f.n(); ++x)
    if (f(x) == v) out.set(x);
  return out;
}

std::optional<std::size_t> MonoidClosure::find(
    const std::vector<std::int32_t>& image) const {
  auto cmp = [](const Endo& e, const std::vector<std::int32_t>& img) {
    return e.image < img;
  };
  auto it = std::lower_bound(elements.begin(), elements.end(), image, cmp);
  if (it != elements.end() && it->image == image)
    return static_cast<std::size_t>(it - elements.begin());
  return std::nullopt;
}

std::vector<Endo> MonoidClosure::idempotent_elements() const {
  std::vector<Endo> out;
  out.reserve(idempotents.size());
  for (std::size_t i : idempotents) out.push_back(elements[i]);
  return out;
}

MonoidClosure generate_closure(PosetPtr p, std::vector<Endo> gens,
                               ClosureOptions opts) {
  std::size_t budget = opts.budget ? opts.budget : config::closure_budget();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].poset.get() != p.get())
      fail(Errc::poset_mismatch, "generator lives on a different poset");
    MembershipResult m = check_membership(gens[i]);
    if (!m.in_or_k())
      fail(Errc::not_in_or_k, "generator " + std::to_string(i) +
                                  " is not regressive order-preserving");
    gens[i].word = {static_cast<int>(i)};
  }

  std::vector<Endo> elems;
  std::unordered_map<std::vector<std::int32_t>, std::size_t, TableHash> index;
  Endo id = identity_endo(p);
  index.emplace(id.image, 0);
  elems.push_back(std::move(id));

  // Level-synchronous BFS: compositions of the current level with every
  // generator are computed in parallel, then merged in (element, generator)
  // order so discovered words are deterministic and shortest.
  std::size_t level_begin = 0;
  while (level_begin < elems.size()) {
    std::size_t level_end = elems.size();
    std::size_t jobs = (level_end - level_begin) * gens.size();
    std::vector<std::vector<std::int32_t>> produced(jobs);
    parallel_chunks(jobs, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t j = lo; j < hi; ++j) {
        config::check_deadline();
        std::size_t ei = level_begin + j / gens.size();
        std::size_t gi = j % gens.size();
        const auto& base = elems[ei].image;
        const auto& g = gens[gi].image;
        std::vector<std::int32_t> img(base.size());
        for (std::size_t x = 0; x < g.size(); ++x) img[x] = base[g[x]];
        produced[j] = std::move(img);
      }
    });
    for (std::size_t j = 0; j < jobs; ++j) {
      auto& img = produced[j];
      if (index.count(img)) continue;
      if (elems.size() >= budget)
        fail(Errc::closure_budget_exceeded,
             "closure exceeds the element budget of " + std::to_string(budget));
      std::size_t ei = level_begin + j / gens.size();
      std::size_t gi = j % gens.size();
      Endo e;
      e.poset = p;
      e.word = elems[ei].word;
      e.word.push_back(static_cast<int>(gi));
      index.emplace(img, elems.size());
      e.image = std::move(img);
      elems.push_back(std::move(e));
    }
    level_begin = level_end;
  }

  std::sort(elems.begin(), elems.end(),
            [](const Endo& a, const Endo& b) { return a.image < b.image; });

  MonoidClosure out;
  out.poset = std::move(p);
  out.generators = std::move(gens);
  out.elements = std::move(elems);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (is_idempotent(out.elements[i])) out.idempotents.push_back(i);
    if (out.elements[i].word.empty()) out.identity_index = i;
  }
  return out;
}

IdempotentOrder idempotent_order_relation(const std::vector<Endo>& elems) {
  if (elems.empty()) fail(Errc::empty_subset, "idempotent order over no elements");
  for (std::size_t i = 1; i < elems.size(); ++i)
    require_same_poset(elems[0], elems[i]);
  for (const Endo& e : elems)
    if (!is_idempotent(e)) fail(Errc::not_idempotent, "element is not idempotent");

  int m = static_cast<int>(elems.size());
  IdempotentOrder ord;
  ord.elements = elems;
  ord.leq.assign(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        ord.leq[i].set(j);
        continue;
      }
      if (compose(elems[i], elems[j]) == elems[j] &&
          compose(elems[j], elems[i]) == elems[j])
        ord.leq[i].set(j);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && ord.leq[i].test(j) && ord.leq[j].test(i))
        throw std::logic_error("idempotent order is not antisymmetric");
  std::vector<Bitset> down(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    ord.leq[i].for_each([&](std::size_t j) { down[j].set(i); });
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && ord.leq[i].test(j) &&
          ord.leq[i].intersection_count(down[j]) == 2)
        ord.hasse.emplace_back(i, j);
  std::sort(ord.hasse.begin(), ord.hasse.end());
  return ord;
}

PosetPtr idempotent_order(const std::vector<Endo>& elems,
                          std::vector<std::string> labels) {
  IdempotentOrder ord = idempotent_order_relation(elems);
  if (labels.empty()) {
    Endo id = identity_endo(elems.front().poset);
    labels.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      labels[i] = elems[i] == id ? "id" : "e" + std::to_string(i);
  }
  return build_poset(static_cast<int>(elems.size()), ord.hasse, std::move(labels));
}

Endo join_idempotents(const Endo& p, const Endo& q) {
  require_same_poset(p, q);
  if (!is_idempotent(p) || !is_idempotent(q))
    fail(Errc::not_idempotent, "join is defined for idempotents only");
  if (!check_membership(p).in_or_k() || !check_membership(q).in_or_k())
    fail(Errc::not_in_or_k, "join operands must be regressive order-preserving");
  MonoidClosure c = generate_closure(p.poset, {p, q});
  std::vector<const Endo*> candidates;
  for (std::size_t i : c.idempotents) {
    const Endo& t = c.elements[i];
    if (compose(p, t) == t && compose(q, t) == t) candidates.push_back(&t);
  }
  if (candidates.size() != 1)
    throw std::logic_error("expected exactly one absorbing idempotent, found " +
                           std::to_string(candidates.size()));
  Endo out = *candidates[0];
  return out;
}

GaloisReport galois_verify(const Endo& p) {
  if (!is_idempotent(p)) fail(Errc::not_idempotent, "galois check needs an idempotent");
  if (!check_membership(p).in_or_k())
    fail(Errc::not_in_or_k, "galois check needs a regressive order-preserving map");
  const Poset& K = *p.poset;
  InducedSubposet H(p.poset, image_set(p));
  GaloisReport rep;
  rep.adjunction_ok = true;
  rep.rota_ok = true;

  for (int li = 0; li < H.size() && rep.adjunction_ok; ++li) {
    int x = H.ambient_id(li);
    for (int y = 0; y < K.n; ++y)
      if (K.leq(x, p(y)) != K.leq(x, y)) {
        rep.adjunction_ok = false;
        rep.witness = {x, y};
        break;
      }
  }
  if (!rep.adjunction_ok) return rep;

  // Fibers once, then the transport identity over imm(P) x K.
  std::vector<std::vector<int>> fib(K.n);
  for (int u = 0; u < K.n; ++u) fib[p(u)].push_back(u);
  for (int li = 0; li < H.size() && rep.rota_ok; ++li) {
    int x = H.ambient_id(li);
    for (int v = 0; v < K.n; ++v) {
      Integer lhs = 0;
      int lv = H.local_id(v);
      if (lv >= 0) lhs = H.mobius_total(li, lv);
      Integer rhs = 0;
      for (int u : fib[x]) rhs += K.mobius_total(u, v);
      if (lhs != rhs) {
        rep.rota_ok = false;
        rep.witness = {x, v};
        break;
      }
    }
  }
  return rep;
}

}  // namespace matchmonoid
