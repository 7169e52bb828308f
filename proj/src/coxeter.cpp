#include "matchmonoid/coxeter.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "matchmonoid/config.hpp"
#include "matchmonoid/errors.hpp"
#include "matchmonoid/idempotent_analysis.hpp"
#include "matchmonoid/induced.hpp"
#include "matchmonoid/parallel.hpp"

namespace matchmonoid {

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.word.resize(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) r.word[word[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

bool Permutation::is_involution() const { return *this == inverse(); }

int Permutation::two_cycles() const {
  int c = 0;
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) > i && (*this)((*this)(i)) == i) ++c;
  return c;
}

std::string Permutation::str() const {
  std::string s;
  for (int v : word) s += static_cast<char>('0' + v);
  return s;
}

Permutation perm_identity(int n) {
  Permutation w;
  for (int i = 1; i <= n; ++i) w.word.push_back(i);
  return w;
}

Permutation perm_from_string(const std::string& one_line) {
  int n = static_cast<int>(one_line.size());
  Permutation w;
  std::vector<bool> seen(n, false);
  for (char c : one_line) {
    int v = c - '0';
    if (v < 1 || v > n || seen[v - 1])
      fail(Errc::bad_parameter, "not a one-line permutation: " + one_line);
    seen[v - 1] = true;
    w.word.push_back(v);
  }
  if (n == 0) fail(Errc::bad_parameter, "empty permutation string");
  return w;
}

Permutation perm_multiply(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) fail(Errc::bad_parameter, "permutation size mismatch");
  Permutation r;
  r.word.resize(u.word.size());
  for (int i = 1; i <= u.n(); ++i) r.word[i - 1] = u(v(i));
  return r;
}

Permutation adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n)
    fail(Errc::bad_parameter, "generator index out of range: " + std::to_string(i));
  Permutation w = perm_identity(n);
  std::swap(w.word[i - 1], w.word[i]);
  return w;
}

namespace {

// Right multiplication by s_i: swap positions i, i+1.
Permutation right_mult(const Permutation& w, int i) {
  Permutation r = w;
  std::swap(r.word[i - 1], r.word[i]);
  return r;
}

// Left multiplication by s_i: swap the values i, i+1.
Permutation left_mult(const Permutation& w, int i) {
  Permutation r = w;
  for (int& v : r.word) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

std::vector<int> normalize_generators(int n, std::vector<int> gens,
                                      const char* which) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int g : gens)
    if (g < 1 || g >= n)
      fail(Errc::bad_parameter, std::string(which) + " contains an invalid generator " +
                                    std::to_string(g) + " for n=" + std::to_string(n));
  return gens;
}

void check_group_size(int n) {
  if (n < 2) fail(Errc::too_small, "symmetric groups start at n=2");
  if (n > 7) fail(Errc::too_large, "symmetric groups are capped at n=7");
}

// Sorted prefixes of the one-line word, the comparison tables of the
// subword criterion: row i holds the sorted first i+1 entries.
std::vector<std::uint8_t> prefix_table(const Permutation& w) {
  int n = w.n();
  std::vector<std::uint8_t> tab(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::uint8_t> buf;
  for (int i = 0; i < n; ++i) {
    buf.insert(std::upper_bound(buf.begin(), buf.end(),
                                static_cast<std::uint8_t>(w.word[i])),
               static_cast<std::uint8_t>(w.word[i]));
    std::copy(buf.begin(), buf.end(), tab.begin() + static_cast<std::size_t>(i) * n);
  }
  return tab;
}

bool prefix_dominated(const std::vector<std::uint8_t>& a,
                      const std::vector<std::uint8_t>& b, int n) {
  // Last row is the full sorted word, identical for all permutations.
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j <= i; ++j) {
      std::size_t k = static_cast<std::size_t>(i) * n + j;
      if (a[k] > b[k]) return false;
    }
  return true;
}

}  // namespace

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) fail(Errc::bad_parameter, "permutation size mismatch");
  return prefix_dominated(prefix_table(u), prefix_table(v), u.n());
}

int BruhatContext::id_of(const Permutation& w) const {
  if (w.n() != n) fail(Errc::bad_parameter, "permutation size mismatch");
  static const int factorial[8] = {1, 1, 2, 6, 24, 120, 720, 5040};
  int r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j)
      if (w.word[j] < w.word[i]) ++smaller_later;
    r += smaller_later * factorial[n - 1 - i];
  }
  return r;
}

namespace {

std::unique_ptr<BruhatContext> build_bruhat_context(int n) {
  auto ctx = std::make_unique<BruhatContext>();
  ctx->n = n;
  Permutation w = perm_identity(n);
  do {
    ctx->perms.push_back(w);
  } while (std::next_permutation(w.word.begin(), w.word.end()));

  int total = static_cast<int>(ctx->perms.size());
  std::vector<int> len(total);
  std::vector<std::vector<std::uint8_t>> tabs(total);
  std::vector<std::vector<int>> levels;
  for (int i = 0; i < total; ++i) {
    len[i] = ctx->perms[i].length();
    tabs[i] = prefix_table(ctx->perms[i]);
    if (static_cast<int>(levels.size()) <= len[i]) levels.resize(len[i] + 1);
    levels[len[i]].push_back(i);
  }

  std::vector<std::pair<int, int>> covers;
  for (std::size_t l = 0; l + 1 < levels.size(); ++l)
    for (int u : levels[l])
      for (int v : levels[l + 1])
        if (prefix_dominated(tabs[u], tabs[v], n)) covers.emplace_back(u, v);

  std::vector<std::string> labels;
  for (const Permutation& p : ctx->perms) labels.push_back(p.str());
  ctx->poset = build_poset(total, std::move(covers), std::move(labels));

  for (int i = 0; i < total; ++i)
    if (ctx->poset->rank[i] != len[i])
      throw std::logic_error("Bruhat rank differs from Coxeter length");
  return ctx;
}

std::mutex g_bruhat_mutex;
std::map<int, std::unique_ptr<BruhatContext>> g_bruhat_cache;

}  // namespace

const BruhatContext& bruhat_context(int n) {
  check_group_size(n);
  std::lock_guard<std::mutex> lock(g_bruhat_mutex);
  auto it = g_bruhat_cache.find(n);
  if (it == g_bruhat_cache.end())
    it = g_bruhat_cache.emplace(n, build_bruhat_context(n)).first;
  return *it->second;
}

PosetPtr bruhat_poset(int n) { return bruhat_context(n).poset; }

const char* side_name(Side s) {
  switch (s) {
    case Side::right: return "right";
    case Side::left: return "left";
    case Side::two_sided: return "double";
  }
  return "unknown";
}

namespace {

void validate_spec(const QuotientSpec& spec) {
  check_group_size(spec.n);
  if (spec.side == Side::right && !spec.I.empty())
    fail(Errc::bad_parameter, "right quotients take J only");
  if (spec.side == Side::left && !spec.J.empty())
    fail(Errc::bad_parameter, "left quotients take I only");
}

Permutation strip_right(Permutation w, const std::vector<int>& J) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J)
      if (w.word[i - 1] > w.word[i]) {
        std::swap(w.word[i - 1], w.word[i]);
        moved = true;
        break;
      }
  }
  return w;
}

Permutation strip_left(Permutation w, const std::vector<int>& I) {
  bool moved = true;
  while (moved) {
    moved = false;
    Permutation inv = w.inverse();
    for (int i : I)
      if (inv.word[i - 1] > inv.word[i]) {
        w = left_mult(w, i);
        moved = true;
        break;
      }
  }
  return w;
}

}  // namespace

Permutation proj_element(const QuotientSpec& spec, const Permutation& w) {
  validate_spec(spec);
  if (w.n() != spec.n) fail(Errc::bad_parameter, "permutation size mismatch");
  std::vector<int> I = normalize_generators(spec.n, spec.I, "I");
  std::vector<int> J = normalize_generators(spec.n, spec.J, "J");
  Permutation cur = w;
  if (spec.side == Side::right || spec.side == Side::two_sided)
    cur = strip_right(std::move(cur), J);
  if (spec.side == Side::left || spec.side == Side::two_sided)
    cur = strip_left(std::move(cur), I);
  return cur;
}

Endo proj_endo(const QuotientSpec& spec) {
  validate_spec(spec);
  const BruhatContext& ctx = bruhat_context(spec.n);
  std::vector<std::int32_t> table(ctx.perms.size());
  for (std::size_t i = 0; i < ctx.perms.size(); ++i)
    table[i] = ctx.id_of(proj_element(spec, ctx.perms[i]));
  return make_endo(ctx.poset, std::move(table));
}

Endo hecke_product(int n, Side side, const std::vector<int>& word) {
  check_group_size(n);
  if (side == Side::two_sided)
    fail(Errc::bad_parameter, "Hecke products are one-sided");
  const BruhatContext& ctx = bruhat_context(n);
  Endo acc = identity_endo(ctx.poset);
  for (int letter : word) {
    QuotientSpec spec;
    spec.n = n;
    spec.side = side;
    if (side == Side::right)
      spec.J = {letter};
    else
      spec.I = {letter};
    acc = compose(acc, proj_endo(spec));
  }
  return acc;
}

Permutation longest_element(int n, const std::vector<int>& J) {
  check_group_size(n);
  std::vector<int> gens = normalize_generators(n, J, "J");
  Permutation w = perm_identity(n);
  std::size_t i = 0;
  while (i < gens.size()) {
    std::size_t j = i;
    while (j + 1 < gens.size() && gens[j + 1] == gens[j] + 1) ++j;
    // generators gens[i..j] form a block acting on positions gens[i]..gens[j]+1
    std::reverse(w.word.begin() + gens[i] - 1, w.word.begin() + gens[j] + 1);
    i = j + 1;
  }
  return w;
}

std::vector<int> reduced_word_w0(int n, const std::vector<int>& J) {
  check_group_size(n);
  std::vector<int> gens = normalize_generators(n, J, "J");
  std::vector<int> word;
  std::size_t i = 0;
  while (i < gens.size()) {
    std::size_t j = i;
    while (j + 1 < gens.size() && gens[j + 1] == gens[j] + 1) ++j;
    for (std::size_t k = i; k <= j; ++k)
      for (int g = gens[k]; g >= gens[i]; --g) word.push_back(g);
    i = j + 1;
  }
  Permutation check = perm_identity(n);
  for (int g : word) check = right_mult(check, g);
  Permutation target = longest_element(n, gens);
  if (check != target || static_cast<int>(word.size()) != target.length())
    throw std::logic_error("constructed word fails to be reduced for w0(J)");
  return word;
}

std::vector<int> reduced_word(const Permutation& w) {
  Permutation cur = w;
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < cur.n(); ++i)
      if (cur.word[i - 1] > cur.word[i]) {
        std::swap(cur.word[i - 1], cur.word[i]);
        word.push_back(i);
        moved = true;
        break;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> parabolic_subgroup(const BruhatContext& ctx,
                                    const std::vector<int>& J) {
  std::vector<int> gens = normalize_generators(ctx.n, J, "J");
  std::set<int> seen{ctx.id_of(perm_identity(ctx.n))};
  std::vector<int> queue(seen.begin(), seen.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int g : gens) {
      int next = ctx.id_of(right_mult(ctx.perms[queue[q]], g));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<Matching> multiplication_matchings(int n) {
  const BruhatContext& ctx = bruhat_context(n);
  int total = static_cast<int>(ctx.perms.size());
  std::vector<Matching> out;
  std::set<std::vector<std::int32_t>> seen;
  for (int side = 0; side < 2; ++side)
    for (int s = 1; s < n; ++s) {
      std::vector<std::int32_t> partner(total);
      for (int i = 0; i < total; ++i)
        partner[i] = ctx.id_of(side == 0 ? right_mult(ctx.perms[i], s)
                                         : left_mult(ctx.perms[i], s));
      if (!seen.insert(partner).second) continue;
      Matching m = make_matching(ctx.poset, std::move(partner));
      if (!is_special(m))
        throw std::logic_error("multiplication matching fails the special condition");
      out.push_back(std::move(m));
    }
  return out;
}

MonoidClosure closure_WLR(int n) {
  check_group_size(n);
  if (n > 5) fail(Errc::too_large, "two-sided closures are capped at n=5");
  const BruhatContext& ctx = bruhat_context(n);
  std::vector<Endo> gens;
  for (const Matching& m : multiplication_matchings(n))
    gens.push_back(idempotent_from_matching(m));
  MonoidClosure closure = generate_closure(ctx.poset, std::move(gens));

  std::set<std::vector<std::int32_t>> doubles;
  int m = n - 1;
  for (int imask = 0; imask < (1 << m); ++imask)
    for (int jmask = 0; jmask < (1 << m); ++jmask) {
      QuotientSpec spec;
      spec.n = n;
      spec.side = Side::two_sided;
      for (int b = 0; b < m; ++b) {
        if (imask & (1 << b)) spec.I.push_back(b + 1);
        if (jmask & (1 << b)) spec.J.push_back(b + 1);
      }
      doubles.insert(proj_endo(spec).image);
    }
  std::set<std::vector<std::int32_t>> idems;
  for (const Endo& e : closure.idempotent_elements()) idems.insert(e.image);
  if (idems != doubles)
    throw std::logic_error(
        "closure idempotents differ from the double projection tables");
  return closure;
}

Permutation parabolic_map(const Permutation& w, const std::vector<int>& J) {
  const BruhatContext& ctx = bruhat_context(w.n());
  int wid = ctx.id_of(w);
  std::vector<int> candidates;
  for (int v : parabolic_subgroup(ctx, J))
    if (ctx.poset->leq(v, wid)) candidates.push_back(v);
  for (int m : candidates) {
    bool all_below = true;
    for (int x : candidates)
      if (!ctx.poset->leq(x, m)) {
        all_below = false;
        break;
      }
    if (all_below) return ctx.perms[m];
  }
  throw std::logic_error("parabolic slice below " + w.str() + " lacks a maximum");
}

Permutation coset_max(const QuotientSpec& spec, const Permutation& u,
                      const Permutation& v) {
  validate_spec(spec);
  const BruhatContext& ctx = bruhat_context(spec.n);
  if (proj_element(spec, u) != u || proj_element(spec, v) != v)
    fail(Errc::bad_parameter, "arguments must lie in the quotient image");
  int uid = ctx.id_of(u), vid = ctx.id_of(v);
  if (!ctx.poset->leq(uid, vid))
    fail(Errc::not_comparable, u.str() + " is not below " + v.str());

  std::set<int> coset;
  std::vector<int> wi = spec.side == Side::right
                            ? std::vector<int>{ctx.id_of(perm_identity(spec.n))}
                            : parabolic_subgroup(ctx, spec.I);
  std::vector<int> wj = spec.side == Side::left
                            ? std::vector<int>{ctx.id_of(perm_identity(spec.n))}
                            : parabolic_subgroup(ctx, spec.J);
  for (int a : wi)
    for (int b : wj)
      coset.insert(ctx.id_of(
          perm_multiply(perm_multiply(ctx.perms[a], u), ctx.perms[b])));

  Bitset window = ctx.poset->interval(uid, vid);
  std::vector<int> slice;
  for (int x : coset)
    if (window.test(x)) slice.push_back(x);
  for (int m : slice) {
    bool all_below = true;
    for (int x : slice)
      if (!ctx.poset->leq(x, m)) {
        all_below = false;
        break;
      }
    if (all_below) return ctx.perms[m];
  }
  throw std::logic_error("coset interval slice lacks a maximum");
}

int InvolContext::id_of(const Permutation& w) const {
  auto it = std::lower_bound(invols.begin(), invols.end(), w);
  if (it == invols.end() || *it != w)
    fail(Errc::bad_parameter, w.str() + " is not an involution of this poset");
  return static_cast<int>(it - invols.begin());
}

namespace {

std::unique_ptr<InvolContext> build_invol_context(int n) {
  const BruhatContext& ambient = bruhat_context(n);
  auto ctx = std::make_unique<InvolContext>();
  ctx->n = n;
  std::vector<int> carrier;
  for (std::size_t i = 0; i < ambient.perms.size(); ++i)
    if (ambient.perms[i].is_involution()) {
      carrier.push_back(static_cast<int>(i));
      ctx->invols.push_back(ambient.perms[i]);
    }

  InducedSubposet sub(ambient.poset, carrier);
  std::vector<std::string> labels;
  for (const Permutation& w : ctx->invols) labels.push_back(w.str());
  ctx->poset = build_poset(sub.size(), sub.covers(), std::move(labels));

  for (int i = 0; i < sub.size(); ++i) {
    const Permutation& w = ctx->invols[i];
    if (2 * ctx->poset->rank[i] != w.length() + w.two_cycles())
      throw std::logic_error("involution rank differs from (length+cycles)/2");
  }
  if (n <= 5 && !ctx->poset->eulerian())
    throw std::logic_error("involution poset unexpectedly not Eulerian");
  return ctx;
}

std::mutex g_invol_mutex;
std::map<int, std::unique_ptr<InvolContext>> g_invol_cache;

}  // namespace

const InvolContext& involution_context(int n) {
  check_group_size(n);
  std::lock_guard<std::mutex> lock(g_invol_mutex);
  auto it = g_invol_cache.find(n);
  if (it == g_invol_cache.end())
    it = g_invol_cache.emplace(n, build_invol_context(n)).first;
  return *it->second;
}

PosetPtr involution_poset(int n) { return involution_context(n).poset; }

Matching twisted_matching(int n, int s) {
  const InvolContext& ctx = involution_context(n);
  if (s < 1 || s >= n)
    fail(Errc::bad_parameter, "generator index out of range: " + std::to_string(s));
  Permutation sp = adjacent_transposition(n, s);
  std::vector<std::int32_t> partner(ctx.invols.size());
  for (std::size_t i = 0; i < ctx.invols.size(); ++i) {
    const Permutation& v = ctx.invols[i];
    Permutation svs = perm_multiply(perm_multiply(sp, v), sp);
    partner[i] = ctx.id_of(svs == v ? perm_multiply(v, sp) : svs);
  }
  Matching m = make_matching(ctx.poset, std::move(partner));
  if (!is_special(m))
    throw std::logic_error("twisted matching fails the special condition");
  return m;
}

Endo hat_projection(int n, const std::vector<int>& J) {
  const InvolContext& ctx = involution_context(n);
  std::vector<int> gens = normalize_generators(n, J, "J");

  QuotientSpec spec;
  spec.n = n;
  spec.side = Side::two_sided;
  spec.I = gens;
  spec.J = gens;
  std::vector<std::int32_t> direct(ctx.invols.size());
  for (std::size_t i = 0; i < ctx.invols.size(); ++i)
    direct[i] = ctx.id_of(proj_element(spec, ctx.invols[i]));

  Endo acc = identity_endo(ctx.poset);
  for (int letter : reduced_word_w0(n, gens))
    acc = compose(acc, idempotent_from_matching(twisted_matching(n, letter)));
  if (acc.image != direct)
    throw std::logic_error(
        "involution projection routes disagree (word composite vs restriction)");
  return acc;
}

namespace {

bool is_prefix_interval(const std::vector<int>& a) {
  return !a.empty() && a.front() == 1 &&
         a.back() == static_cast<int>(a.size());
}

bool is_suffix_interval(int m, const std::vector<int>& a) {
  return !a.empty() && a.back() == m &&
         a.front() == m - static_cast<int>(a.size()) + 1;
}

std::string subset_str(const std::vector<int>& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "}";
}

std::vector<int> mask_to_subset(int mask) {
  std::vector<int> out;
  for (int b = 0; mask >> b; ++b)
    if (mask & (1 << b)) out.push_back(b + 1);
  return out;
}

}  // namespace

bool group_projection_closed_form(int num_generators, const std::vector<int>& I,
                                  const std::vector<int>& J) {
  bool nested = std::includes(I.begin(), I.end(), J.begin(), J.end()) ||
                std::includes(J.begin(), J.end(), I.begin(), I.end());
  auto nice = [&](const std::vector<int>& a) {
    return is_prefix_interval(a) || is_suffix_interval(num_generators, a);
  };
  return nested && nice(I) && nice(J);
}

bool involution_projection_closed_form(int num_generators,
                                       const std::vector<int>& J) {
  return J.size() == 1 || is_prefix_interval(J) ||
         is_suffix_interval(num_generators, J);
}

ProjectionTable projection_tables(int num_generators, bool involutions_kind) {
  if (num_generators < 1) fail(Errc::too_small, "need at least one generator");
  if (num_generators > (involutions_kind ? 6 : 5))
    fail(Errc::too_large, "projection tables are capped at " +
                              std::string(involutions_kind ? "6" : "5") +
                              " generators for this kind");
  int n = num_generators + 1;
  int full = (1 << num_generators) - 1;

  ProjectionTable table;
  table.num_generators = num_generators;
  table.involutions_kind = involutions_kind;
  // Proper nonempty subsets only: the classification is stated for
  // P([m]) minus the empty and full sets.
  for (int imask = 1; imask < full; ++imask) {
    if (involutions_kind) {
      ProjectionTableEntry e;
      e.J = mask_to_subset(imask);
      e.closed_form = involution_projection_closed_form(num_generators, e.J);
      table.entries.push_back(std::move(e));
    } else {
      for (int jmask = 1; jmask < full; ++jmask) {
        ProjectionTableEntry e;
        e.I = mask_to_subset(imask);
        e.J = mask_to_subset(jmask);
        e.closed_form = group_projection_closed_form(num_generators, e.I, e.J);
        table.entries.push_back(std::move(e));
      }
    }
  }

  // Warm the shared caches before the parallel sweep.
  if (involutions_kind)
    involution_context(n);
  else
    bruhat_context(n);

  parallel_chunks(table.entries.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      ProjectionTableEntry& e = table.entries[k];
      Endo endo;
      if (involutions_kind) {
        endo = hat_projection(n, e.J);
      } else {
        QuotientSpec spec;
        spec.n = n;
        spec.side = Side::two_sided;
        spec.I = e.I;
        spec.J = e.J;
        endo = proj_endo(spec);
      }
      if (!is_idempotent(endo))
        throw std::logic_error("quotient projection is unexpectedly not idempotent");
      e.projection = is_projection(endo);
    }
  });

  table.matches_closed_form = true;
  for (const ProjectionTableEntry& e : table.entries)
    if (e.projection != e.closed_form) table.matches_closed_form = false;
  return table;
}

std::string projection_table_text(const ProjectionTable& table) {
  std::ostringstream os;
  int width = 2 * table.num_generators + 3;
  if (table.involutions_kind)
    os << "involution quotient projections, " << table.num_generators
       << " generators (S_" << table.num_generators + 1 << ")\n";
  else
    os << "double quotient projections, " << table.num_generators
       << " generators (S_" << table.num_generators + 1 << ")\n";
  for (const ProjectionTableEntry& e : table.entries) {
    if (!table.involutions_kind)
      os << "I=" << std::setw(width) << std::left << subset_str(e.I) << " ";
    os << "J=" << std::setw(width) << std::left << subset_str(e.J)
       << " projection=" << (e.projection ? "yes" : "no ")
       << " predicted=" << (e.closed_form ? "yes" : "no") << "\n";
  }
  os << (table.matches_closed_form
             ? "all entries match the predicted classification\n"
             : "MISMATCH against the predicted classification\n");
  return os.str();
}

}  // namespace matchmonoid
