#include "matchmonoid/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "matchmonoid/config.hpp"
#include "matchmonoid/errors.hpp"

namespace matchmonoid {

namespace {

// Topological order of the cover digraph; throws on cycles.
std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u]) ++indeg[v];
  std::vector<int> queue;
  for (int u = 0; u < n; ++u)
    if (indeg[u] == 0) queue.push_back(u);
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    order.push_back(u);
    for (int v : adj[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  if (static_cast<int>(order.size()) != n)
    fail(Errc::cycle_detected, "cover relation contains a directed cycle");
  return order;
}

}  // namespace

PosetPtr build_poset(int n, std::vector<std::pair<int, int>> covers,
                     std::vector<std::string> labels) {
  if (n < 1) fail(Errc::bad_parameter, "poset needs at least one element");
  if (static_cast<std::size_t>(n) > config::element_cap())
    fail(Errc::cap_exceeded,
         "poset size " + std::to_string(n) + " exceeds the element cap " +
             std::to_string(config::element_cap()) +
             " (raise MATCHMONOID_CAP to override)");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(Errc::bad_parameter, "labels must be empty or have one entry per element");

  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Errc::bad_parameter, "cover endpoint out of range");
    if (a == b) fail(Errc::bad_parameter, "cover relating an element to itself");
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : covers) adj[a].push_back(b);
  std::vector<int> order = topo_order(n, adj);

  auto poset = std::make_shared<Poset>();
  Poset& p = *poset;
  p.n = n;

  // Reachability (reflexive-transitive closure) over reverse topological order.
  p.up_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    p.up_[u].set(u);
    for (int v : adj[u]) p.up_[u] |= p.up_[v];
  }
  p.down_.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    p.up_[x].for_each([&](std::size_t y) { p.down_[y].set(x); });

  int minima = 0, maxima = 0;
  for (int x = 0; x < n; ++x) {
    if (p.down_[x].count() == 1) {
      ++minima;
      p.bottom = x;
    }
    if (p.up_[x].count() == 1) {
      ++maxima;
      p.top = x;
    }
  }
  if (minima != 1)
    fail(Errc::no_minimum, "poset has " + std::to_string(minima) + " minimal elements");
  if (maxima != 1)
    fail(Errc::no_maximum, "poset has " + std::to_string(maxima) + " maximal elements");

  // Hasse reduction: drop (a,b) whenever some element lies strictly between.
  std::vector<std::pair<int, int>> reduced;
  reduced.reserve(covers.size());
  for (auto [a, b] : covers)
    if (p.up_[a].intersection_count(p.down_[b]) == 2) reduced.emplace_back(a, b);
  p.covers = std::move(reduced);

  p.cov_up_.assign(n, {});
  p.cov_down_.assign(n, {});
  for (auto [a, b] : p.covers) {
    p.cov_up_[a].push_back(b);
    p.cov_down_[b].push_back(a);
  }

  // Rank from the bottom; every cover must climb exactly one step.
  p.rank.assign(n, -1);
  p.rank[p.bottom] = 0;
  for (int u : order) {
    if (p.rank[u] < 0)
      fail(Errc::not_graded, "element " + std::to_string(u) +
                                 " is not reachable from the bottom by covers");
    for (int v : p.cov_up_[u]) {
      if (p.rank[v] < 0)
        p.rank[v] = p.rank[u] + 1;
      else if (p.rank[v] != p.rank[u] + 1)
        fail(Errc::not_graded, "covers into element " + std::to_string(v) +
                                   " disagree on its rank");
    }
  }

  p.atoms_ = Bitset(n);
  for (int v : p.cov_up_[p.bottom]) p.atoms_.set(v);

  if (labels.empty()) {
    p.labels.resize(n);
    for (int x = 0; x < n; ++x) p.labels[x] = std::to_string(x);
  } else {
    p.labels = std::move(labels);
  }
  return poset;
}

std::shared_ptr<const std::vector<Integer>> Poset::mobius_row(int x) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = mobius_rows_.find(x);
    if (it != mobius_rows_.end()) return it->second;
  }
  // mu(x, y) = 1 at y == x and -sum_{x <= z < y} mu(x, z) above; elements are
  // folded in rank order so all summands are ready when needed.
  auto row = std::make_shared<std::vector<Integer>>(n, Integer(0));
  std::vector<int> ys = up_[x].to_vector();
  std::sort(ys.begin(), ys.end(),
            [&](int a, int b) { return rank[a] != rank[b] ? rank[a] < rank[b] : a < b; });
  for (int y : ys) {
    if (y == x) {
      (*row)[y] = 1;
      continue;
    }
    Integer acc = 0;
    for (int z : ys) {
      if (z == y) continue;
      if (rank[z] >= rank[y]) break;  // ys is rank-sorted; nothing later is below y
      if (up_[z].test(y)) acc += (*row)[z];
    }
    (*row)[y] = -acc;
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = mobius_rows_.emplace(x, row);
  return it->second;
}

Integer Poset::mobius_total(int x, int y) const {
  if (!leq(x, y)) return 0;
  return (*mobius_row(x))[y];
}

bool Poset::eulerian() const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (eulerian_.has_value()) return *eulerian_;
  }
  bool ok = true;
  for (int x = 0; x < n && ok; ++x) {
    auto row = mobius_row(x);
    for (int y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      int sign = ((rank[y] - rank[x]) % 2 == 0) ? 1 : -1;
      if ((*row)[y] != sign) {
        ok = false;
        break;
      }
    }
  }
  if (ok) {
    // Consequence check: every rank-2 interval is a diamond.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq(x, y) && rank[y] - rank[x] == 2 &&
            up_[x].intersection_count(down_[y]) != 4)
          throw std::logic_error(
              "eulerian poset with a rank-2 interval that is not a diamond");
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  eulerian_ = ok;
  return ok;
}

Integer mobius(const Poset& p, int x, int y) {
  if (x < 0 || x >= p.n || y < 0 || y >= p.n)
    fail(Errc::bad_parameter, "element out of range");
  if (!p.leq(x, y))
    fail(Errc::not_comparable, p.label(x) + " is not below " + p.label(y));
  return p.mobius_total(x, y);
}

bool is_eulerian(const Poset& p) { return p.eulerian(); }

std::optional<std::pair<int, int>> is_interval(const Poset& p, const Bitset& elems) {
  if (elems.none()) fail(Errc::empty_subset, "interval test over the empty set");
  int mn = -1, mx = -1;
  bool unique_min = true, unique_max = true;
  elems.for_each([&](std::size_t zu) {
    int z = static_cast<int>(zu);
    // minimal/maximal within the subset
    bool has_below = false, has_above = false;
    elems.for_each([&](std::size_t wu) {
      int w = static_cast<int>(wu);
      if (w != z && p.leq(w, z)) has_below = true;
      if (w != z && p.leq(z, w)) has_above = true;
    });
    if (!has_below) {
      if (mn >= 0) unique_min = false;
      mn = z;
    }
    if (!has_above) {
      if (mx >= 0) unique_max = false;
      mx = z;
    }
  });
  if (!unique_min || !unique_max) return std::nullopt;
  if (p.interval(mn, mx) != elems) return std::nullopt;
  return std::make_pair(mn, mx);
}

std::optional<std::pair<int, int>> is_interval(const Poset& p,
                                               const std::vector<int>& elems) {
  if (elems.empty()) fail(Errc::empty_subset, "interval test over the empty set");
  for (int e : elems)
    if (e < 0 || e >= p.n) fail(Errc::bad_parameter, "element out of range");
  return is_interval(p, Bitset::of(p.n, elems));
}

std::vector<std::pair<int, int>> recompute_covers(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.lt(x, y) && p.up_set(x).intersection_count(p.down_set(y)) == 2)
        out.emplace_back(x, y);
  return out;
}

int product_encode(const std::vector<int>& sizes, const std::vector<int>& coords) {
  int id = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) id = id * sizes[i] + coords[i];
  return id;
}

std::vector<int> product_decode(const std::vector<int>& sizes, int id) {
  std::vector<int> coords(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    coords[i] = id % sizes[i];
    id /= sizes[i];
  }
  return coords;
}

PosetPtr product(const std::vector<PosetPtr>& factors) {
  if (factors.empty()) fail(Errc::empty_factor_list, "product of zero posets");
  long long total = 1;
  std::vector<int> sizes;
  for (const auto& f : factors) {
    sizes.push_back(f->n);
    total *= f->n;
    if (total > static_cast<long long>(config::element_cap()))
      fail(Errc::cap_exceeded, "product size exceeds the element cap");
  }
  int n = static_cast<int>(total);
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(n);
  std::vector<int> coords(factors.size());
  for (int id = 0; id < n; ++id) {
    coords = product_decode(sizes, id);
    std::string lab = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) lab += ",";
      lab += factors[i]->label(coords[i]);
    }
    lab += ")";
    labels[id] = std::move(lab);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (int up : factors[i]->covers_above(coords[i])) {
        std::vector<int> c2 = coords;
        c2[i] = up;
        covers.emplace_back(id, product_encode(sizes, c2));
      }
    }
  }
  return build_poset(n, std::move(covers), std::move(labels));
}

PosetPtr chain(int n) {
  if (n < 1) fail(Errc::bad_parameter, "chain needs at least one element");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return build_poset(n, std::move(covers));
}

PosetPtr boolean_lattice(int k) {
  if (k < 0) fail(Errc::bad_parameter, "boolean lattice needs k >= 0");
  if (k == 0) return build_poset(1, {});
  std::vector<PosetPtr> factors(k, chain(2));
  return product(factors);
}

PosetPtr divisor_poset(long long n) {
  if (n < 1) fail(Errc::bad_parameter, "divisor poset needs n >= 1");
  std::vector<long long> divisors;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d != n / d) divisors.push_back(n / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  if (divisors.size() > config::element_cap())
    fail(Errc::cap_exceeded, "divisor count exceeds the element cap");
  std::map<long long, int> index;
  for (std::size_t i = 0; i < divisors.size(); ++i) index[divisors[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    labels.push_back(std::to_string(divisors[i]));
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      if (divisors[j] % divisors[i]) continue;
      long long q = divisors[j] / divisors[i];
      // q prime <=> the step is a cover
      if (q < 2) continue;
      bool prime = true;
      for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
          prime = false;
          break;
        }
      if (prime) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return build_poset(static_cast<int>(divisors.size()), std::move(covers),
                     std::move(labels));
}

Bitset ideal_below_atoms(const Poset& p, const std::vector<int>& atom_subset) {
  Bitset a_mask(p.n);
  for (int a : atom_subset) {
    if (a < 0 || a >= p.n || !p.atom_mask().test(a))
      fail(Errc::not_atoms, "element " + std::to_string(a) + " is not an atom");
    a_mask.set(a);
  }
  Bitset out(p.n);
  for (int x = 0; x < p.n; ++x) {
    Bitset below = p.down_set(x);
    below &= p.atom_mask();
    if (below.is_subset_of(a_mask)) out.set(x);
  }
  return out;
}

std::string to_dot(const Poset& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int r = 0; r <= p.max_rank(); ++r) {
    std::vector<int> level;
    for (int x = 0; x < p.n; ++x)
      if (p.rank[x] == r) level.push_back(x);
    if (level.empty()) continue;
    os << "  { rank=same;";
    for (int x : level) os << " v" << x << ";";
    os << " }\n";
  }
  for (int x = 0; x < p.n; ++x)
    os << "  v" << x << " [label=\"" << p.label(x) << "\"];\n";
  for (auto [a, b] : p.covers) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace matchmonoid
