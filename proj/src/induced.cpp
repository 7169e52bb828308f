#include "matchmonoid/induced.hpp"

#include <algorithm>

#include "matchmonoid/errors.hpp"

namespace matchmonoid {

InducedSubposet::InducedSubposet(PosetPtr ambient, const Bitset& elems)
    : ambient_(std::move(ambient)), elems_(elems.to_vector()) {
  init();
}

InducedSubposet::InducedSubposet(PosetPtr ambient, std::vector<int> elems)
    : ambient_(std::move(ambient)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  init();
}

void InducedSubposet::init() {
  if (elems_.empty()) fail(Errc::empty_subset, "induced subposet over the empty set");
  int m = size();
  local_.assign(ambient_->n, -1);
  for (int i = 0; i < m; ++i) {
    int a = elems_[i];
    if (a < 0 || a >= ambient_->n) fail(Errc::bad_parameter, "element out of range");
    local_[a] = i;
  }
  up_.assign(m, Bitset(m));
  down_.assign(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ambient_->leq(elems_[i], elems_[j])) {
        up_[i].set(j);
        down_[j].set(i);
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && up_[i].test(j) && up_[i].intersection_count(down_[j]) == 2)
        covers_.emplace_back(i, j);
  mobius_rows_.assign(m, std::nullopt);
}

std::vector<int> InducedSubposet::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[i].count() == 1) out.push_back(i);
  return out;
}

std::vector<int> InducedSubposet::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[i].count() == 1) out.push_back(i);
  return out;
}

bool InducedSubposet::graded_with_ambient_rank() const {
  if (minimal_elements().size() != 1 || maximal_elements().size() != 1) return false;
  for (auto [a, b] : covers_)
    if (ambient_->rank[elems_[b]] != ambient_->rank[elems_[a]] + 1) return false;
  return true;
}

Integer InducedSubposet::mobius_total(int lx, int ly) const {
  if (!up_[lx].test(ly)) return 0;
  auto& row_opt = mobius_rows_[lx];
  if (!row_opt.has_value()) {
    std::vector<Integer> row(size(), Integer(0));
    std::vector<int> ys = up_[lx].to_vector();
    // ambient rank sorts consistently with the induced order
    std::sort(ys.begin(), ys.end(), [&](int a, int b) {
      int ra = ambient_->rank[elems_[a]], rb = ambient_->rank[elems_[b]];
      return ra != rb ? ra < rb : a < b;
    });
    for (int y : ys) {
      if (y == lx) {
        row[y] = 1;
        continue;
      }
      Integer acc = 0;
      for (int z : ys) {
        if (z == y) break;
        if (up_[z].test(y)) acc += row[z];
      }
      row[y] = -acc;
    }
    row_opt = std::move(row);
  }
  return (*row_opt)[ly];
}

}  // namespace matchmonoid
