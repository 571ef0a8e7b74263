#include "dsq/op_table.hpp"

#include <algorithm>
#include <numeric>

namespace dsq {

OperationTable OperationTable::relabeled(const std::vector<int>& sigma) const {
  std::vector<int> inv(order_);
  for (int i = 0; i < order_; ++i)
    inv[sigma[i]] = i;
  return from_fn(order_, [&](int x, int y) { return sigma[entries_[static_cast<size_t>(inv[x]) * order_ + inv[y]]]; });
}

Group::Group(int order, std::vector<int> mult) : order_(order), mult_(std::move(mult)) {
  if (order_ < 1)
    throw StructureError("group order must be positive");
  if (mult_.size() != static_cast<size_t>(order_) * order_)
    throw StructureError("group table must have order*order entries");
  for (int v : mult_)
    if (v < 0 || v >= order_)
      throw StructureError("group table entry out of range");

  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0)
    throw StructureError("group table has no identity element");

  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0)
      throw StructureError("group element has no inverse");
  }

  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw StructureError("group table is not associative");
}

Group Group::cyclic(int n) {
  std::vector<int> m;
  m.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.push_back((a + b) % n);
  return Group(n, std::move(m));
}

Group Group::symmetric(int k) {
  if (k < 1 || k > 5)
    throw StructureError("symmetric group supported for 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> m(static_cast<size_t>(n) * n);
  std::vector<int> comp(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i)
        comp[i] = perms[a][perms[b][i]];  // apply b first, then a
      m[static_cast<size_t>(a) * n + b] = index_of(comp);
    }
  return Group(n, std::move(m));
}

}  // namespace dsq
