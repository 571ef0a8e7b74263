#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsq {

// Raised when a table or structure is malformed at construction time.
class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Reduces v into {0..n-1} for possibly negative v.
inline int modn(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// An n x n table over {0..n-1}; entry (x,y) is the operation applied to (x,y).
class OperationTable {
public:
  OperationTable() = default;

  OperationTable(int order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
    if (order_ < 1)
      throw StructureError("operation table order must be positive");
    if (entries_.size() != static_cast<size_t>(order_) * order_)
      throw StructureError("operation table must have order*order entries");
    for (int v : entries_)
      if (v < 0 || v >= order_)
        throw StructureError("operation table entry out of range");
  }

  static OperationTable from_fn(int order, const std::function<int(int, int)>& f) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(order) * order);
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        e.push_back(f(x, y));
    return OperationTable(order, std::move(e));
  }

  static OperationTable constant(int order, int value) {
    return from_fn(order, [value](int, int) { return value; });
  }

  int order() const noexcept { return order_; }

  int at(int x, int y) const { return entries_[static_cast<size_t>(x) * order_ + y]; }

  const std::vector<int>& entries() const noexcept { return entries_; }

  // Table obtained by renaming elements with the permutation sigma:
  // result(x,y) = sigma(at(sigma^-1 x, sigma^-1 y)).
  OperationTable relabeled(const std::vector<int>& sigma) const;

  bool operator==(const OperationTable&) const = default;

private:
  int order_ = 0;
  std::vector<int> entries_;
};

// A finite group given by its multiplication table. Identity and inverses are
// located and the group axioms verified at construction.
class Group {
public:
  Group(int order, std::vector<int> mult);

  static Group cyclic(int n);
  static Group symmetric(int k);  // symmetric group on k symbols, k! elements

  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return mult_[static_cast<size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<int>& mult() const noexcept { return mult_; }

  bool operator==(const Group&) const = default;

private:
  int order_ = 0;
  std::vector<int> mult_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

}  // namespace dsq
