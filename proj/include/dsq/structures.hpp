#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsq/op_table.hpp"

namespace dsq {

// The quintuple (X, *1, *2, R1, R2) as raw tables. Construction only checks
// shape; whether the axioms hold is the checker's business.
struct DisingquandleTable {
  std::string name;
  OperationTable op1, op2, r1, r2;

  DisingquandleTable(std::string name_, OperationTable op1_, OperationTable op2_, OperationTable r1_,
                     OperationTable r2_)
      : name(std::move(name_)), op1(std::move(op1_)), op2(std::move(op2_)), r1(std::move(r1_)), r2(std::move(r2_)) {
    int n = op1.order();
    if (op2.order() != n || r1.order() != n || r2.order() != n)
      throw StructureError("all four tables of a disingquandle must share one order");
  }

  int order() const noexcept { return op1.order(); }

  // Structure with *1 and *2 exchanged.
  DisingquandleTable swapped() const { return DisingquandleTable(name + "-swapped", op2, op1, r1, r2); }

  DisingquandleTable relabeled(const std::vector<int>& sigma) const {
    return DisingquandleTable(name, op1.relabeled(sigma), op2.relabeled(sigma), r1.relabeled(sigma),
                              r2.relabeled(sigma));
  }

  bool same_tables(const DisingquandleTable& o) const {
    return op1 == o.op1 && op2 == o.op2 && r1 == o.r1 && r2 == o.r2;
  }
};

// A G-family of quandles: one operation table on X per group element.
class GFamily {
public:
  GFamily(std::string name, Group group, int set_order, std::vector<OperationTable> ops)
      : name_(std::move(name)), group_(std::move(group)), set_order_(set_order), ops_(std::move(ops)) {
    if (ops_.size() != static_cast<size_t>(group_.order()))
      throw StructureError("gfamily needs one operation table per group element");
    for (const auto& t : ops_)
      if (t.order() != set_order_)
        throw StructureError("gfamily operation tables must all act on the same set");
  }

  const std::string& name() const noexcept { return name_; }
  const Group& group() const noexcept { return group_; }
  int set_order() const noexcept { return set_order_; }
  const OperationTable& op(int g) const { return ops_.at(g); }
  const std::vector<OperationTable>& ops() const noexcept { return ops_; }

private:
  std::string name_;
  Group group_;
  int set_order_;
  std::vector<OperationTable> ops_;
};

}  // namespace dsq
