#include "dsq/coloring.hpp"

#include <algorithm>
#include <map>

#include "dsq/parallel.hpp"
#include "dsq/structure_io.hpp"

namespace dsq {

ConstraintSystem extract_constraints(const Diagram& d) {
  ConstraintSystem cs;
  for (const auto& [aid, _] : d.arcs)
    cs.variables.push_back(aid);
  std::sort(cs.variables.begin(), cs.variables.end());

  std::map<std::string, int> index;
  for (size_t i = 0; i < cs.variables.size(); ++i)
    index[cs.variables[i]] = static_cast<int>(i);

  for (const auto& c : d.classical)
    cs.classical.push_back({index.at(c.under_in), index.at(c.over), index.at(c.under_out), d.label_of_arc(c.over)});
  for (const auto& s : d.singular)
    cs.singular.push_back({index.at(s.in1), index.at(s.in2), index.at(s.out1), index.at(s.out2)});
  return cs;
}

namespace {

// Backtracking state shared by one worker. Assignments propagate through a
// work queue; the trail records them for undo.
struct Solver {
  const ConstraintSystem& cs;
  const DisingquandleTable& X;
  int n;
  std::vector<int> order;  // branch order over variable indices

  std::vector<int> value;      // -1 = unassigned
  std::vector<int> trail;
  long long count = 0;
  std::vector<std::vector<int>>* sink = nullptr;

  Solver(const ConstraintSystem& cs_, const DisingquandleTable& X_, const std::vector<int>& order_)
      : cs(cs_), X(X_), n(X_.order()), order(order_), value(cs_.variables.size(), -1) {}

  const OperationTable& op(int label) const { return label == 1 ? X.op1 : X.op2; }

  bool assign(int var, int val) {
    if (value[var] >= 0)
      return value[var] == val;
    value[var] = val;
    trail.push_back(var);
    return true;
  }

  // Propagates to a fixed point from the current assignment; false on clash.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : cs.classical) {
        int ui = value[r.under_in], ov = value[r.over], uo = value[r.under_out];
        if (ov < 0)
          continue;
        if (ui >= 0 && uo < 0) {
          if (!assign(r.under_out, op(r.label).at(ui, ov)))
            return false;
          changed = true;
        } else if (uo >= 0 && ui < 0) {
          // involution: under_in = under_out * over
          if (!assign(r.under_in, op(r.label).at(uo, ov)))
            return false;
          changed = true;
        } else if (ui >= 0 && uo >= 0 && op(r.label).at(ui, ov) != uo) {
          return false;
        }
      }
      for (const auto& r : cs.singular) {
        int i1 = value[r.in1], i2 = value[r.in2];
        if (i1 < 0 || i2 < 0)
          continue;
        int o1 = X.r1.at(i1, i2), o2 = X.r2.at(i1, i2);
        if (value[r.out1] < 0) {
          if (!assign(r.out1, o1))
            return false;
          changed = true;
        } else if (value[r.out1] != o1) {
          return false;
        }
        if (value[r.out2] < 0) {
          if (!assign(r.out2, o2))
            return false;
          changed = true;
        } else if (value[r.out2] != o2) {
          return false;
        }
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      value[trail.back()] = -1;
      trail.pop_back();
    }
  }

  void search(size_t pos) {
    while (pos < order.size() && value[order[pos]] >= 0)
      ++pos;
    if (pos == order.size()) {
      ++count;
      if (sink)
        sink->push_back(value);
      return;
    }
    int var = order[pos];
    for (int v = 0; v < n; ++v) {
      size_t mark = trail.size();
      assign(var, v);
      if (propagate())
        search(pos + 1);
      undo_to(mark);
    }
  }
};

std::vector<int> branch_order(const ConstraintSystem& cs, bool reverse) {
  size_t k = cs.variables.size();
  std::vector<int> degree(k, 0);
  for (const auto& r : cs.classical) {
    ++degree[r.under_in];
    ++degree[r.over];
    ++degree[r.under_out];
  }
  for (const auto& r : cs.singular) {
    ++degree[r.in1];
    ++degree[r.in2];
    ++degree[r.out1];
    ++degree[r.out2];
  }
  std::vector<int> order(k);
  for (size_t i = 0; i < k; ++i)
    order[i] = static_cast<int>(i);
  // most-constrained-first, ties by arc id (variables are already sorted)
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });
  if (reverse)
    std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

CountResult solve(const ConstraintSystem& cs, const DisingquandleTable& X, const SolveOptions& opts) {
  if (opts.validate) {
    AxiomReport rep = check_disingquandle(X, opts.check);
    if (!rep.passed()) {
      std::string what = "refusing to color by an invalid structure '" + X.name + "': " + rep.summary();
      throw InvalidStructure(what, std::move(rep));
    }
  }

  CountResult result;
  result.arcs = cs.variables;
  result.structure_name = X.name;

  if (cs.variables.empty()) {
    result.count = 1;
    if (opts.list_all)
      result.colorings.push_back({});
    return result;
  }

  std::vector<int> order = branch_order(cs, opts.reverse_order);
  int n = X.order();
  int jobs = std::max(1, opts.jobs);

  std::vector<long long> counts(n, 0);
  std::vector<std::vector<std::vector<int>>> lists(n);
  parallel_for(jobs, 0, n, [&](int first_value) {
    Solver s(cs, X, order);
    if (opts.list_all)
      s.sink = &lists[first_value];
    size_t mark = s.trail.size();
    s.assign(order[0], first_value);
    if (s.propagate())
      s.search(1);
    s.undo_to(mark);
    counts[first_value] = s.count;
  });

  for (int v = 0; v < n; ++v)
    result.count += counts[v];
  if (opts.list_all) {
    for (auto& l : lists)
      for (auto& c : l)
        result.colorings.push_back(std::move(c));
    std::sort(result.colorings.begin(), result.colorings.end());
  }
  return result;
}

CountResult count_diagram(const Diagram& d, const DisingquandleTable& X, const SolveOptions& opts) {
  ValidationReport rep = validate_diagram(d);
  if (!rep.ok())
    throw InvalidDiagram("cannot color an invalid diagram: " + rep.issues.front().message, std::move(rep));
  CountResult result = solve(extract_constraints(d), X, opts);
  result.link_name = d.name;
  return result;
}

CountResult count_invariant(const std::string& link_path, const std::string& structure_path,
                            const SolveOptions& opts) {
  Diagram d = load_diagram_file(link_path);
  auto parsed = load_structure_file(structure_path);
  auto* table = std::get_if<DisingquandleTable>(&parsed);
  if (!table)
    throw StructureError("counting needs a disingquandle structure file, found a gfamily");
  return count_diagram(d, *table, opts);
}

}  // namespace dsq
