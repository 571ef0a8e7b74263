#pragma once

#include <string>
#include <vector>

#include "dsq/axioms.hpp"
#include "dsq/diagram.hpp"

namespace dsq {

// Crossing relations over variable indices (positions in `variables`, which
// is sorted lexicographically by arc id).
struct ClassicalRelation {
  int under_in, over, under_out;
  int label;  // operation selector: the over arc's component label
};

struct SingularRelation {
  int in1, in2, out1, out2;  // out1 = R1(in1,in2), out2 = R2(in1,in2)
};

struct ConstraintSystem {
  std::vector<std::string> variables;
  std::vector<ClassicalRelation> classical;
  std::vector<SingularRelation> singular;
};

// One relation per classical crossing, two equations per singular crossing;
// free-loop arcs contribute unconstrained variables.
ConstraintSystem extract_constraints(const Diagram& d);

struct SolveOptions {
  bool list_all = false;
  int jobs = 1;
  bool reverse_order = false;  // reverses the variable ordering (testing hook)
  bool validate = true;        // refuse invalid structures
  CheckOptions check;
};

struct CountResult {
  long long count = 0;
  std::vector<std::string> arcs;            // coordinate order of the colorings
  std::vector<std::vector<int>> colorings;  // present when list_all, lexicographic
  std::string structure_name;
  std::string link_name;
};

// Exact number of satisfying assignments. Backtracking over a
// most-constrained-first variable order with forward propagation: singular
// relations are functional left to right; classical relations determine
// under_out from (under_in, over) and, by involution, under_in from
// (under_out, over). Deterministic for any jobs value.
CountResult solve(const ConstraintSystem& cs, const DisingquandleTable& X, const SolveOptions& opts = {});

CountResult count_diagram(const Diagram& d, const DisingquandleTable& X, const SolveOptions& opts = {});

// parse -> validate -> extract -> solve, reading both inputs from files.
CountResult count_invariant(const std::string& link_path, const std::string& structure_path,
                            const SolveOptions& opts = {});

}  // namespace dsq
