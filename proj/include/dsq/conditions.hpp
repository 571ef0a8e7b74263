#pragma once

#include "dsq/axioms.hpp"

namespace dsq {

// Specialized singquandle conditions for the two quandle families whose
// general checks collapse to short identities. These exist to cross-validate
// check_singquandle; see the equivalence property suites.

// Conditions over the dihedral quandle x*y = 2y-x on Z_n:
//   dihedral-1  R2(x,y) = R1(x,y) + y - x
//   dihedral-2  R1(x,y) = R1(2x-y, x) + y - x
//   dihedral-3  R1(x, 2y-z) = 2y - R1(2y-x, z)
//   dihedral-4  R2(2y-x, z) = 2y - R2(x, 2y-z)
AxiomReport check_dihedral_conditions(int n, const OperationTable& r1, const OperationTable& r2);

// Conditions over the core quandle x*y = y x^-1 y on a group G:
//   core-1  R2(x,z) z^-1 y z^-1 R2(x,z) = R1(x,z) x^-1 y x^-1 R1(x,z)
//   core-2  R1(x,y) = R2(x y^-1 x, x)
//   core-3  R2(x,y) = R2(w,x) R1(w,x)^-1 R2(w,x),  w = x y^-1 x
//   core-4  y R1(y x^-1 y, z)^-1 y = R1(x, y z^-1 y)
//   core-5  R2(y x^-1 y, z) = y R2(x, y z^-1 y)^-1 y
AxiomReport check_core_conditions(const Group& g, const OperationTable& r1, const OperationTable& r2);

bool condition_holds_at(int n, const OperationTable& r1, const OperationTable& r2, const Violation& v);
bool condition_holds_at(const Group& g, const OperationTable& r1, const OperationTable& r2, const Violation& v);

}  // namespace dsq
