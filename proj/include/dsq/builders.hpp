#pragma once

#include <map>
#include <string>
#include <variant>

#include "dsq/structures.hpp"

namespace dsq {

// Named builders for the example structures and families. All builders
// materialize full tables; none evaluates symbolic expressions at check time.

// Dihedral operation x*y = 2y - x on Z_n.
OperationTable build_dihedral(int n);

// Core operation x*y = y x^-1 y on a group.
OperationTable build_core(const Group& g);

// The order-6 reference structure: *1 = *2 = -x+2y, R1 = x+3,
// R2 = 3x^2+3x+y+3, all mod 6.
DisingquandleTable build_z6_example();

// Affine family on Z_n (n odd): *1 = *2 = -x+2y, R1 = mx+(2m+1)y,
// R2 = (m-1)x+2(m+1)y. Not every (n,m) yields a valid structure; callers run
// the checker. Rejects even n (2-torsion).
DisingquandleTable build_affine_m(int n, int m);

// Affine family on Z_n: *1 = *2 = -x+2y, R1 = (2-B)x+(B-1)y, R2 = (1-B)x+By.
// Validity is intentionally not guaranteed; this is the search substrate.
DisingquandleTable build_affine_b(int n, int b);

// Trivial operations x*1y = x*2y = x with R1 = R2 = x+y+c mod n. Validity is
// the checker's verdict, not a promise.
DisingquandleTable build_trivial_disingquandle(int n, int c);

// B derived from a primitive root of Z_p via 1 - B = zeta^((p-1)/2); reduces
// to B = 2 for every odd prime p.
DisingquandleTable build_prime_zeta(int p);

// Completes a plain involutive quandle to a disingquandle with the identity
// pair R1(x,y) = x, R2(x,y) = y, which satisfies the singular axioms over any
// involutive quandle.
DisingquandleTable with_identity_pair(std::string name, const OperationTable& op);

// Z_(n-1)-family from a quandle whose right translations all have order
// dividing n-1 (and are not the identity): x *^i y = R_y^i(x). Throws with
// the offending column named otherwise.
GFamily build_cyclic_type_family(const OperationTable& q);

// x *^g y = x for every g.
GFamily build_trivial_gfamily(const Group& g, int set_order);

// CLI-facing family dispatcher.
struct FamilySpec {
  std::string name;                 // dihedral, core, trivial, affine-m, affine-B,
                                    // z6, prime-zeta, cyclic-type-family, trivial-gfamily
  std::map<std::string, int> params;
};

using BuiltStructure = std::variant<DisingquandleTable, GFamily>;
BuiltStructure build_family(const FamilySpec& spec);

}  // namespace dsq
