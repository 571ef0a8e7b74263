#include "dsq/conditions.hpp"

#include <sstream>

namespace dsq {

namespace {

std::string at3(int x, int y, int z) {
  std::ostringstream os;
  os << "(x=" << x << ", y=" << y << ", z=" << z << ")";
  return os.str();
}

std::string at2(int x, int y) {
  std::ostringstream os;
  os << "(x=" << x << ", y=" << y << ")";
  return os.str();
}

struct Dihedral {
  int n;
  const OperationTable& r1;
  const OperationTable& r2;
  bool d1(int x, int y) const { return r2.at(x, y) == modn(1LL * r1.at(x, y) + y - x, n); }
  bool d2(int x, int y) const { return r1.at(x, y) == modn(1LL * r1.at(modn(2LL * x - y, n), x) + y - x, n); }
  bool d3(int x, int y, int z) const {
    return r1.at(x, modn(2LL * y - z, n)) == modn(2LL * y - r1.at(modn(2LL * y - x, n), z), n);
  }
  bool d4(int x, int y, int z) const {
    return r2.at(modn(2LL * y - x, n), z) == modn(2LL * y - r2.at(x, modn(2LL * y - z, n)), n);
  }
};

struct Core {
  const Group& g;
  const OperationTable& r1;
  const OperationTable& r2;
  int mul3(int a, int b, int c) const { return g.mul(g.mul(a, b), c); }

  bool c1(int x, int y, int z) const {
    int l = mul3(g.mul(r2.at(x, z), g.inverse(z)), g.mul(y, g.inverse(z)), r2.at(x, z));
    int r = mul3(g.mul(r1.at(x, z), g.inverse(x)), g.mul(y, g.inverse(x)), r1.at(x, z));
    return l == r;
  }
  bool c2(int x, int y) const { return r1.at(x, y) == r2.at(mul3(x, g.inverse(y), x), x); }
  bool c3(int x, int y) const {
    int w = mul3(x, g.inverse(y), x);
    return r2.at(x, y) == mul3(r2.at(w, x), g.inverse(r1.at(w, x)), r2.at(w, x));
  }
  bool c4(int x, int y, int z) const {
    int w = mul3(y, g.inverse(x), y);
    return mul3(y, g.inverse(r1.at(w, z)), y) == r1.at(x, mul3(y, g.inverse(z), y));
  }
  bool c5(int x, int y, int z) const {
    int w = mul3(y, g.inverse(x), y);
    return r2.at(w, z) == mul3(y, g.inverse(r2.at(x, mul3(y, g.inverse(z), y))), y);
  }
};

}  // namespace

AxiomReport check_dihedral_conditions(int n, const OperationTable& r1, const OperationTable& r2) {
  if (r1.order() != n || r2.order() != n)
    throw StructureError("condition tables must match the stated modulus");
  AxiomReport rep;
  rep.families_checked = 4;
  Dihedral d{n, r1, r2};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!d.d1(x, y))
        rep.violations.push_back({"dihedral-1", "R2(x,y) != R1(x,y)+y-x at " + at2(x, y), {x, y}});
      if (!d.d2(x, y))
        rep.violations.push_back({"dihedral-2", "R1(x,y) != R1(2x-y,x)+y-x at " + at2(x, y), {x, y}});
      for (int z = 0; z < n; ++z) {
        if (!d.d3(x, y, z))
          rep.violations.push_back({"dihedral-3", "R1(x,2y-z) != 2y-R1(2y-x,z) at " + at3(x, y, z), {x, y, z}});
        if (!d.d4(x, y, z))
          rep.violations.push_back({"dihedral-4", "R2(2y-x,z) != 2y-R2(x,2y-z) at " + at3(x, y, z), {x, y, z}});
      }
    }
  return rep;
}

AxiomReport check_core_conditions(const Group& g, const OperationTable& r1, const OperationTable& r2) {
  if (r1.order() != g.order() || r2.order() != g.order())
    throw StructureError("condition tables must match the group order");
  AxiomReport rep;
  rep.families_checked = 5;
  Core c{g, r1, r2};
  int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!c.c2(x, y))
        rep.violations.push_back({"core-2", "R1(x,y) != R2(xy^-1x, x) at " + at2(x, y), {x, y}});
      if (!c.c3(x, y))
        rep.violations.push_back({"core-3", "R2(x,y) != R2(w,x)R1(w,x)^-1R2(w,x) at " + at2(x, y), {x, y}});
      for (int z = 0; z < n; ++z) {
        if (!c.c1(x, y, z))
          rep.violations.push_back({"core-1", "conjugation identity fails at " + at3(x, y, z), {x, y, z}});
        if (!c.c4(x, y, z))
          rep.violations.push_back({"core-4", "yR1(yx^-1y,z)^-1y != R1(x,yz^-1y) at " + at3(x, y, z), {x, y, z}});
        if (!c.c5(x, y, z))
          rep.violations.push_back({"core-5", "R2(yx^-1y,z) != yR2(x,yz^-1y)^-1y at " + at3(x, y, z), {x, y, z}});
      }
    }
  return rep;
}

bool condition_holds_at(int n, const OperationTable& r1, const OperationTable& r2, const Violation& v) {
  Dihedral d{n, r1, r2};
  const auto& w = v.witness;
  if (v.axiom == "dihedral-1")
    return d.d1(w[0], w[1]);
  if (v.axiom == "dihedral-2")
    return d.d2(w[0], w[1]);
  if (v.axiom == "dihedral-3")
    return d.d3(w[0], w[1], w[2]);
  if (v.axiom == "dihedral-4")
    return d.d4(w[0], w[1], w[2]);
  throw StructureError("unknown dihedral condition id: " + v.axiom);
}

bool condition_holds_at(const Group& g, const OperationTable& r1, const OperationTable& r2, const Violation& v) {
  Core c{g, r1, r2};
  const auto& w = v.witness;
  if (v.axiom == "core-1")
    return c.c1(w[0], w[1], w[2]);
  if (v.axiom == "core-2")
    return c.c2(w[0], w[1]);
  if (v.axiom == "core-3")
    return c.c3(w[0], w[1]);
  if (v.axiom == "core-4")
    return c.c4(w[0], w[1], w[2]);
  if (v.axiom == "core-5")
    return c.c5(w[0], w[1], w[2]);
  throw StructureError("unknown core condition id: " + v.axiom);
}

}  // namespace dsq
