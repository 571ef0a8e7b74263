#include "dsq/builders.hpp"

#include <string>

namespace dsq {

namespace {

int require_param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw StructureError("family '" + spec.name + "' requires parameter '" + key + "'");
  return it->second;
}

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

}  // namespace

OperationTable build_dihedral(int n) {
  if (n < 1)
    throw StructureError("dihedral quandle needs n >= 1");
  return OperationTable::from_fn(n, [n](int x, int y) { return modn(2LL * y - x, n); });
}

OperationTable build_core(const Group& g) {
  return OperationTable::from_fn(g.order(), [&g](int x, int y) { return g.mul(g.mul(y, g.inverse(x)), y); });
}

DisingquandleTable build_z6_example() {
  const int n = 6;
  auto op = build_dihedral(n);
  auto r1 = OperationTable::from_fn(n, [](int x, int) { return modn(x + 3, 6); });
  auto r2 = OperationTable::from_fn(n, [](int x, int y) { return modn(3LL * x * x + 3 * x + y + 3, 6); });
  return DisingquandleTable("z6", op, op, r1, r2);
}

DisingquandleTable build_affine_m(int n, int m) {
  if (n < 1)
    throw StructureError("affine-m needs n >= 1");
  if (n % 2 == 0)
    throw StructureError("affine-m needs an odd modulus (2-torsion breaks the construction)");
  m = modn(m, n);
  auto op = build_dihedral(n);
  auto r1 = OperationTable::from_fn(n, [n, m](int x, int y) { return modn(1LL * m * x + (2LL * m + 1) * y, n); });
  auto r2 =
      OperationTable::from_fn(n, [n, m](int x, int y) { return modn((1LL * m - 1) * x + 2LL * (m + 1) * y, n); });
  return DisingquandleTable("affine-m-" + std::to_string(n) + "-" + std::to_string(m), op, op, r1, r2);
}

DisingquandleTable build_affine_b(int n, int b) {
  if (n < 2)
    throw StructureError("affine-B needs n >= 2");
  b = modn(b, n);
  auto op = build_dihedral(n);
  auto r1 = OperationTable::from_fn(n, [n, b](int x, int y) { return modn((2LL - b) * x + (1LL * b - 1) * y, n); });
  auto r2 = OperationTable::from_fn(n, [n, b](int x, int y) { return modn((1LL - b) * x + 1LL * b * y, n); });
  return DisingquandleTable("affine-B-" + std::to_string(n) + "-" + std::to_string(b), op, op, r1, r2);
}

DisingquandleTable build_trivial_disingquandle(int n, int c) {
  if (n < 1)
    throw StructureError("trivial family needs n >= 1");
  c = modn(c, n);
  auto op = OperationTable::from_fn(n, [](int x, int) { return x; });
  auto r = OperationTable::from_fn(n, [n, c](int x, int y) { return modn(1LL * x + y + c, n); });
  return DisingquandleTable("trivial-" + std::to_string(n) + "-" + std::to_string(c), op, op, r, r);
}

DisingquandleTable build_prime_zeta(int p) {
  if (!is_prime(p) || p == 2)
    throw StructureError("prime-zeta needs an odd prime modulus");
  // Smallest primitive root, then B = 1 - zeta^((p-1)/2) = 1 - (-1) = 2.
  auto pow_mod = [p](long long base, int exp) {
    long long r = 1, b = base % p;
    for (; exp > 0; exp >>= 1, b = b * b % p)
      if (exp & 1)
        r = r * b % p;
    return static_cast<int>(r);
  };
  int zeta = 0;
  for (int g = 2; g < p; ++g) {
    int seen = 1, v = 1;
    for (; seen < p; ++seen) {
      v = static_cast<int>(1LL * v * g % p);
      if (v == 1)
        break;
    }
    if (seen == p - 1) {
      zeta = g;
      break;
    }
  }
  if (zeta == 0)
    throw StructureError("no primitive root found (modulus not prime?)");
  int b = modn(1LL - pow_mod(zeta, (p - 1) / 2), p);
  auto d = build_affine_b(p, b);
  d.name = "prime-zeta-" + std::to_string(p);
  return d;
}

DisingquandleTable with_identity_pair(std::string name, const OperationTable& op) {
  int n = op.order();
  auto r1 = OperationTable::from_fn(n, [](int x, int) { return x; });
  auto r2 = OperationTable::from_fn(n, [](int, int y) { return y; });
  return DisingquandleTable(std::move(name), op, op, r1, r2);
}

GFamily build_cyclic_type_family(const OperationTable& q) {
  int n = q.order();
  if (n < 2)
    throw StructureError("cyclic-type family needs at least 2 elements");
  int m = n - 1;
  for (int y = 0; y < n; ++y) {
    // Right translation by y must be a non-identity permutation whose order
    // divides n-1.
    std::vector<int> seen(n, 0);
    bool identity = true;
    for (int x = 0; x < n; ++x) {
      int v = q.at(x, y);
      if (seen[v]++)
        throw StructureError("right translation by " + std::to_string(y) + " is not a permutation");
      if (v != x)
        identity = false;
    }
    if (identity)
      throw StructureError("right translation by " + std::to_string(y) +
                           " is the identity, not a cycle on the other elements");
    std::vector<int> power(n);
    for (int x = 0; x < n; ++x)
      power[x] = x;
    for (int k = 0; k < m; ++k)
      for (int x = 0; x < n; ++x)
        power[x] = q.at(power[x], y);
    for (int x = 0; x < n; ++x)
      if (power[x] != x)
        throw StructureError("right translation by " + std::to_string(y) + " has order not dividing " +
                             std::to_string(m));
  }

  std::vector<OperationTable> ops;
  ops.reserve(m);
  std::vector<int> cur((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      cur[(size_t)x * n + y] = x;
  for (int i = 0; i < m; ++i) {
    ops.emplace_back(n, cur);
    std::vector<int> next((size_t)n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        next[(size_t)x * n + y] = q.at(cur[(size_t)x * n + y], y);
    cur = std::move(next);
  }
  return GFamily("cyclic-type-" + std::to_string(n), Group::cyclic(m), n, std::move(ops));
}

GFamily build_trivial_gfamily(const Group& g, int set_order) {
  if (set_order < 1)
    throw StructureError("trivial gfamily needs a nonempty set");
  auto triv = OperationTable::from_fn(set_order, [](int x, int) { return x; });
  return GFamily("trivial-gfamily-" + std::to_string(g.order()) + "x" + std::to_string(set_order), g, set_order,
                 std::vector<OperationTable>(g.order(), triv));
}

BuiltStructure build_family(const FamilySpec& spec) {
  const std::string& f = spec.name;
  if (f == "dihedral") {
    int n = require_param(spec, "n");
    return with_identity_pair("dihedral-" + std::to_string(n) + "+id", build_dihedral(n));
  }
  if (f == "core") {
    int n = require_param(spec, "n");
    return with_identity_pair("core-z" + std::to_string(n) + "+id", build_core(Group::cyclic(n)));
  }
  if (f == "trivial")
    return build_trivial_disingquandle(require_param(spec, "n"), require_param(spec, "c"));
  if (f == "affine-m")
    return build_affine_m(require_param(spec, "n"), require_param(spec, "m"));
  if (f == "affine-B" || f == "affine-b")
    return build_affine_b(require_param(spec, "n"), require_param(spec, "B"));
  if (f == "z6" || f == "z6-example" || f == "z6-paper")
    return build_z6_example();
  if (f == "prime-zeta")
    return build_prime_zeta(require_param(spec, "p"));
  if (f == "cyclic-type-family")
    return build_cyclic_type_family(build_dihedral(require_param(spec, "n")));
  if (f == "trivial-gfamily")
    return build_trivial_gfamily(Group::cyclic(require_param(spec, "group-order")), require_param(spec, "set-order"));
  throw StructureError("unknown family name: " + f);
}

}  // namespace dsq
