#!/usr/bin/env python3
"""Independent brute-force oracle for the axiom checkers and searches.

Everything here is evaluated directly from modular formulas / raw tables,
with no shared code with the C++ implementation.  Outputs of this script
are frozen into the C++ test expectations.

Axiom catalog (default set):
  quandle      x*x=x, (x*y)*y=x, (x*y)*z=(x*z)*(y*z)
  2.2.1        R2(R2(x,y), R1(x,y)) = x
  2.2.2        R1(R2(x,y), R1(x,y)) = y
  2.2.4        (y*z)*R2(x,z) = (y*x)*R1(x,z)
  2.2.5        R1(x,y) = R2(y*x, x)
  2.2.6        R2(x,y) = R1(y*x,x) * R2(y*x,x)
  2.2.7        R1(x*y,z)*y = R1(x, z*y)
  2.2.8        R2(x*y,z) = R2(x, z*y)*y
  4.2.1..4.2.6 two-operation mixing axioms
"""

import itertools
import sys


def table_fn(n, f):
    return [[f(x, y) % n for y in range(n)] for x in range(n)]


def quandle_ok(n, op):
    for x in range(n):
        if op[x][x] != x:
            return False
    for x in range(n):
        for y in range(n):
            if op[op[x][y]][y] != x:
                return False
            for z in range(n):
                if op[op[x][y]][z] != op[op[x][z]][op[y][z]]:
                    return False
    return True


def singquandle_ok(n, op, r1, r2, verbose=False):
    if not quandle_ok(n, op):
        return "quandle"
    for x in range(n):
        for y in range(n):
            a, b = r1[x][y], r2[x][y]
            if r2[b][a] != x:
                return "2.2.1"
            if r1[b][a] != y:
                return "2.2.2"
            if r1[x][y] != r2[op[y][x]][x]:
                return "2.2.5"
            w = op[y][x]
            if r2[x][y] != op[r1[w][x]][r2[w][x]]:
                return "2.2.6"
            for z in range(n):
                if op[op[y][z]][r2[x][z]] != op[op[y][x]][r1[x][z]]:
                    return "2.2.4"
                if op[r1[op[x][y]][z]][y] != r1[x][op[z][y]]:
                    return "2.2.7"
                if r2[op[x][y]][z] != op[r2[x][op[z][y]]][y]:
                    return "2.2.8"
    return None


def disingquandle_ok(n, op1, op2, r1, r2):
    v = singquandle_ok(n, op1, r1, r2)
    if v:
        return "sq1:" + v
    v = singquandle_ok(n, op2, r1, r2)
    if v:
        return "sq2:" + v
    for x in range(n):
        for y in range(n):
            w1 = op1[y][x]
            if r2[x][y] != op2[r1[w1][x]][r2[w1][x]]:
                return "4.2.5"
            w2 = op2[y][x]
            if r2[x][y] != op1[r1[w2][x]][r2[w2][x]]:
                return "4.2.6"
            for z in range(n):
                if op2[op1[x][y]][z] != op1[op2[x][z]][op2[y][z]]:
                    return "4.2.1"
                if op1[op2[x][y]][z] != op2[op1[x][z]][op1[y][z]]:
                    return "4.2.2"
                if op2[op1[y][z]][r2[x][z]] != op1[op2[y][x]][r1[x][z]]:
                    return "4.2.3"
                if op1[op2[y][z]][r2[x][z]] != op2[op1[y][x]][r1[x][z]]:
                    return "4.2.4"
    return None


def dihedral(n):
    return table_fn(n, lambda x, y: 2 * y - x)


def z6_structure():
    n = 6
    op = dihedral(n)
    r1 = table_fn(n, lambda x, y: x + 3)
    r2 = table_fn(n, lambda x, y: 3 * x * x + 3 * x + y + 3)
    return n, op, op, r1, r2


def affine_b(n, B):
    op = dihedral(n)
    r1 = table_fn(n, lambda x, y: (2 - B) * x + (B - 1) * y)
    r2 = table_fn(n, lambda x, y: (1 - B) * x + B * y)
    return n, op, op, r1, r2


def affine_m(n, m):
    op = dihedral(n)
    r1 = table_fn(n, lambda x, y: m * x + (2 * m + 1) * y)
    r2 = table_fn(n, lambda x, y: (m - 1) * x + 2 * (m + 1) * y)
    return n, op, op, r1, r2


def main():
    print("== z6 structure ==")
    print("verdict:", disingquandle_ok(*z6_structure()) or "VALID")

    print("== affine B-family over Z7 ==")
    passing = [B for B in range(7) if disingquandle_ok(*affine_b(7, B)) is None]
    print("passing B:", passing)
    for B in (2, 4, 5):
        print(f"  B={B}:", disingquandle_ok(*affine_b(7, B)) or "VALID")

    print("== affine m-family ==")
    for n in (3, 5, 7, 9, 25):
        ok = [m for m in range(n) if disingquandle_ok(*affine_m(n, m)) is None]
        bad = {m: disingquandle_ok(*affine_m(n, m)) for m in range(n)
               if disingquandle_ok(*affine_m(n, m))}
        print(f"n={n}: passing m = {ok}  (3m==0 set: "
              f"{[m for m in range(n) if (3*m) % n == 0]})")
        if bad and n <= 9:
            print("   failures:", bad)

    print("== trivial op, R1=R2=x+y+c on Z2 ==")
    for c in (0, 1):
        n = 2
        op = table_fn(n, lambda x, y: x)
        r = table_fn(n, lambda x, y: x + y + c)
        print(f"c={c}:", disingquandle_ok(n, op, op, r, r) or "VALID")

    print("== trivial op, R1=R2=const 0 on Z2 (expect 2.2.1 fail) ==")
    n = 2
    op = table_fn(n, lambda x, y: x)
    r = table_fn(n, lambda x, y: 0)
    print("verdict:", singquandle_ok(n, op, r, r) or "VALID")

    print("== identity pair R1=x, R2=y on dihedral Z5 ==")
    n = 5
    op = dihedral(5)
    r1 = table_fn(n, lambda x, y: x)
    r2 = table_fn(n, lambda x, y: y)
    print("verdict:", disingquandle_ok(n, op, op, r1, r2) or "VALID")

    print("== full enumeration at n=2 (all 2^16 table quadruples) ==")
    n = 2
    tables = []
    for bits in range(16):
        t = [[(bits >> (2 * x + y)) & 1 for y in range(n)] for x in range(n)]
        tables.append(t)
    found = []
    for op1, op2, r1, r2 in itertools.product(tables, repeat=4):
        if disingquandle_ok(n, op1, op2, r1, r2) is None:
            found.append((op1, op2, r1, r2))
    print("count:", len(found))
    for s in found:
        print("  op1,op2,r1,r2 =", s)

    print("== dihedral specialized-conditions equivalence at n=3 ==")
    # conditions (R2 determined by cond 1):
    #  D1: R2(x,y) = R1(x,y) + y - x
    #  D2: R1(x,y) = R1(2x-y, x) + y - x
    #  D3: R1(x, 2y-z) = 2y - R1(2y-x, z)
    #  D4: R2(2y-x, z) = 2y - R2(x, 2y-z)
    n = 3
    op = dihedral(n)
    agree = True
    cond_count = 0
    ax_count = 0
    for bits in range(n ** (n * n)):
        v, r1 = bits, []
        for x in range(n):
            row = []
            for y in range(n):
                row.append(v % n)
                v //= n
            r1.append(row)
        r2 = [[(r1[x][y] + y - x) % n for y in range(n)] for x in range(n)]
        conds = True
        for x in range(n):
            for y in range(n):
                if r1[x][y] != (r1[(2 * x - y) % n][x] + y - x) % n:
                    conds = False
                for z in range(n):
                    if r1[x][(2 * y - z) % n] != (2 * y - r1[(2 * y - x) % n][z]) % n:
                        conds = False
                    if r2[(2 * y - x) % n][z] != (2 * y - r2[x][(2 * y - z) % n]) % n:
                        conds = False
        ax = singquandle_ok(n, op, r1, r2) is None
        cond_count += conds
        ax_count += ax
        if conds != ax:
            agree = False
            print("  MISMATCH at r1 =", r1, "conds:", conds, "axioms:", ax)
    print("agree:", agree, " cond passers:", cond_count, " axiom passers:", ax_count)

    print("== L1/L2/L3 counts over z6 from raw crossing equations ==")
    n, op, _, r1, r2 = z6_structure()

    def star(a, b):
        return op[a][b]

    c1 = 0
    pairs1 = []
    for x in range(6):
        for y in range(6):
            a, b = r1[x][y], r2[x][y]
            if r1[a][b] == x and r2[a][b] == y:
                c1 += 1
                pairs1.append((x, y))
    print("L1 count:", c1)

    c2 = 0
    pairs2 = []
    for x in range(6):
        for y in range(6):
            u, v = r1[x][y], r2[x][y]
            w = star(x, u)
            t = star(v, y)
            if r1[u][w] == t and r2[u][w] == y:
                c2 += 1
                pairs2.append((x, y))
    print("L2 count:", c2, "pairs:", sorted(pairs2))

    c3 = 0
    pairs3 = []
    for x in range(6):
        for y in range(6):
            u, v = r1[x][y], r2[x][y]
            p = star(y, u)
            q = star(x, p)
            t = star(v, y)
            if r2[p][q] == u and r1[p][q] == t:
                c3 += 1
                pairs3.append((x, y))
    print("L3 count:", c3, "pairs:", sorted(pairs3))


if __name__ == "__main__":
    sys.exit(main())
