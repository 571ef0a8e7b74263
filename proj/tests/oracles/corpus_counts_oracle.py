#!/usr/bin/env python3
"""Direct-solve oracle for the shipped corpus diagrams over the z6 structure
and the order-5 dihedral structure with the identity R-pair."""


def dihedral(n):
    return [[(2 * y - x) % n for y in range(n)] for x in range(n)]


def z6():
    n = 6
    op = dihedral(n)
    r1 = [[(x + 3) % n for y in range(n)] for x in range(n)]
    r2 = [[(3 * x * x + 3 * x + y + 3) % n for y in range(n)] for x in range(n)]
    return n, op, op, r1, r2


def d5id():
    n = 5
    op = dihedral(n)
    r1 = [[x for _ in range(n)] for x in range(n)]
    r2 = [[y for y in range(n)] for _ in range(n)]
    return n, op, op, r1, r2


def count(structure, arcs, classical, singular):
    """classical: (over, under_in, under_out, label); singular: (i1,i2,o1,o2)."""
    n, op1, op2, r1, r2 = structure
    ops = {1: op1, 2: op2}
    total = 0
    import itertools
    for vals in itertools.product(range(n), repeat=len(arcs)):
        a = dict(zip(arcs, vals))
        ok = True
        for (o, ui, uo, lab) in classical:
            if a[uo] != ops[lab][a[ui]][a[o]]:
                ok = False
                break
        if ok:
            for (i1, i2, o1, o2) in singular:
                if a[o1] != r1[a[i1]][a[i2]] or a[o2] != r2[a[i1]][a[i2]]:
                    ok = False
                    break
        total += ok
    return total


DIAGRAMS = {
    "L1": (["x", "b", "y", "a"], [], [("x", "y", "a", "b"), ("a", "b", "x", "y")]),
    "L2": (["x", "v", "t", "w", "y", "u"],
           [("u", "x", "w", 2), ("y", "v", "t", 2)],
           [("x", "y", "u", "v"), ("u", "w", "t", "y")]),
    "L3": (["x", "v", "t", "q", "y", "u", "p"],
           [("u", "y", "p", 2), ("p", "x", "q", 2), ("y", "v", "t", 2)],
           [("x", "y", "u", "v"), ("p", "q", "t", "u")]),
    "dsq_example": (["x", "z", "v", "y", "u"],
                    [("y", "x", "z", 2), ("z", "y", "u", 1), ("u", "z", "v", 2)],
                    [("u", "v", "x", "y")]),
    "hopf": (["a", "b"], [("b", "a", "a", 2), ("a", "b", "b", 1)], []),
    "unknot": (["a"], [], []),
    "rv_after": (["x", "p1", "q", "y", "w", "p2"],
                 [("x", "y", "w", 1), ("p2", "p1", "q", 2)],
                 [("w", "x", "p1", "p2"), ("p2", "q", "x", "y")]),
}

for name, (arcs, cl, sg) in DIAGRAMS.items():
    print(f"{name:12s} z6: {count(z6(), arcs, cl, sg):4d}   "
          f"d5id: {count(d5id(), arcs, cl, sg):4d}")
