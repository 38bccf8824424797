#!/usr/bin/env python3
"""Generate the bundled multiplication tables for all groups of order <= 16.

Writes one file per group into data/groups/ in the loader's format:
first line the order, then `order` lines of `order` element indices,
row i column j holding the index of i*j.  Element 0 is the identity.

The constructions are explicit (cyclic, direct products, dihedral,
dicyclic, metacyclic, the two order-16 semidirect products, the central
product d4.c4, and A4).  The script verifies group axioms for every
table and pairwise non-isomorphism within each order via invariants
(abelianness, element-order profile, center order/exponent, number of
distinct squares), so the bundle is provably the complete list:
1,1,1,2,1,2,1,5,2,2,1,5,1,2,1,14 groups for orders 1..16.
"""

import os
import sys
from itertools import permutations
from math import lcm


def cyclic(n):
    return [f"c{n}", [[(i + j) % n for j in range(n)] for i in range(n)]]


def direct(a, b):
    na, ta = len(a[1]), a[1]
    nb, tb = len(b[1]), b[1]
    n = na * nb

    def mul(x, y):
        xa, xb = divmod(x, nb)
        ya, yb = divmod(y, nb)
        return ta[xa][ya] * nb + tb[xb][yb]

    return [a[0] + "x" + b[0], [[mul(i, j) for j in range(n)] for i in range(n)]]


def from_pairs(name, elems, mul):
    elems = sorted(elems)
    idx = {e: i for i, e in enumerate(elems)}
    table = [[idx[mul(a, b)] for b in elems] for a in elems]
    return [name, table]


def dihedral(m):
    # symmetries of the m-gon, order 2m; element (i, f) = r^i s^f
    elems = [(f, i) for f in (0, 1) for i in range(m)]

    def mul(x, y):
        fx, ix = x
        fy, iy = y
        return ((fx + fy) % 2, (iy + (ix if fy == 0 else -ix)) % m)

    # s r^i s = r^-i, so (f,i)*(f',i') = (f+f', i'+ i*(-1)^f')... encode as above
    return from_pairs(f"d{m}", elems, lambda x, y: ((x[0] + y[0]) % 2,
                                                    (x[1] * (1 if y[0] == 0 else -1) + y[1]) % m))


def metacyclic16(name, t):
    # <a,b | a^8 = 1, b^2 = 1, b a b = a^t>, t^2 = 1 mod 8; t=7 dihedral, 3 semidihedral, 5 modular
    elems = [(j, i) for j in (0, 1) for i in range(8)]

    def mul(x, y):
        jx, ix = x
        jy, iy = y
        return ((jx + jy) % 2, (ix * (t if jy == 1 else 1) + iy) % 8)

    return from_pairs(name, elems, mul)


def dicyclic(m):
    # <a,b | a^(2m) = 1, b^2 = a^m, b^-1 a b = a^-1>, order 4m
    elems = [(j, i) for j in (0, 1) for i in range(2 * m)]

    def mul(x, y):
        jx, ix = x
        jy, iy = y
        if jy == 0:
            return (jx, (ix * (1 if jx == 0 else 1) + iy) % (2 * m)) if jx == 0 else (1, (ix - iy) % (2 * m))
        # y = a^iy b
        if jx == 0:
            return (1, (ix + iy) % (2 * m))
        # a^ix b a^iy b = a^(ix-iy) b^2 = a^(ix-iy+m)
        return (0, (ix - iy + m) % (2 * m))

    return from_pairs({2: "q8", 3: "dic3", 4: "q16"}[m], elems, mul)


def c4_s_c4():
    # <a,b | a^4 = b^4 = 1, b^-1 a b = a^-1>
    elems = [(j, i) for j in range(4) for i in range(4)]

    def mul(x, y):
        jx, ix = x
        jy, iy = y
        return ((jx + jy) % 4, (ix * (1 if jy % 2 == 0 else -1) + iy) % 4)

    return from_pairs("c4sc4", elems, mul)


def c2c2_s_c4():
    # C4 acting on C2 x C2 by swapping the coordinates
    elems = [(j, x, y) for j in range(4) for x in (0, 1) for y in (0, 1)]

    def mul(p, q):
        j, x, y = p
        k, u, v = q
        if j % 2 == 1:
            u, v = v, u
        return ((j + k) % 4, x ^ u, y ^ v)

    return from_pairs("c2c2sc4", elems, mul)


def pauli16():
    # central product d4 . c4: elements i^a X^b Z^c with Z X = - X Z
    elems = [(a, b, c) for a in range(4) for b in (0, 1) for c in (0, 1)]

    def mul(p, q):
        a, b, c = p
        d, u, v = q
        return ((a + d + 2 * (c & u)) % 4, b ^ u, c ^ v)

    return from_pairs("pauli16", elems, mul)


def a4():
    elems = [p for p in permutations(range(4))
             if sum(1 for i in range(4) for j in range(i) if p[j] > p[i]) % 2 == 0]

    def mul(p, q):
        return tuple(p[q[i]] for i in range(4))

    return from_pairs("a4", elems, mul)


def reorder_identity_first(table):
    n = len(table)
    e = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    if e == 0:
        return table
    perm = [e] + [i for i in range(n) if i != e]
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    return [[inv[table[perm[i]][perm[j]]] for j in range(n)] for i in range(n)]


def check_group(name, table):
    n = len(table)
    assert all(len(r) == n and all(0 <= x < n for x in r) for r in table), name
    assert all(table[0][j] == j and table[j][0] == j for j in range(n)), f"{name}: identity"
    for a in range(n):
        assert any(table[a][b] == 0 for b in range(n)), f"{name}: inverse"
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert table[table[a][b]][c] == table[a][table[b][c]], f"{name}: assoc"


def elem_order(table, x):
    k, y = 1, x
    while y != 0:
        y = table[y][x]
        k += 1
    return k


def invariants(table):
    n = len(table)
    orders = sorted(elem_order(table, x) for x in range(n))
    abelian = all(table[a][b] == table[b][a] for a in range(n) for b in range(n))
    center = [x for x in range(n) if all(table[x][y] == table[y][x] for y in range(n))]
    cexp = lcm(*[elem_order(table, x) for x in center]) if center else 1
    squares = len({table[x][x] for x in range(n)})
    return (abelian, tuple(orders), len(center), cexp, squares)


def main():
    groups = [
        cyclic(1), cyclic(2), cyclic(3), cyclic(4), direct(cyclic(2), cyclic(2)),
        cyclic(5), cyclic(6), dihedral(3), cyclic(7),
        cyclic(8), direct(cyclic(4), cyclic(2)), direct(direct(cyclic(2), cyclic(2)), cyclic(2)),
        dihedral(4), dicyclic(2),
        cyclic(9), direct(cyclic(3), cyclic(3)),
        cyclic(10), dihedral(5), cyclic(11),
        cyclic(12), direct(cyclic(6), cyclic(2)), dihedral(6), a4(), dicyclic(3),
        cyclic(13), cyclic(14), dihedral(7), cyclic(15),
        cyclic(16), direct(cyclic(8), cyclic(2)), direct(cyclic(4), cyclic(4)),
        direct(direct(cyclic(4), cyclic(2)), cyclic(2)),
        direct(direct(direct(cyclic(2), cyclic(2)), cyclic(2)), cyclic(2)),
        dihedral(8), metacyclic16("sd16", 3), metacyclic16("m16", 5), dicyclic(4),
        direct(dihedral(4), cyclic(2)), direct(dicyclic(2), cyclic(2)),
        c4_s_c4(), c2c2_s_c4(), pauli16(),
    ]

    expected_counts = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2,
                       10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}
    by_order = {}
    for name, table in groups:
        table = reorder_identity_first(table)
        check_group(name, table)
        by_order.setdefault(len(table), []).append((name, table))

    for order, members in sorted(by_order.items()):
        assert len(members) == expected_counts[order], f"order {order}: {len(members)}"
        invs = [invariants(t) for _, t in members]
        assert len(set(invs)) == len(invs), f"order {order}: isomorphic duplicates"

    out = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                       "data", "groups")
    os.makedirs(out, exist_ok=True)
    for order, members in sorted(by_order.items()):
        for name, table in sorted(members):
            path = os.path.join(out, f"o{order:02d}_{name}.txt")
            with open(path, "w") as f:
                f.write(f"{order}\n")
                for row in table:
                    f.write(" ".join(str(x) for x in row) + "\n")
            print(path)
    print(f"{sum(len(m) for m in by_order.values())} group tables written")


if __name__ == "__main__":
    sys.exit(main())
