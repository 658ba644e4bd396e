#!/usr/bin/env python3
"""Regenerate the bundled small-group catalog.

Every group of order 1..24 is built from a concrete construction (cyclic,
metacyclic, semidirect or direct product, matrix group) and written out as
generator permutations of its left-regular representation.  Indices follow
the SmallGroups library numbering so that catalog ids such as 8:3 or 18:4
mean the same group as in the literature.

Usage: gen_catalog.py <catalog.txt> <catalog_data.hpp>
"""

import sys


class Group:
    def __init__(self, gens, mul, identity):
        self.mul = mul
        self.identity = identity
        self.gens = [g for g in gens if g != identity]
        elems = [identity]
        seen = {identity}
        i = 0
        while i < len(elems):
            x = elems[i]
            for g in self.gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
            i += 1
        self.elems = elems


def cyclic(n):
    return Group([1 % n], lambda x, y: (x + y) % n, 0)


def metacyclic(m, n, r, t):
    """<a, b | a^m, b^n = a^t, b a b^-1 = a^r> with elements a^i b^j."""
    assert pow(r, n, m) == 1 % m and (r * t - t) % m == 0

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        i = (i1 + pow(r, j1, m) * i2) % m
        j = j1 + j2
        if j >= n:
            j -= n
            i = (i + t) % m
        return (i, j)

    return Group([(1 % m, 0), (0, 1 % n)], mul, (0, 0))


def direct(*factors):
    ident = tuple(f.identity for f in factors)

    def mul(x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(factors, x, y))

    gens = []
    for k, f in enumerate(factors):
        for g in f.gens:
            e = list(ident)
            e[k] = g
            gens.append(tuple(e))
    return Group(gens, mul, ident)


def semidirect(normal, top, act):
    """normal x| top where act(h, n) is the image of n under h."""
    ident = (normal.identity, top.identity)

    def mul(x, y):
        n1, h1 = x
        n2, h2 = y
        return (normal.mul(n1, act(h1, n2)), top.mul(h1, h2))

    gens = [(g, top.identity) for g in normal.gens]
    gens += [(normal.identity, h) for h in top.gens]
    return Group(gens, mul, ident)


def perms(points, gens):
    def compose(p, q):
        # apply q first, then p
        return tuple(p[q[i]] for i in range(points))

    ident = tuple(range(points))
    return Group([tuple(g) for g in gens], compose, ident)


def cycles_to_perm(points, cycles):
    p = list(range(points))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            p[a - 1] = b - 1
    return p


def matrices_mod(p, gens):
    def mul(x, y):
        (a, b), (c, d) = x
        (e, f), (g, h) = y
        return (((a * e + b * g) % p, (a * f + b * h) % p),
                ((c * e + d * g) % p, (c * f + d * h) % p))

    return Group(gens, mul, ((1, 0), (0, 1)))


def sym(n, cycle_gens):
    return perms(n, [cycles_to_perm(n, c) for c in cycle_gens])


def dihedral(order):
    return metacyclic(order // 2, 2, order // 2 - 1, 0) if order > 2 else cyclic(2)


def dicyclic(order):
    m = order // 2
    return metacyclic(m, 2, m - 1, m // 2)


def c(n):
    return cyclic(n)


S3 = sym(3, [[[1, 2, 3]], [[1, 2]]])
A4 = sym(4, [[[1, 2, 3]], [[1, 2], [3, 4]]])
S4 = sym(4, [[[1, 2, 3, 4]], [[1, 2]]])
D8 = dihedral(8)
Q8 = dicyclic(8)
DIC3 = metacyclic(3, 4, 2, 0)


def z4z2_action(image_of_a, image_of_b):
    def act(h, n):
        if h == 0:
            return n
        x, y = n
        ax, ay = image_of_a
        bx, by = image_of_b
        return ((x * ax + y * bx) % 4, (x * ay + y * by) % 2)

    return act


def c3_by_d8_kernel_klein():
    def act(h, n):
        i, _ = h
        return n if i % 2 == 0 else (-n) % 3

    return semidirect(c(3), D8, act)


CATALOG = {
    1: [("1", lambda: c(1))],
    2: [("C2", lambda: c(2))],
    3: [("C3", lambda: c(3))],
    4: [("C4", lambda: c(4)), ("C2 x C2", lambda: direct(c(2), c(2)))],
    5: [("C5", lambda: c(5))],
    6: [("S3", lambda: S3), ("C6", lambda: c(6))],
    7: [("C7", lambda: c(7))],
    8: [("C8", lambda: c(8)),
        ("C4 x C2", lambda: direct(c(4), c(2))),
        ("D8", lambda: D8),
        ("Q8", lambda: Q8),
        ("C2 x C2 x C2", lambda: direct(c(2), c(2), c(2)))],
    9: [("C9", lambda: c(9)), ("C3 x C3", lambda: direct(c(3), c(3)))],
    10: [("D10", lambda: dihedral(10)), ("C10", lambda: c(10))],
    11: [("C11", lambda: c(11))],
    12: [("C3 : C4", lambda: DIC3),
         ("C12", lambda: c(12)),
         ("A4", lambda: A4),
         ("D12", lambda: dihedral(12)),
         ("C6 x C2", lambda: direct(c(6), c(2)))],
    13: [("C13", lambda: c(13))],
    14: [("D14", lambda: dihedral(14)), ("C14", lambda: c(14))],
    15: [("C15", lambda: c(15))],
    16: [("C16", lambda: c(16)),
         ("C4 x C4", lambda: direct(c(4), c(4))),
         ("(C4 x C2) : C2", lambda: semidirect(
             direct(c(4), c(2)), c(2), z4z2_action((1, 1), (0, 1)))),
         ("C4 : C4", lambda: metacyclic(4, 4, 3, 0)),
         ("C8 x C2", lambda: direct(c(8), c(2))),
         ("C8 : C2", lambda: metacyclic(8, 2, 5, 0)),
         ("D16", lambda: dihedral(16)),
         ("QD16", lambda: metacyclic(8, 2, 3, 0)),
         ("Q16", lambda: dicyclic(16)),
         ("C4 x C2 x C2", lambda: direct(c(4), c(2), c(2))),
         ("C2 x D8", lambda: direct(c(2), D8)),
         ("C2 x Q8", lambda: direct(c(2), Q8)),
         ("(C4 x C2) : C2 central", lambda: semidirect(
             direct(c(4), c(2)), c(2), z4z2_action((1, 0), (2, 1)))),
         ("C2 x C2 x C2 x C2", lambda: direct(c(2), c(2), c(2), c(2)))],
    17: [("C17", lambda: c(17))],
    18: [("D18", lambda: dihedral(18)),
         ("C18", lambda: c(18)),
         ("C3 x S3", lambda: direct(c(3), S3)),
         ("(C3 x C3) : C2", lambda: semidirect(
             direct(c(3), c(3)), c(2),
             lambda h, n: n if h == 0 else ((-n[0]) % 3, (-n[1]) % 3))),
         ("C6 x C3", lambda: direct(c(6), c(3)))],
    19: [("C19", lambda: c(19))],
    20: [("C5 : C4", lambda: metacyclic(5, 4, 4, 0)),
         ("C20", lambda: c(20)),
         ("C5 : C4 faithful", lambda: metacyclic(5, 4, 2, 0)),
         ("D20", lambda: dihedral(20)),
         ("C10 x C2", lambda: direct(c(10), c(2)))],
    21: [("C7 : C3", lambda: metacyclic(7, 3, 2, 0)), ("C21", lambda: c(21))],
    22: [("D22", lambda: dihedral(22)), ("C22", lambda: c(22))],
    23: [("C23", lambda: c(23))],
    24: [("C3 : C8", lambda: metacyclic(3, 8, 2, 0)),
         ("C24", lambda: c(24)),
         ("SL(2,3)", lambda: matrices_mod(3, [((1, 1), (0, 1)), ((0, 2), (1, 0))])),
         ("C3 : Q8", lambda: dicyclic(24)),
         ("C4 x S3", lambda: direct(c(4), S3)),
         ("D24", lambda: dihedral(24)),
         ("C2 x (C3 : C4)", lambda: direct(c(2), DIC3)),
         ("(C6 x C2) : C2", c3_by_d8_kernel_klein),
         ("C12 x C2", lambda: direct(c(12), c(2))),
         ("C3 x D8", lambda: direct(c(3), D8)),
         ("C3 x Q8", lambda: direct(c(3), Q8)),
         ("S4", lambda: S4),
         ("C2 x A4", lambda: direct(c(2), A4)),
         ("C2 x C2 x S3", lambda: direct(c(2), c(2), S3)),
         ("C6 x C2 x C2", lambda: direct(c(6), c(2), c(2)))],
}


def regular_generators(group):
    index = {x: i for i, x in enumerate(group.elems)}
    out = []
    for g in group.gens:
        out.append([index[group.mul(g, x)] for x in group.elems])
    return out


def cycle_string(perm):
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + ",".join(cyc) + ")")
    return "".join(parts) if parts else "()"


def main(argv):
    lines = ["xmod-catalog 1"]
    for order in sorted(CATALOG):
        for index, (name, build) in enumerate(CATALOG[order], start=1):
            group = build()
            assert len(group.elems) == order, (order, index, name, len(group.elems))
            gens = regular_generators(group) or [list(range(order))]
            cells = [cycle_string(p) for p in gens]
            lines.append(f"{order} {index} {name} | " + " | ".join(cells))
    text = "\n".join(lines) + "\n"
    with open(argv[1], "w") as f:
        f.write(text)
    with open(argv[2], "w") as f:
        f.write("// Generated by tools/gen_catalog.py; do not edit.\n")
        f.write("#pragma once\n\n")
        f.write("namespace xmod::detail {\n\n")
        f.write("inline constexpr const char* kBundledCatalog = R\"catalog(")
        f.write(text)
        f.write(")catalog\";\n\n}  // namespace xmod::detail\n")


if __name__ == "__main__":
    main(sys.argv)
