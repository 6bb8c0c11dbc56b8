"""Mod-2 decomposition matrices of small symmetric groups, from scratch.

Builds each Specht module inside its permutation module over GF(2), takes the
quotient by its intersection with its orthogonal complement, and reads Brauer
characters off the fixed-point dimensions of the odd-order elements.  Ordinary
characters come from the Murnaghan-Nakayama rule on beta-sets.  Nothing from
the package under test is imported.

Only n <= 5 is supported: the odd cycle types there are 1^n, (3,1^(n-3)) and
(5), whose Brauer character values are determined by fixed-point counts.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def two_regular(lam):
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1))


# GF(2) linear algebra on int bitmasks

def reduce_basis(vectors):
    """Echelon basis (dict pivot -> vector) of the span."""
    basis = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return basis


def rank(vectors):
    return len(reduce_basis(vectors))


def nullspace(rows, ncols):
    """Basis of {c : row . c = 0 for every row}, vectors as bitmasks over ncols."""
    pivots = {}
    for r in rows:
        for col, pr in pivots.items():
            if r >> col & 1:
                r ^= pr
        if r:
            col = r.bit_length() - 1
            for c2 in list(pivots):
                if pivots[c2] >> col & 1:
                    pivots[c2] ^= r
            pivots[col] = r
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = 1 << f
        for col, pr in pivots.items():
            if pr >> f & 1:
                v |= 1 << col
        out.append(v)
    return out


def dot(u, v):
    return bin(u & v).count("1") & 1


# Specht modules over GF(2)

def tabloids(lam):
    n = sum(lam)
    rows = []
    for perm in permutations(range(n)):
        t, k = [], 0
        for part in lam:
            t.append(frozenset(perm[k:k + part]))
            k += part
        rows.append(tuple(t))
    return sorted(set(rows), key=lambda t: [sorted(r) for r in t])


def specht_pieces(lam):
    n = sum(lam)
    tabs = tabloids(lam)
    index = {t: i for i, t in enumerate(tabs)}
    cols = [sum(1 for part in lam if part > j) for j in range(lam[0])] if lam else []

    def polytabloid(filling):
        # filling[r][c]; sum over column permutations (signs vanish mod 2)
        vec = 0
        col_entries = [[filling[r][c] for r in range(cols[c])] for c in range(len(cols))]
        choices = [list(permutations(entries)) for entries in col_entries]

        def rec(c, current):
            nonlocal vec
            if c == len(cols):
                rowsets = tuple(frozenset(current[r][cc] for cc in range(lam[r]))
                                for r in range(len(lam)))
                vec ^= 1 << index[rowsets]
                return
            for ch in choices[c]:
                for r in range(cols[c]):
                    current[r][c] = ch[r]
                rec(c + 1, current)

        rec(0, [list(row) for row in filling])
        return vec

    spanning = []
    for perm in permutations(range(n)):
        filling, k = [], 0
        for part in lam:
            filling.append(list(perm[k:k + part]))
            k += part
        spanning.append(polytabloid(filling))
    basis = list(reduce_basis(spanning).values())
    gram = [sum(dot(bi, bj) << j for j, bj in enumerate(basis)) for bi in basis]
    radical = []
    for c in nullspace(gram, len(basis)):
        v = 0
        for j, bj in enumerate(basis):
            if c >> j & 1:
                v ^= bj
        radical.append(v)
    return tabs, index, basis, radical


def act(g, vec, tabs, index):
    out = 0
    i = 0
    while vec:
        if vec & 1:
            t = tabs[i]
            out ^= 1 << index[tuple(frozenset(g[x] for x in row) for row in t)]
        vec >>= 1
        i += 1
    return out


def fixed_dim(g, basis, tabs, index):
    images = [act(g, b, tabs, index) ^ b for b in basis]
    return len(basis) - rank(images)


def cycle_element(n, cycle_type):
    g, k = list(range(n)), 0
    for length in cycle_type:
        for j in range(length):
            g[k + j] = k + (j + 1) % length
        k += length
    return tuple(g)


def odd_classes(n):
    """Cycle types of the odd-order elements, up to n = 5."""
    if n > 5:
        raise ValueError("only n <= 5 is supported")
    out = [(1,) * n]
    if n >= 3:
        out.append((3,) + (1,) * (n - 3))
    if n == 5:
        out.append((5,))
    return out


def brauer_character(lam):
    n = sum(lam)
    if n == 0:
        return {(): 1}
    tabs, index, basis, radical = specht_pieces(lam)
    d = len(basis) - len(radical)
    out = {}
    for ctype in odd_classes(n):
        g = cycle_element(n, ctype)
        a = fixed_dim(g, basis, tabs, index) - fixed_dim(g, radical, tabs, index)
        order = max(ctype)
        if order == 1:
            out[ctype] = Fraction(d)
        elif order == 3:
            out[ctype] = a - Fraction(d - a, 2)
        else:
            out[ctype] = a - Fraction(d - a, 4)
    return out


# ordinary characters

def mn_character(lam, ctype):
    if not ctype:
        return 1
    r, rest = ctype[0], ctype[1:]
    h = len(lam)
    beta = {lam[i] + h - 1 - i for i in range(h)}
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beta:
            continue
        sign = (-1) ** sum(1 for x in beta if t < x < b)
        new_beta = sorted((beta - {b}) | {t}, reverse=True)
        k = len(new_beta)
        mu = tuple(x for x in (new_beta[i] - (k - 1 - i) for i in range(k)) if x > 0)
        total += sign * mn_character(mu, rest)
    return total


def solve(matrix, rhs):
    m = [row[:] + [r] for row, r in zip(matrix, rhs)]
    size = len(m)
    for c in range(size):
        piv = next(r for r in range(c, size) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for r in range(size):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][-1] / m[i][i] for i in range(size)]


def decomposition_matrix(n):
    """dict (lam, mu) -> d for every lam |- n and 2-regular mu |- n."""
    classes = odd_classes(n)
    regular = [mu for mu in partitions(n) if two_regular(mu)]
    phis = {mu: brauer_character(mu) for mu in regular}
    matrix = [[phis[mu][c] for mu in regular] for c in classes]
    out = {}
    for lam in partitions(n):
        chi = [Fraction(mn_character(lam, c)) for c in classes]
        ds = solve(matrix, chi)
        for mu, d in zip(regular, ds):
            if d.denominator != 1 or d < 0:
                raise ArithmeticError(f"non-integral decomposition number at {lam}, {mu}: {d}")
            out[lam, mu] = int(d)
    return out


def fmt(lam):
    return ",".join(map(str, lam)) if lam else "()"


def decomp_file_text(n):
    d = decomposition_matrix(n)
    lines = ["# mod-2 decomposition numbers, GF(2) Specht-module construction",
             "p 2", f"n {n}"]
    for lam in partitions(n):
        pairs = [f"D {fmt(mu)}:{v}" for (l2, mu), v in d.items() if l2 == lam and v]
        lines.append(f"S {fmt(lam)} | " + "; ".join(pairs))
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    import sys
    for n in range(int(sys.argv[1]) + 1 if len(sys.argv) > 1 else 6):
        print(decomp_file_text(n))
