"""Independent reference implementations used to cross-check the library.

Everything here is deliberately dumb and structurally different from the
package: plain Fraction arithmetic with divide-through row reduction (the
package kernel is fraction-free integer elimination), all-pairs fixpoint
iteration for Lie closures (the package schedules pairs exactly once), and
simultaneous-force rounds for zero forcing (the package applies one force
at a time).  Agreement between the two routes is the point.
"""

from fractions import Fraction
from itertools import combinations


class FractionBasis:
    """Row basis over the rationals, reduced the textbook way."""

    def __init__(self, ambient):
        self.ambient = ambient
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def insert(self, vec):
        v = [Fraction(x) for x in vec]
        assert len(v) == self.ambient
        for piv, row in zip(self.pivots, self.rows):
            if v[piv]:
                c = v[piv]
                v = [a - c * b for a, b in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = v[piv]
        v = [x / inv for x in v]
        for i, row in enumerate(self.rows):
            if row[piv]:
                c = row[piv]
                self.rows[i] = [a - c * b for a, b in zip(row, v)]
        pos = sum(1 for p in self.pivots if p < piv)
        self.rows.insert(pos, v)
        self.pivots.insert(pos, piv)
        return True


def frac_rank(rows):
    rows = list(rows)
    if not rows:
        return 0
    basis = FractionBasis(len(rows[0]))
    for row in rows:
        basis.insert(row)
    return basis.dim


def mat_mul(a, b):
    cols = list(zip(*b))
    return [[sum(Fraction(x) * Fraction(y) for x, y in zip(row, col)) for col in cols] for row in a]


def mat_sub(a, b):
    return [[Fraction(x) - Fraction(y) for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def mat_vec(a, v):
    return [sum(Fraction(x) * Fraction(y) for x, y in zip(row, v)) for row in a]


def flatten(m):
    return [x for row in m for x in row]


def basis_vec(j, n):
    return [Fraction(1 if i == j - 1 else 0) for i in range(n)]


def outer(u, v):
    return [[Fraction(a) * Fraction(b) for b in v] for a in u]


def walk_rank_bruteforce(a, members):
    """Rank of [z, Az, ..., A^{n-1}z, ...] by divide-through elimination."""
    n = len(a)
    cols = []
    for j in members:
        v = basis_vec(j, n)
        for _ in range(n):
            cols.append(list(v))
            v = mat_vec(a, v)
    return frac_rank(cols)


def pspan_dim_bruteforce(a, members):
    """Insert every literal product A^m (e_k e_j^T) A^l, no outer shortcut."""
    n = len(a)
    powers = [[[Fraction(1 if r == c else 0) for c in range(n)] for r in range(n)]]
    for _ in range(n - 1):
        powers.append(mat_mul(powers[-1], a))
    basis = FractionBasis(n * n)
    for k in members:
        for j in members:
            ekj = outer(basis_vec(k, n), basis_vec(j, n))
            for m in range(n):
                left = mat_mul(powers[m], ekj)
                for l in range(n):
                    basis.insert(flatten(mat_mul(left, powers[l])))
    return basis.dim


def lie_dim_bruteforce(gens):
    """All-pairs commutator fixpoint with plain Fraction arithmetic."""
    n = len(gens[0])
    basis = FractionBasis(n * n)
    elems = []
    for g in gens:
        g = [[Fraction(x) for x in row] for row in g]
        if basis.insert(flatten(g)):
            elems.append(g)
    changed = True
    while changed:
        changed = False
        for x in list(elems):
            for y in list(elems):
                c = mat_sub(mat_mul(x, y), mat_mul(y, x))
                if basis.insert(flatten(c)):
                    elems.append(c)
                    changed = True
    return basis.dim


def control_lie_dim_bruteforce(a, members):
    n = len(a)
    gens = [a]
    for j in members:
        gens.append(outer(basis_vec(j, n), basis_vec(j, n)))
    return lie_dim_bruteforce(gens)


def forcing_closure_bruteforce(adj, order, start):
    """Simultaneous-rounds forcing fixpoint (order-free route)."""
    black = set(start)
    while True:
        forced = set()
        for v in black:
            white = [w for w in adj[v] if w not in black]
            if len(white) == 1:
                forced.add(white[0])
        if not forced:
            return frozenset(black)
        black |= forced


def min_zfs_size_bruteforce(adj, order):
    vertices = range(1, order + 1)
    for k in range(1, order + 1):
        for cand in combinations(vertices, k):
            if len(forcing_closure_bruteforce(adj, order, cand)) == order:
                return k
    raise AssertionError("unreachable")
