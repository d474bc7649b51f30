"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Builds every linear system densely from the defining identities (evaluated on
basis triples with plain bracket evaluation, not from index formulas) and
computes ranks with sympy's exact DomainMatrix over QQ.  Run:

    python3 tests/oracles/leibniz_oracle.py
"""
import itertools
import sys
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


class Alg:
    def __init__(self, n, table):
        self.n = n
        self.t = table  # (i, j) -> {k: Fraction}

    def br(self, x, y):
        r = [Fraction(0)] * self.n
        for (i, j), terms in self.t.items():
            if x[i] and y[j]:
                for k, v in terms.items():
                    r[k] += x[i] * y[j] * v
        return r

    def opposite(self):
        return Alg(self.n, {(j, i): dict(v) for (i, j), v in self.t.items()})


def unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def add(*vs):
    return [sum(c) for c in zip(*vs)]


def neg(v):
    return [-a for a in v]


def rank(rows, ncols):
    if not rows:
        return 0
    m = DomainMatrix([[QQ(a.numerator, a.denominator) for a in r] for r in rows], (len(rows), ncols), QQ)
    return m.rank()


def linear_system(ncols, residual):
    """Collect the rows of a homogeneous system by probing a linear residual with unit vectors."""
    cols = [residual(unit(ncols, u)) for u in range(ncols)]
    nrows = len(cols[0]) if cols else 0
    return [[cols[u][r] for u in range(ncols)] for r in range(nrows)]


def lmap(n, vec):  # vec row-major: vec[r*n+c] = M[r][c]
    return lambda x: [sum(vec[r * n + c] * x[c] for c in range(n)) for r in range(n)]


def bil(n, vec):  # vec[(i*n+j)*n+k] = B^k_ij
    def f(x, y):
        out = [Fraction(0)] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                for k in range(n):
                    out[k] += x[i] * y[j] * vec[(i * n + j) * n + k]
        return out
    return f


def facts(L):
    n = L.n
    E = [unit(n, i) for i in range(n)]
    br = L.br
    out = {}
    out["left_violations"] = sum(
        1 for x, y, z in itertools.product(E, repeat=3)
        if br(x, br(y, z)) != add(br(y, br(x, z)), br(br(x, y), z)))
    leib_gens = [br(E[i], E[i]) for i in range(n)] + [add(br(E[i], E[j]), br(E[j], E[i])) for i in range(n) for j in range(n)]
    out["leib"] = rank(leib_gens, n)
    # left center: x with [x, e_j] = 0
    out["zl"] = n - rank(linear_system(n, lambda x: sum((br(x, e) for e in E), [])), n)
    out["z"] = n - rank(linear_system(n, lambda x: sum((br(x, e) + br(e, x) for e in E), [])), n)

    def der_res(vec):
        D = lmap(n, vec)
        return sum((add(D(br(x, y)), neg(br(D(x), y)), neg(br(x, D(y)))) for x in E for y in E), [])
    out["der"] = n * n - rank(linear_system(n * n, der_res), n * n)
    # inner: span of L_{e_i}
    inner = [[br(E[i], E[c])[r] for r in range(n) for c in range(n)] for i in range(n)]
    out["inner"] = rank(inner, n * n)

    def left_res(vec):
        B = bil(n, vec)
        return sum((add(B(x, br(y, z)), neg(br(B(x, y), z)), neg(br(y, B(x, z)))) for x in E for y in E for z in E), [])

    def right_res(vec):
        B = bil(n, vec)
        return sum((add(B(br(x, y), z), neg(br(x, B(y, z))), neg(br(B(x, z), y))) for x in E for y in E for z in E), [])

    def loday1_res(vec):
        B = bil(n, vec)
        return sum((add(B(br(x, y), z), neg(br(x, B(y, z))), br(y, B(x, z))) for x in E for y in E for z in E), [])

    N3 = n ** 3
    lrows = linear_system(N3, left_res)
    rrows = linear_system(N3, right_res)
    drows = linear_system(N3, loday1_res)
    out["left_bider"] = N3 - rank(lrows, N3)
    out["right_bider"] = N3 - rank(rrows, N3)
    out["bider"] = N3 - rank(lrows + rrows, N3)
    out["loday"] = N3 - rank(lrows + drows, N3)

    def comm_res(vec):
        g = lmap(n, vec)
        return sum((add(br(g(x), y), br(g(y), x)) + add(br(x, g(y)), br(y, g(x))) for x in E for y in E), [])

    def skew_res(vec):
        g = lmap(n, vec)
        return sum((add(br(g(x), y), neg(br(g(y), x))) for x in E for y in E), [])
    out["commuting"] = n * n - rank(linear_system(n * n, comm_res), n * n)
    out["skew_commuting"] = n * n - rank(linear_system(n * n, skew_res), n * n)
    return out


def table(n, entries):
    t = {}
    for (i, j, k, v) in entries:
        t.setdefault((i, j), {})[k] = Fraction(v)
    return Alg(n, t)


def sl2():  # h, e, f
    return table(3, [(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)])


def heisenberg():
    return table(3, [(0, 1, 2, 1), (1, 0, 2, -1)])


def solvable(n):  # listed (right) table, basis e1..en, x, y; normalised to left form
    X, Y = n, n + 1
    ent = [(0, 0, 2, 1)] + [(i - 1, 0, i, 1) for i in range(3, n)]
    ent += [(0, X, 0, 1), (X, 0, 0, -1), (1, Y, 1, 1)]
    ent += [(i - 1, X, i - 1, i - 1) for i in range(3, n + 1)]
    return table(n + 2, ent).opposite()


def nonabelian2():  # x, y
    return table(2, [(0, 1, 1, 1), (1, 0, 1, -1)])


def sec4_one():  # x, y, v
    return table(3, [(0, 1, 1, 1), (1, 0, 1, -1), (0, 2, 2, 1)])


def sec4_two():  # x, y, v, w
    return table(4, [(0, 1, 1, 1), (1, 0, 1, -1), (0, 2, 2, 1), (0, 3, 3, 1)])


def annihilator(rows, n):
    """Rows of a matrix whose kernel is exactly span(rows)."""
    if not rows or rank(rows, n) == 0:
        return [unit(n, i) for i in range(n)]
    m = DomainMatrix([[QQ(a.numerator, a.denominator) for a in r] for r in rows], (len(rows), n), QQ)
    ns = m.nullspace().to_Matrix()
    return [[Fraction(int(a.p), int(a.q)) for a in ns.row(r)] for r in range(ns.rows)]


def completeness(L):
    n = L.n
    E = [unit(n, i) for i in range(n)]
    br = L.br
    leib_gens = [br(E[i], E[i]) for i in range(n)] + [add(br(E[i], E[j]), br(E[j], E[i])) for i in range(n) for j in range(n)]
    ann = annihilator(leib_gens, n)
    pi = lambda v: [sum(a * b for a, b in zip(row, v)) for row in ann]
    dim_leib = rank(leib_gens, n)
    pre = n - rank(linear_system(n, lambda x: sum((pi(br(x, e)) + pi(br(e, x)) for e in E), [])), n)
    cond_a = pre == dim_leib

    def der_res(vec):
        D = lmap(n, vec)
        return sum((add(D(br(x, y)), neg(br(D(x), y)), neg(br(x, D(y)))) for x in E for y in E), [])
    rows = linear_system(n * n, der_res)
    m = DomainMatrix([[QQ(a.numerator, a.denominator) for a in r] for r in rows], (len(rows), n * n), QQ)
    ns = m.nullspace().to_Matrix()
    ders = [[Fraction(int(a.p), int(a.q)) for a in ns.row(r)] for r in range(ns.rows)]
    # pi o M flattened over columns
    def proj(vec):
        M = lmap(n, vec)
        return sum((pi(M(e)) for e in E), [])
    inner = [proj([br(E[i], E[c])[r] for r in range(n) for c in range(n)]) for i in range(n)]
    width = len(ann) * n
    r_inner = rank(inner, width) if width else 0
    r_all = rank(inner + [proj(d) for d in ders], width) if width else 0
    cond_b = r_inner == r_all
    f = facts(L) if n <= 5 else None
    z = n - rank(linear_system(n, lambda x: sum((br(x, e) + br(e, x) for e in E), [])), n)
    der = len(ders)
    inner_dim = rank([[br(E[i], E[c])[r] for r in range(n) for c in range(n)] for i in range(n)], n * n)
    return {"def1": cond_a and cond_b, "def1_a": cond_a, "def1_b": cond_b,
            "def2": z == 0 and der == inner_dim}


if __name__ == "__main__":
    cases = {
        "abelian0": Alg(0, {}),
        "abelian1": Alg(1, {}),
        "abelian2": Alg(2, {}),
        "abelian3": Alg(3, {}),
        "nonabelian2": nonabelian2(),
        "sl2": sl2(),
        "heisenberg": heisenberg(),
        "sec4_one": sec4_one(),
        "sec4_two": sec4_two(),
        "solvable4": solvable(4),
        "solvable5": solvable(5),
    }
    only = set(sys.argv[1:])
    for name, alg in cases.items():
        if only and name not in only:
            continue
        print(name, facts(alg), completeness(alg), flush=True)
