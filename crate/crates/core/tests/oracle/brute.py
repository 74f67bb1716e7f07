"""Independent brute-force oracle used to freeze expected values in the Rust tests.

Everything here works from bases listed as frozensets of element indices and
recomputes ranks, connectivity, locked sets and facets from first principles.
Run: python3 brute.py
"""
from fractions import Fraction
from itertools import combinations
import json
import sympy


def rank(bases, X):
    return max(len(B & X) for B in bases)


def corank(bases, n, X):
    E = frozenset(range(n))
    r = rank(bases, E)
    return len(X) - r + rank(bases, E - X)


def subsets(S):
    S = sorted(S)
    for k in range(len(S) + 1):
        for c in combinations(S, k):
            yield frozenset(c)


def connected(rk, S):
    S = frozenset(S)
    if len(S) <= 1:
        return True
    total = rk(S)
    for X in subsets(S):
        if X and X != S and rk(X) + rk(S - X) == total:
            return False
    return True


def locked_sets(bases, n):
    E = frozenset(range(n))
    rk = lambda X: rank(bases, X)
    crk = lambda X: corank(bases, n, X)
    out = []
    for L in subsets(E):
        if not L or L == E:
            continue
        if rk(L) >= 2 and crk(E - L) >= 2 and connected(rk, L) and connected(crk, E - L):
            out.append(sorted(L))
    return out


def uniform(r, n):
    return [frozenset(c) for c in combinations(range(n), r)]


def from_nonbases(n, r, nonbases):
    nb = {frozenset(x) for x in nonbases}
    return [frozenset(c) for c in combinations(range(n), r) if frozenset(c) not in nb]


# M(K4) on ab,ac,ad,bc,bd,cd = 0..5
TRIANGLES = [(0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)]
MK4 = from_nonbases(6, 3, TRIANGLES)
W3 = from_nonbases(6, 3, TRIANGLES[1:])
Q6 = from_nonbases(6, 3, TRIANGLES[2:])
P6 = from_nonbases(6, 3, TRIANGLES[3:])
# a a' b b' c c' d d' = 0..7
V8 = from_nonbases(8, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 6, 7), (2, 3, 4, 5), (2, 3, 6, 7)])


def two_sum(b1, n1, p1, b2, n2, p2):
    m1 = [i for i in range(n1) if i != p1]
    m2 = [i for i in range(n2) if i != p2]
    idx1 = {e: k for k, e in enumerate(m1)}
    idx2 = {e: len(m1) + k for k, e in enumerate(m2)}
    out = set()
    for B1 in b1:
        for B2 in b2:
            if (p1 in B1) != (p2 in B2):
                out.add(frozenset([idx1[e] for e in B1 if e != p1] + [idx2[e] for e in B2 if e != p2]))
    return sorted(out, key=lambda s: sorted(s)), len(m1) + len(m2)


def affine_dim(vecs):
    if len(vecs) <= 1:
        return 0
    v0 = vecs[0]
    rows = [[a - b for a, b in zip(v, v0)] for v in vecs[1:]]
    return sympy.Matrix(rows).rank()


def facet_count(bases, n):
    vecs = [[1 if i in B else 0 for i in range(n)] for B in bases]
    dim = affine_dim(vecs)
    E = frozenset(range(n))
    tights = set()
    cands = [(frozenset([e]), 'ge0') for e in range(n)] + [(A, 'le') for A in subsets(E) if A]
    for A, kind in cands:
        if kind == 'ge0':
            t = frozenset(i for i, B in enumerate(bases) if next(iter(A)) not in B)
        else:
            r = rank(bases, A)
            t = frozenset(i for i, B in enumerate(bases) if len(B & A) == r)
        if affine_dim([vecs[i] for i in sorted(t)]) == dim - 1:
            tights.add(t)
    return dim, len(tights)


if __name__ == "__main__":
    res = {}
    for name, b, n in [("MK4", MK4, 6), ("W3", W3, 6), ("Q6", Q6, 6), ("P6", P6, 6),
                       ("U36", uniform(3, 6), 6), ("V8", V8, 8), ("U24", uniform(2, 4), 4)]:
        res[name] = {"bases": len(b), "ell": len(locked_sets(b, n)), "locked": locked_sets(b, n)}
    print(json.dumps({k: {"bases": v["bases"], "ell": v["ell"]} for k, v in res.items()}))
    print("MK4 locked", res["MK4"]["locked"])
    print("V8 locked", res["V8"]["locked"])
    print("MK4 facets (dim, count)", facet_count(MK4, 6))
    print("P6 facets", facet_count(P6, 6))
    print("V8 facets", facet_count(V8, 8))
    print("U12 facets", facet_count(uniform(1, 2), 2))
    # two sums of uniform matroids, basepoint = last element of each
    fixtures = []
    for n1 in range(3, 6):
        for r1 in range(1, n1):
            for n2 in range(3, 6):
                for r2 in range(1, n2):
                    b, n = two_sum(uniform(r1, n1), n1, n1 - 1, uniform(r2, n2), n2, n2 - 1)
                    fixtures.append((r1, n1, r2, n2, n, len(b), len(locked_sets(b, n))))
    print("TWO_SUMS", fixtures)
    b, n = two_sum(uniform(2, 3), 3, 2, uniform(2, 3), 3, 2)
    print("U23+U23", n, sorted(map(sorted, b)))
