"""Independent test oracles, kept away from the production code paths.

* ``dim_by_rank_conditions``: Schubert-variety dimension as the sum of the
  slack a_i - mu_{i,alpha_i}, computed directly from the rank conditions.
* finite-field point counting: enumerate subspaces of F_p^n and count the
  points of a flag Schubert variety, to pin dimensions by coordinate-chart
  reasoning (the point count of a paved variety is a polynomial in p whose
  degree is the dimension).
"""
from __future__ import annotations

from itertools import combinations, product


def dim_by_rank_conditions(index):
    """Sum of a_i - mu_{i,alpha_i} over the entries of a flagged type-A index."""
    entries = list(zip(index.a, index.alpha))
    total = 0
    for a_i, al_i in entries:
        mu = sum(1 for a_c, al_c in entries if a_c <= a_i and al_c <= al_i)
        total += a_i - mu
    return total


# ---------------------------------------------------------------------------
# linear algebra over F_p, subspaces as frozensets of their vectors


def _vectors(p, n):
    return [tuple(v) for v in product(range(p), repeat=n)]


def span(p, vectors, n):
    """Frozenset of all linear combinations of the given vectors."""
    basis = []
    seen = {tuple([0] * n)}
    frontier = [tuple([0] * n)]
    for v in vectors:
        if v in seen:
            continue
        basis.append(v)
        new = []
        for w in seen:
            for c in range(1, p):
                u = tuple((w[i] + c * v[i]) % p for i in range(n))
                if u not in seen:
                    new.append(u)
        seen.update(new)
        frontier.extend(new)
    return frozenset(seen)


def subspaces(p, n, k):
    """All k-dimensional subspaces of F_p^n (as vector frozensets)."""
    vecs = [v for v in _vectors(p, n) if any(v)]
    out = set()
    for chosen in combinations(vecs, k):
        s = span(p, chosen, n)
        if len(s) == p ** k:
            out.add(s)
    return out


def subspace_dim(p, s):
    size = len(s)
    d = 0
    while p ** d < size:
        d += 1
    return d


def standard_flag(p, n):
    """F_1 < F_2 < ... < F_n spanned by the first basis vectors."""
    flags = []
    for d in range(1, n + 1):
        basis = []
        for i in range(d):
            v = [0] * n
            v[i] = 1
            basis.append(tuple(v))
        flags.append(span(p, basis, n))
    return flags


def count_flag_schubert_points(p, n, steps, entries):
    """Count F_p-points of the flag Schubert variety for (value, block) entries.

    Brute force over nested chains of subspaces with the stated step
    dimensions, testing every rank condition dim(F_{a_i} cap Lambda_j) >=
    mu_{i,j}.  Exponential in everything; fine for the desk-scale cases the
    tests use.
    """
    flag = standard_flag(p, n)
    mu = {}
    for i, (a_i, al_i) in enumerate(entries, start=1):
        for j in range(1, len(steps) + 1):
            mu[(i, j)] = sum(
                1 for a_c, al_c in entries if a_c <= a_i and al_c <= j
            )

    def intersection_dim(s1, s2):
        return subspace_dim(p, frozenset(s1) & frozenset(s2))

    def extend(chain, level):
        if level == len(steps):
            return 1
        d = steps[level]
        total = 0
        for candidate in subspaces(p, n, d):
            if chain and not chain[-1] <= candidate:
                continue
            ok = True
            for i, (a_i, al_i) in enumerate(entries, start=1):
                if al_i <= level + 1:
                    if intersection_dim(flag[a_i - 1], candidate) < mu[(i, level + 1)]:
                        ok = False
                        break
            if ok:
                total += extend(chain + [candidate], level + 1)
        return total

    return extend([], 0)
