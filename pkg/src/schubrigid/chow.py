"""Type-A Grassmannian Chow-ring engine: the ground-truth oracle.

Products run internally in partition (lambda) notation; Littlewood-Richardson
coefficients are computed by direct enumeration of LR skew tableaux, which is
exact and plenty fast at desk scale.  The fast zero-product criterion and the
special-class (Pieri chain) multiplication are exposed separately so that the
two routes can be cross-checked against each other.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import SpaceMismatchError, ValidationError
from .indices import (
    ChowClass,
    SpaceKind,
    check_valid,
    dimension,
    index_from_lambda,
    lambda_notation,
    plain_index,
)


def _require_grass(space):
    if space.kind is not SpaceKind.GRASS_A:
        raise SpaceMismatchError("Chow oracle operations need a G(k,n) space")


def is_zero_product(space, idx_a, idx_b):
    """True iff sigma_a . sigma_b = 0, i.e. a_i + b_{k-i+1} <= n for some i."""
    _require_grass(space)
    check_valid(space, idx_a)
    check_valid(space, idx_b)
    n, k = space.ambient, space.top_step
    return any(idx_a.a[i] + idx_b.a[k - i - 1] <= n for i in range(k))


def lr_coefficient(lam, mu, nu):
    """Littlewood-Richardson coefficient c^nu_{lam,mu} by tableau enumeration.

    Counts semistandard fillings of nu/lam with content mu whose reverse
    reading word is a lattice word.  Cells are visited row by row, right to
    left, which makes the lattice condition checkable incrementally.
    """
    lam = _strip(lam)
    mu = _strip(mu)
    nu = _strip(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    rows = len(nu)
    lam_padded = tuple(lam) + (0,) * (rows - len(lam))
    if any(l > v for l, v in zip(lam_padded, nu)):
        return 0
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, lam_padded[r] - 1, -1):
            cells.append((r, c))
    if not cells:
        return 1 if not mu else 0
    values = len(mu)
    grid = {}
    counts = [0] * (values + 1)
    remaining = list(mu)

    def place(pos):
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        lo, hi = 1, values
        right = grid.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        if r > 0 and c >= lam_padded[r - 1]:
            lo = max(lo, grid[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[(r, c)] = v
            counts[v] += 1
            remaining[v - 1] -= 1
            total += place(pos + 1)
            remaining[v - 1] += 1
            counts[v] -= 1
            del grid[(r, c)]
        return total

    return place(0)


def _strip(partition):
    out = list(partition)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _partitions_in_box(total, max_len, max_part):
    """All partitions of ``total`` with at most max_len parts, parts <= max_part."""

    def rec(total, max_part, slots):
        if total == 0:
            yield ()
            return
        if slots == 0:
            return
        top = min(total, max_part)
        for first in range(top, 0, -1):
            for rest in rec(total - first, first, slots - 1):
                yield (first,) + rest

    return rec(total, max_part, max_len)


def product_indices(space, idx_a, idx_b):
    """Schubert-basis expansion of sigma_a . sigma_b in G(k,n)."""
    _require_grass(space)
    check_valid(space, idx_a)
    check_valid(space, idx_b)
    n, k = space.ambient, space.top_step
    lam = lambda_notation(space, idx_a)
    mu = lambda_notation(space, idx_b)
    total = sum(lam) + sum(mu)
    out = Counter()
    if total > k * (n - k):
        return ChowClass.zero(space)
    for nu in _partitions_in_box(total, k, n - k):
        coeff = lr_coefficient(lam, mu, nu)
        if coeff:
            nu_full = tuple(nu) + (0,) * (k - len(nu))
            out[index_from_lambda(space, nu_full)] += coeff
    return ChowClass.from_counter(space, out)


def product(space, cls_a, cls_b):
    """Bilinear extension of ``product_indices`` to formal combinations."""
    if cls_a.space != space or cls_b.space != space:
        raise SpaceMismatchError("classes must live on the given space")
    out = Counter()
    for idx_a, c_a in cls_a.terms:
        for idx_b, c_b in cls_b.terms:
            for idx, c in product_indices(space, idx_a, idx_b).terms:
                out[idx] += c_a * c_b * c
    return ChowClass.from_counter(space, out)


@dataclass(frozen=True)
class PairingResult:
    value: int
    complementary: bool

    def to_json(self):
        return {"value": self.value, "complementary": self.complementary}


def pairing(space, idx_a, idx_b):
    """Coefficient of the point class in sigma_a . sigma_b.

    1 exactly when the indices are Poincare dual; value 0 with the
    ``complementary`` flag cleared when the dimensions do not add up.
    """
    _require_grass(space)
    n, k = space.ambient, space.top_step
    complementary = dimension(space, idx_a) + dimension(space, idx_b) == k * (n - k)
    if not complementary:
        return PairingResult(value=0, complementary=False)
    point = plain_index(tuple(range(1, k + 1)))
    value = product_indices(space, idx_a, idx_b).coefficient(point)
    return PairingResult(value=value, complementary=True)


def special_class(space, c):
    """The Schubert class sigma_{n-c+1, n-k+2, ..., n} used in Pieri chains."""
    n, k = space.ambient, space.top_step
    if not k <= c <= n:
        raise ValidationError(["pieri parameter c must satisfy k <= c <= n"])
    return plain_index((n - c + 1,) + tuple(range(n - k + 2, n + 1)))


def pieri_chain_class(space, idx, c):
    """Multiply sigma_idx by the special class for ``c`` via the Pieri rule.

    Horizontal-strip enumeration, independent of the LR engine.  At c = a_k
    the result collapses to the single index (1, a_1+1, ..., a_{k-1}+1); for
    c > a_k the product vanishes.
    """
    _require_grass(space)
    check_valid(space, idx)
    n, k = space.ambient, space.top_step
    special_class(space, c)  # range check
    m = c - k  # single-row partition being multiplied in
    lam = lambda_notation(space, idx)
    out = Counter()
    for nu in _horizontal_strips(lam, m, n - k):
        out[index_from_lambda(space, nu)] += 1
    return ChowClass.from_counter(space, out)


def _horizontal_strips(lam, m, max_part):
    """Partitions nu >= lam with nu/lam a horizontal m-strip inside the box."""
    k = len(lam)

    def rec(row, left):
        if row == k:
            if left == 0:
                yield ()
            return
        upper = max_part if row == 0 else lam[row - 1]
        lo = lam[row]
        for value in range(lo, min(upper, lo + left) + 1):
            for rest in rec(row + 1, left - (value - lo)):
                yield (value,) + rest

    for nu in rec(0, m):
        if all(x >= y for x, y in zip(nu, nu[1:])):
            yield nu


def chain_rule_index(space, idx):
    """Closed form of the c = a_k Pieri chain: (1, a_1+1, ..., a_{k-1}+1)."""
    return plain_index((1,) + tuple(a + 1 for a in idx.a[:-1]))

