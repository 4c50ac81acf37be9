"""Schubert index bookkeeping for classical Grassmannians and partial flag varieties.

Six space kinds are supported: type-A Grassmannians G(k,n) and flag varieties
F(d_1,...,d_k;n), orthogonal Grassmannians OG(k,n) and flags OF(d_1,...,d_k;n),
and their symplectic analogues SG/SF.  Indices come in four shapes:

* plain        a_1 < ... < a_k                      (G)
* flagged      a_i with block labels alpha_i        (F)
* pair         (a_1..a_s | b_1..b_{k-s})            (OG, SG)
* flagged pair (a_i^alpha_i | b_j^beta_j)           (OF, SF)

b-sequences are always stored ascending.  Everything here is immutable and
pure; callers may share objects freely across threads.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations

from .errors import (
    EnumerationCapError,
    SpaceMismatchError,
    UnsupportedKindError,
    ValidationError,
)

DEFAULT_ENUM_CAP = 10 ** 6
ENUM_CAP_ENV = "SCHUBERT_ENUM_CAP"


class SpaceKind(Enum):
    GRASS_A = "G"
    FLAG_A = "F"
    GRASS_ORTH = "OG"
    FLAG_ORTH = "OF"
    GRASS_SYMP = "SG"
    FLAG_SYMP = "SF"

    @property
    def is_flag(self):
        return self in (SpaceKind.FLAG_A, SpaceKind.FLAG_ORTH, SpaceKind.FLAG_SYMP)

    @property
    def is_paired(self):
        """True for the kinds whose indices carry a co-condition (b) part."""
        return self in (
            SpaceKind.GRASS_ORTH,
            SpaceKind.FLAG_ORTH,
            SpaceKind.GRASS_SYMP,
            SpaceKind.FLAG_SYMP,
        )

    @property
    def is_orth(self):
        return self in (SpaceKind.GRASS_ORTH, SpaceKind.FLAG_ORTH)

    @property
    def is_symp(self):
        return self in (SpaceKind.GRASS_SYMP, SpaceKind.FLAG_SYMP)

    @property
    def is_type_a(self):
        return self in (SpaceKind.GRASS_A, SpaceKind.FLAG_A)


@dataclass(frozen=True)
class SpaceDescriptor:
    """Which variety indices live on: kind, step dimensions and ambient dimension."""

    kind: SpaceKind
    steps: tuple
    ambient: int
    component_choice: bool | None = None

    def __post_init__(self):
        problems = []
        if not self.steps:
            problems.append("space needs at least one step dimension")
        if any(d <= 0 for d in self.steps):
            problems.append("step dimensions must be positive")
        if any(x >= y for x, y in zip(self.steps, self.steps[1:])):
            problems.append("step dimensions must be strictly increasing")
        if self.ambient <= 0:
            problems.append("ambient dimension must be positive")
        if not self.kind.is_flag and len(self.steps) != 1:
            problems.append("%s takes a single step dimension" % self.kind.value)
        if problems:
            raise ValidationError(problems)
        d_k = self.steps[-1]
        if self.kind.is_type_a:
            if d_k > self.ambient:
                raise ValidationError(["d_k must not exceed the ambient dimension"])
        else:
            if d_k > self.ambient // 2:
                raise ValidationError(
                    ["isotropic step dimensions must not exceed floor(n/2)"]
                )
            if self.kind.is_symp and self.ambient % 2 != 0:
                raise ValidationError(["symplectic spaces need an even ambient dimension"])
        if self.component_choice is not None and not (
            self.kind.is_orth and self.ambient == 2 * d_k
        ):
            raise ValidationError(
                ["component_choice is only meaningful for OG/OF with n = 2 d_k"]
            )

    @property
    def blocks(self):
        """Number of flag steps (1 for plain Grassmannians)."""
        return len(self.steps)

    @property
    def top_step(self):
        return self.steps[-1]

    @property
    def half(self):
        return self.ambient // 2

    def block_sizes(self):
        prev = 0
        sizes = []
        for d in self.steps:
            sizes.append(d - prev)
            prev = d
        return tuple(sizes)

    def flag_dimension(self):
        """Dimension of the ambient type-A variety (G or F)."""
        if not self.kind.is_type_a:
            raise UnsupportedKindError(
                "no dimension formula implemented for %s spaces" % self.kind.value
            )
        dims = self.steps + (self.ambient,)
        return sum(dims[i] * (dims[i + 1] - dims[i]) for i in range(len(self.steps)))

    def render(self):
        if self.kind.is_flag:
            return "%s(%s;%d)" % (
                self.kind.value,
                ",".join(str(d) for d in self.steps),
                self.ambient,
            )
        return "%s(%d,%d)" % (self.kind.value, self.steps[0], self.ambient)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class SchubertIndex:
    """Tagged union of the four index shapes.

    ``alpha is None`` for unflagged shapes, ``b is None`` for type-A shapes.
    An empty-but-present ``b`` tuple (s = k) is distinct from ``b is None``.
    """

    a: tuple
    alpha: tuple | None = None
    b: tuple | None = None
    beta: tuple | None = None

    @property
    def flagged(self):
        return self.alpha is not None

    @property
    def paired(self):
        return self.b is not None

    @property
    def s(self):
        """Length of the isotropic (a) part."""
        return len(self.a)

    def a_entries(self):
        """(value, block) pairs for the a part; block is None when unflagged."""
        if self.alpha is None:
            return tuple((v, None) for v in self.a)
        return tuple(zip(self.a, self.alpha))

    def b_entries(self):
        if self.b is None:
            return ()
        if self.beta is None:
            return tuple((v, None) for v in self.b)
        return tuple(zip(self.b, self.beta))

    def render(self):
        def seq(values, blocks):
            if blocks is None:
                return ",".join(str(v) for v in values)
            return ",".join("%d^%d" % (v, t) for v, t in zip(values, blocks))

        if not self.paired:
            return seq(self.a, self.alpha)
        return "(%s|%s)" % (seq(self.a, self.alpha), seq(self.b, self.beta))

    def __str__(self):
        return self.render()

    def to_json(self):
        out = {"a": list(self.a)}
        if self.alpha is not None:
            out["alpha"] = list(self.alpha)
        if self.b is not None:
            out["b"] = list(self.b)
        if self.beta is not None:
            out["beta"] = list(self.beta)
        return out


def plain_index(a):
    return SchubertIndex(a=tuple(a))


def flagged_index(entries):
    """Build a FlaggedA index from (value, block) pairs."""
    entries = tuple(entries)
    return SchubertIndex(
        a=tuple(v for v, _ in entries), alpha=tuple(t for _, t in entries)
    )


def pair_index(a, b):
    return SchubertIndex(a=tuple(a), b=tuple(b))


def flagged_pair_index(a_entries, b_entries):
    a_entries = tuple(a_entries)
    b_entries = tuple(b_entries)
    return SchubertIndex(
        a=tuple(v for v, _ in a_entries),
        alpha=tuple(t for _, t in a_entries),
        b=tuple(v for v, _ in b_entries),
        beta=tuple(t for _, t in b_entries),
    )


def canonical_key(index):
    """Deterministic sort key: a-heavy indices first, then lexicographic."""
    return (
        len(index.b) if index.b is not None else 0,
        index.a,
        index.b or (),
        index.alpha or (),
        index.beta or (),
    )


def render_literal(space, index):
    return "%s @ %s" % (index.render(), space.render())


def index_to_json(space, index, valid=None, errors=None):
    out = {"space": space.render()}
    out.update(index.to_json())
    if valid is not None:
        out["valid"] = valid
    if errors is not None:
        out["errors"] = list(errors)
    return out


# ---------------------------------------------------------------------------
# validation


def _expected_shape(kind):
    if kind is SpaceKind.GRASS_A:
        return (False, False)
    if kind is SpaceKind.FLAG_A:
        return (True, False)
    if kind in (SpaceKind.GRASS_ORTH, SpaceKind.GRASS_SYMP):
        return (False, True)
    return (True, True)


def _strictly_increasing(seq):
    return all(x < y for x, y in zip(seq, seq[1:]))


def validate(space, index):
    """Report every violated invariant; an empty report means the index is valid."""
    problems = []
    want_flagged, want_paired = _expected_shape(space.kind)
    if index.flagged != want_flagged or index.paired != want_paired:
        problems.append(
            "index shape does not match space kind %s" % space.kind.value
        )
        return problems

    n = space.ambient
    k = space.blocks
    d_k = space.top_step

    if not _strictly_increasing(index.a):
        problems.append("a must be strictly increasing")
    if index.a and index.a[0] < 1:
        problems.append("a entries must be positive")

    if space.kind is SpaceKind.GRASS_A:
        if len(index.a) != d_k:
            problems.append("a must have length k=%d" % d_k)
        if index.a and index.a[-1] > n:
            problems.append("a entries must not exceed n=%d" % n)
        return problems

    if space.kind is SpaceKind.FLAG_A:
        if len(index.a) != d_k:
            problems.append("a must have length d_k=%d" % d_k)
        if index.a and index.a[-1] > n:
            problems.append("a entries must not exceed n=%d" % n)
        problems.extend(_check_blocks([index.alpha], space))
        return problems

    # paired kinds
    half = space.half
    if index.a and index.a[-1] > half:
        problems.append("a entries must not exceed floor(n/2)=%d" % half)
    if index.b:
        if not _strictly_increasing(index.b):
            problems.append("b must be strictly increasing")
        if index.b[0] < 0:
            problems.append("b entries must be nonnegative")
        if index.b[-1] > half - 1:
            problems.append("b entries must not exceed floor(n/2)-1=%d" % (half - 1))
    total = len(index.a) + len(index.b)
    if total != d_k:
        problems.append("a and b together must have length %d" % d_k)
    for a_i in index.a:
        for b_j in index.b:
            if a_i == b_j + 1:
                problems.append("a_i = b_j + 1 for a_i=%d, b_j=%d" % (a_i, b_j))
    if space.kind.is_orth and n == 2 * d_k:
        want = d_k % 2
        if space.component_choice is False:
            want = (d_k + 1) % 2
        if len(index.a) % 2 != want:
            problems.append(
                "s = %d violates the parity rule s = d_k (mod 2) for n = 2 d_k"
                % len(index.a)
            )
    if index.flagged:
        problems.extend(_check_blocks([index.alpha, index.beta], space))
    return problems


def _check_blocks(label_seqs, space):
    problems = []
    k = space.blocks
    counts = Counter()
    for labels in label_seqs:
        for t in labels or ():
            if not 1 <= t <= k:
                problems.append("block label %d outside 1..%d" % (t, k))
                return problems
            counts[t] += 1
    for t, size in enumerate(space.block_sizes(), start=1):
        if counts.get(t, 0) != size:
            problems.append(
                "block %d holds %d entries, expected d_%d - d_%d = %d"
                % (t, counts.get(t, 0), t, t - 1, size)
            )
    return problems


def check_valid(space, index):
    problems = validate(space, index)
    if problems:
        raise ValidationError(problems)
    return index


# ---------------------------------------------------------------------------
# dimension / duality / lambda notation (type A only)


def dimension(space, index):
    """Dimension of the Schubert variety; type-A kinds only."""
    if space.kind is SpaceKind.GRASS_A:
        return sum(a - i for i, a in enumerate(index.a, start=1))
    if space.kind is SpaceKind.FLAG_A:
        return _dim_flagged(space.steps, tuple(zip(index.a, index.alpha)))
    raise UnsupportedKindError(
        "no dimension formula implemented for %s indices" % space.kind.value
    )


def _dim_flagged(steps, entries):
    # dim = dim of the top projection image + dim of the generic fiber,
    # the fiber being the full sub-flag pattern (1,...,d_k) restricted to
    # the first k-1 blocks inside a d_k-dimensional ambient space.
    top = sum(a - i for i, (a, _) in enumerate(entries, start=1))
    if len(steps) == 1:
        return top
    sub = tuple((i, t) for i, (_, t) in enumerate(entries, start=1) if t <= len(steps) - 1)
    return top + _dim_flagged(steps[:-1], sub)


def dual(space, index):
    """Poincare dual index; an involution on type-A indices."""
    n = space.ambient
    if space.kind is SpaceKind.GRASS_A:
        return plain_index(tuple(n - a + 1 for a in reversed(index.a)))
    if space.kind is SpaceKind.FLAG_A:
        entries = tuple(
            (n - a + 1, t) for a, t in reversed(tuple(zip(index.a, index.alpha)))
        )
        return flagged_index(entries)
    raise UnsupportedKindError(
        "duality is only defined for type-A indices, not %s" % space.kind.value
    )


def lambda_notation(space, index):
    """Translate a G(k,n) index into the usual nonincreasing partition."""
    if space.kind is not SpaceKind.GRASS_A:
        raise UnsupportedKindError("lambda notation is defined for G(k,n) indices only")
    n, k = space.ambient, space.top_step
    return tuple(n - k + i - a for i, a in enumerate(index.a, start=1))


def index_from_lambda(space, lam):
    n, k = space.ambient, space.top_step
    return plain_index(tuple(n - k + i - l for i, l in enumerate(lam, start=1)))


# ---------------------------------------------------------------------------
# rank tables


@dataclass(frozen=True)
class RankTable:
    """mu / nu rank matrices plus the derived counters y, z, h and x.

    ``mu[i-1][t-1]`` counts a-entries with value <= a_i landing in blocks <= t.
    ``nu[j-1][t-1]`` is the co-condition rank for b_j at level t (flagged
    pairs only).  x_j counts a-entries with value <= b_j.
    """

    space: SpaceDescriptor
    index: SchubertIndex
    mu: tuple
    nu: tuple | None
    x: tuple | None

    def y(self, j, m):
        b_j = self.index.b[j - 1]
        return sum(
            1 for a_p, al in zip(self.index.a, self.index.alpha) if a_p > b_j and al <= m
        )

    def z(self, j, m):
        b_j = self.index.b[j - 1]
        return sum(
            1 for b_q, be in zip(self.index.b, self.index.beta) if b_q >= b_j and be <= m
        )

    def h(self, i, m):
        a_i = self.index.a[i - 1]
        return sum(
            1 for b_r, be in zip(self.index.b, self.index.beta) if b_r >= a_i and be <= m
        )


def rank_table(space, index):
    if not index.flagged:
        raise UnsupportedKindError("rank tables are defined for flagged indices")
    k = space.blocks
    a_entries = tuple(zip(index.a, index.alpha))
    mu = tuple(
        tuple(
            sum(1 for a_c, al in a_entries if a_c <= a_i and al <= t)
            for t in range(1, k + 1)
        )
        for a_i, _ in a_entries
    )
    nu = None
    x = None
    if index.paired:
        b_entries = tuple(zip(index.b, index.beta))
        nu = tuple(
            tuple(
                sum(1 for _, al in a_entries if al <= t)
                + sum(1 for b_e, be in b_entries if b_e >= b_j and be <= t)
                for t in range(1, k + 1)
            )
            for b_j, _ in b_entries
        )
        x = tuple(sum(1 for a_i in index.a if a_i <= b_j) for b_j in index.b)
    return RankTable(space=space, index=index, mu=mu, nu=nu, x=x)


def mu_value(index, i, t):
    """mu_{i,t} for a flagged index, 1-based arguments."""
    a_i = index.a[i - 1]
    return sum(1 for a_c, al in zip(index.a, index.alpha) if a_c <= a_i and al <= t)


# ---------------------------------------------------------------------------
# enumeration


def _binom(n, k):
    return math.comb(n, k) if 0 <= k <= n else 0


def _block_arrangements(space):
    """All distinct block-label sequences of length d_k honoring the block sizes."""
    labels = []
    for t, size in enumerate(space.block_sizes(), start=1):
        labels.extend([t] * size)
    return sorted(set(permutations(labels)))


def _count_upper_bound(space):
    n, k, d_k = space.ambient, space.blocks, space.top_step
    if space.kind is SpaceKind.GRASS_A:
        return _binom(n, d_k)
    if space.kind is SpaceKind.FLAG_A:
        mult = math.factorial(d_k)
        for size in space.block_sizes():
            mult //= math.factorial(size)
        return _binom(n, d_k) * mult
    half = space.half
    pairs = sum(_binom(half, s) * _binom(half, d_k - s) for s in range(d_k + 1))
    if space.kind in (SpaceKind.GRASS_ORTH, SpaceKind.GRASS_SYMP):
        return pairs
    mult = math.factorial(d_k)
    for size in space.block_sizes():
        mult //= math.factorial(size)
    return pairs * mult


def enumeration_cap():
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_ENUM_CAP


def enumerate_indices(space, cap=None):
    """Yield every valid index of ``space`` once, in canonical order.

    The guard compares a cheap upper bound on the raw count against the cap
    (env SCHUBERT_ENUM_CAP or 10^6), so it is conservative.
    """
    if cap is None:
        cap = enumeration_cap()
    bound = _count_upper_bound(space)
    if bound > cap:
        raise EnumerationCapError(
            "enumeration bound %d exceeds cap %d for %s" % (bound, cap, space.render())
        )
    return _enumerate(space)


def _enumerate(space):
    n, d_k = space.ambient, space.top_step
    if space.kind is SpaceKind.GRASS_A:
        for a in combinations(range(1, n + 1), d_k):
            yield plain_index(a)
        return
    if space.kind is SpaceKind.FLAG_A:
        arrangements = _block_arrangements(space)
        for a in combinations(range(1, n + 1), d_k):
            for labels in arrangements:
                yield SchubertIndex(a=a, alpha=labels)
        return
    half = space.half
    paired_flag = space.kind.is_flag
    arrangements = _block_arrangements(space) if paired_flag else None
    for s in range(d_k, -1, -1):
        for a in combinations(range(1, half + 1), s):
            for b in combinations(range(0, half), d_k - s):
                if paired_flag:
                    if not _paired_values_ok(space, a, b):
                        continue
                    for labels in arrangements:
                        idx = SchubertIndex(
                            a=a, alpha=labels[:s], b=b, beta=labels[s:]
                        )
                        if not validate(space, idx):
                            yield idx
                else:
                    candidate = pair_index(a, b)
                    if not validate(space, candidate):
                        yield candidate


def _paired_values_ok(space, a, b):
    for a_i in a:
        for b_j in b:
            if a_i == b_j + 1:
                return False
    if space.kind.is_orth and space.ambient == 2 * space.top_step:
        want = space.top_step % 2
        if space.component_choice is False:
            want = (space.top_step + 1) % 2
        if len(a) % 2 != want:
            return False
    return True


# ---------------------------------------------------------------------------
# formal nonnegative combinations


@dataclass(frozen=True)
class ChowClass:
    """Formal nonnegative-integer combination of Schubert indices over one space."""

    space: SpaceDescriptor
    terms: tuple = field(default_factory=tuple)  # ((index, coeff), ...) sorted

    MAX_COEFF = 2 ** 63 - 1

    @staticmethod
    def from_counter(space, counter):
        from .errors import CoefficientOverflowError

        items = []
        for index, coeff in counter.items():
            if coeff == 0:
                continue
            if coeff < 0:
                raise ValidationError(["coefficients must be nonnegative"])
            if coeff > ChowClass.MAX_COEFF:
                raise CoefficientOverflowError("coefficient exceeds 64-bit bound")
            items.append((index, coeff))
        items.sort(key=lambda item: canonical_key(item[0]))
        return ChowClass(space=space, terms=tuple(items))

    @staticmethod
    def single(space, index, coeff=1):
        return ChowClass.from_counter(space, {index: coeff})

    @staticmethod
    def zero(space):
        return ChowClass(space=space, terms=())

    def coefficient(self, index):
        for idx, coeff in self.terms:
            if idx == index:
                return coeff
        return 0

    def is_zero(self):
        return not self.terms

    def counter(self):
        return Counter({idx: c for idx, c in self.terms})

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join("%d·%s" % (c, idx.render()) for idx, c in self.terms)

    def __str__(self):
        return self.render()

    def to_json(self):
        return {
            "space": self.space.render(),
            "terms": [
                {"index": idx.to_json(), "coefficient": c} for idx, c in self.terms
            ],
        }


def add_classes(lhs, rhs):
    if lhs.space != rhs.space:
        raise SpaceMismatchError("cannot add classes over different spaces")
    total = lhs.counter()
    total.update(rhs.counter())
    return ChowClass.from_counter(lhs.space, total)
