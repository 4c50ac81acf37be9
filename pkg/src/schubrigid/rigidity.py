"""Essential / rigid sub-index classification and class-level rigidity verdicts.

The criteria used here:

* Grassmannian sub-indices: the four-clause rigidity test, with sentinels
  a_0 = 0 and a_{k+1} = infinity.
* Type-A flags: a closed-form clause list per sub-index, cross-checked (see
  the test suite) against the projection definition "rigid in some
  push-forward at a level >= the entry's block".
* Class-level flag rigidity: all essential sub-indices rigid and the
  essential set totally ordered under the compatibility relation.  The level
  threshold in the relation is max(alpha_i, alpha_j); the published min
  reading is available behind ``paper_literal=True`` for comparison runs.
* Orthogonal Grassmannians: the exact clause tests, with (n-3)/2 evaluated
  in exact rational arithmetic (for even n the equality clause can never
  hold, which is the literal reading).
* Orthogonal flags: rigidity propagates along the value-equality /
  containment relation (written ``=>`` here), and the class verdict combines
  per-entry rigidity with a total-order check on the essential set.
* Symplectic spaces: sufficient conditions only; everything else reports
  "unknown" (None) rather than guessing.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf

from .errors import (
    NonEssentialSubIndexError,
    UnsupportedKindError,
    ValidationError,
)
from .indices import SchubertIndex, SpaceDescriptor, SpaceKind, check_valid
from .projections import pushforward_flag, pushforward_pair_flag, target_space


# ---------------------------------------------------------------------------
# sub-index references and report types


@dataclass(frozen=True)
class SubIndexRef:
    side: str  # "a" or "b"
    position: int  # 1-based into the ascending stored sequence
    value: int
    block: int | None = None

    def key(self):
        return (self.side, self.position)

    def __str__(self):
        tag = "%s%d" % (self.side, self.position)
        if self.block is not None:
            return "%s(=%d^%d)" % (tag, self.value, self.block)
        return "%s(=%d)" % (tag, self.value)

    def to_json(self):
        out = {"side": self.side, "position": self.position, "value": self.value}
        if self.block is not None:
            out["block"] = self.block
        return out


def make_refs(index):
    refs = []
    for i, (value, block) in enumerate(index.a_entries(), start=1):
        refs.append(SubIndexRef("a", i, value, block))
    for j, (value, block) in enumerate(index.b_entries(), start=1):
        refs.append(SubIndexRef("b", j, value, block))
    return tuple(refs)


def find_ref(index, side, position):
    for ref in make_refs(index):
        if ref.side == side and ref.position == position:
            return ref
    raise ValidationError(["no sub-index %s%d in %s" % (side, position, index)])


@dataclass(frozen=True)
class RelationEdge:
    source: SubIndexRef
    target: SubIndexRef
    level: int | None = None  # witnessing projection level, None for value edges

    def to_json(self):
        out = {"from": self.source.to_json(), "to": self.target.to_json()}
        if self.level is not None:
            out["t"] = self.level
        return out


@dataclass(frozen=True)
class RelationReport:
    elements: tuple  # the essential refs the relation is defined on
    edges: tuple
    closure: frozenset  # transitively closed set of (key, key) pairs
    totally_ordered: bool
    strict: bool

    def related(self, source, target):
        return (source.key(), target.key()) in self.closure

    def to_json(self):
        return {
            "edges": [e.to_json() for e in self.edges],
            "totally_ordered": self.totally_ordered,
            "strict": self.strict,
        }


def _close_and_grade(elements, edges):
    keys = [ref.key() for ref in elements]
    closure = {(e.source.key(), e.target.key()) for e in edges}
    changed = True
    while changed:
        changed = False
        for x, y in list(closure):
            for y2, z in list(closure):
                if y == y2 and (x, z) not in closure:
                    closure.add((x, z))
                    changed = True
    totally = all(
        (p, q) in closure or (q, p) in closure
        for idx, p in enumerate(keys)
        for q in keys[idx + 1 :]
    )
    strict = all((q, p) not in closure for p, q in closure if p != q) and all(
        (p, p) not in closure for p in keys
    )
    return RelationReport(
        elements=tuple(elements),
        edges=tuple(edges),
        closure=frozenset(closure),
        totally_ordered=totally,
        strict=strict,
    )


@dataclass(frozen=True)
class SubIndexVerdict:
    ref: SubIndexRef
    essential: bool
    rigid: bool | None  # None: undefined (non-essential) or unknown (type C)
    witness: tuple = ()

    def to_json(self):
        out = {
            "ref": self.ref.to_json(),
            "essential": self.essential,
            "rigid": self.rigid,
        }
        if self.witness:
            out["witness"] = _witness_json(self.witness)
        return out


def _witness_json(witness):
    kind, payload = witness
    if kind == "levels":
        return {"levels": list(payload)}
    if kind == "chain":
        chain, level = payload
        return {"chain": [ref.to_json() for ref in chain], "level": level}
    return {"note": payload}


@dataclass(frozen=True)
class RigidityVerdict:
    space: SpaceDescriptor
    index: SchubertIndex
    subs: tuple
    class_rigid: bool | None
    relation: RelationReport | None = None
    notes: tuple = ()

    def sub(self, side, position):
        for verdict in self.subs:
            if verdict.ref.side == side and verdict.ref.position == position:
                return verdict
        raise ValidationError(["no sub-index %s%d" % (side, position)])

    def essential_refs(self):
        return tuple(v.ref for v in self.subs if v.essential)

    def to_json(self):
        out = {
            "space": self.space.render(),
            "index": self.index.to_json(),
            "essential": [v.ref.to_json() for v in self.subs if v.essential],
            "rigid": [v.ref.to_json() for v in self.subs if v.rigid],
            "witness": [
                dict(_witness_json(v.witness), ref=v.ref.to_json())
                for v in self.subs
                if v.witness
            ],
            "class_rigid": self.class_rigid,
        }
        if self.relation is not None:
            out["relation"] = self.relation.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# ---------------------------------------------------------------------------
# essential sub-indices


def essential_grass(space, index):
    """Positions i with i = k or a_i < a_{i+1} - 1."""
    check_valid(space, index)
    k = len(index.a)
    return {
        i
        for i in range(1, k + 1)
        if i == k or index.a[i - 1] < index.a[i] - 1
    }


def essential_orthgrass(space, index):
    """Essential keys for an OG(k,n) pair, per the three a-side clauses."""
    check_valid(space, index)
    n = space.ambient
    s = index.s
    keys = set()
    for i in range(1, s + 1):
        if i < s:
            if index.a[i - 1] < index.a[i] - 1:
                keys.add(("a", i))
        else:
            if n % 2 == 1:
                keys.add(("a", i))
            elif not index.b:
                # even n with no co-condition: treated like the odd-n clause
                keys.add(("a", i))
            elif index.a[s - 1] + index.b[-1] != n - 2:
                keys.add(("a", i))
    for j in range(1, len(index.b) + 1):
        if j == 1 or index.b[j - 1] != index.b[j - 2] + 1:
            keys.add(("b", j))
    return keys


def essential_symp_pair(space, index):
    """Reporting convention for SG pairs: rank condition not implied by neighbors.

    The rigidity results for type C are sufficient conditions only; this set
    never feeds a rigidity conclusion by itself.
    """
    check_valid(space, index)
    s = index.s
    keys = set()
    for i in range(1, s + 1):
        if i == s or index.a[i - 1] < index.a[i] - 1:
            keys.add(("a", i))
    for j in range(1, len(index.b) + 1):
        if j == 1 or index.b[j - 1] != index.b[j - 2] + 1:
            keys.add(("b", j))
    return keys


def _as_flag_space(space):
    """View G(k,n) as the single-step flag F(k;n) for the projection machinery."""
    if space.kind is SpaceKind.GRASS_A:
        return SpaceDescriptor(kind=SpaceKind.FLAG_A, steps=space.steps, ambient=space.ambient)
    return space


def _as_flagged(space, index):
    if space.kind is SpaceKind.GRASS_A:
        return _as_flag_space(space), SchubertIndex(
            a=index.a, alpha=(1,) * len(index.a)
        )
    return space, index


def essential_flag_positions(space, index):
    """FlaggedA essential positions via the three-clause characterization."""
    check_valid(space, index)
    d_k = len(index.a)
    out = set()
    for i in range(1, d_k + 1):
        if i == d_k:
            out.add(i)
        elif index.a[i - 1] < index.a[i] - 1:
            out.add(i)
        elif index.alpha[i - 1] < index.alpha[i]:
            out.add(i)
    return out


def _image_entry_positions(index, t):
    """Positions of the entries surviving pi_t, per side, in image order."""
    a_kept = [i for i, al in enumerate(index.alpha, start=1) if al <= t]
    b_kept = [j for j, be in enumerate(index.beta or (), start=1) if be <= t]
    return a_kept, b_kept


def _essential_in_pushforward(space, index, ref, t):
    """Is ``ref`` (present at level t) essential in the t-th push-forward?"""
    upper = ref.block
    if upper is None or upper > t:
        return False
    if space.kind is SpaceKind.FLAG_A:
        image = pushforward_flag(space, index, t)
        a_kept, _ = _image_entry_positions(index, t)
        pos = a_kept.index(ref.position) + 1
        return pos in essential_grass(target_space(space, t), image)
    image = pushforward_pair_flag(space, index, t)
    a_kept, b_kept = _image_entry_positions(index, t)
    if ref.side == "a":
        pos = a_kept.index(ref.position) + 1
    else:
        pos = b_kept.index(ref.position) + 1
    tgt = target_space(space, t)
    if space.kind is SpaceKind.FLAG_ORTH:
        keys = essential_orthgrass(tgt, image)
    else:
        keys = essential_symp_pair(tgt, image)
    return (ref.side, pos) in keys


def essential_flag(space, index):
    """Essential keys for any flagged kind.

    FlaggedA uses the closed form; flagged pairs test essentialness of the
    image entry across all levels at which the entry survives.
    """
    check_valid(space, index)
    if space.kind is SpaceKind.FLAG_A:
        return {("a", i) for i in essential_flag_positions(space, index)}
    if space.kind not in (SpaceKind.FLAG_ORTH, SpaceKind.FLAG_SYMP):
        raise UnsupportedKindError("essential_flag needs a flagged index")
    keys = set()
    k = space.blocks
    for ref in make_refs(index):
        if any(
            _essential_in_pushforward(space, index, ref, t)
            for t in range(ref.block, k + 1)
        ):
            keys.add(ref.key())
    return keys


# ---------------------------------------------------------------------------
# rigid sub-indices, type A


def rigid_subindex_grass(space, index, i):
    """Four-clause Grassmannian test; ``i`` must be essential."""
    if i not in essential_grass(space, index):
        raise NonEssentialSubIndexError("a%d" % i)
    a = index.a
    k = len(a)
    a_prev = a[i - 2] if i >= 2 else 0
    a_next = a[i] if i < k else inf
    return i == k or a[i - 1] == i or a[i - 1] <= a_next - 3 or a[i - 1] == a_prev + 1


def _flag_clause_rigid(index, i):
    """Closed-form flag rigidity clauses with sentinels a_0 = 0, a_{d_k+1} = inf."""
    a = index.a
    alpha = index.alpha
    d_k = len(a)

    def value(p):
        if p == 0:
            return 0
        if p > d_k:
            return inf
        return a[p - 1]

    def block(p):
        if p == 0:
            return 0
        if p > d_k:
            return len(set(alpha)) + d_k  # sentinel; unreachable behind the inf gap
        return alpha[p - 1]

    gap = value(i + 1) - value(i)
    if gap >= 3:
        return True
    if gap == 2:
        return value(i) - value(i - 1) == 1 or block(i) < block(i + 1)
    # gap == 1
    if value(i + 2) - value(i) >= 3:
        return True
    if block(i + 2) > block(i):
        return True
    return value(i - 1) == value(i) - 1 and block(i - 1) < block(i + 1)


def rigid_subindex_flag(space, index, i):
    """(verdict, witness levels) for an essential flag sub-index.

    The verdict is the closed-form clause evaluation; the levels list every
    t >= alpha_i at which the entry is rigid in the t-th push-forward.  The
    two computations agree (exhaustively tested).
    """
    flag_space, flagged = _as_flagged(space, index)
    if i not in essential_flag_positions(flag_space, flagged):
        raise NonEssentialSubIndexError("a%d" % i)
    verdict = _flag_clause_rigid(flagged, i)
    levels = rigid_levels_flag(flag_space, flagged, i)
    return verdict, tuple(levels)


def rigid_levels_flag(space, index, i):
    """Levels t >= alpha_i at which a_i is essential and rigid in pi_t."""
    levels = []
    k = space.blocks
    ref = find_ref(index, "a", i)
    for t in range(index.alpha[i - 1], k + 1):
        if not _essential_in_pushforward(space, index, ref, t):
            continue
        image = pushforward_flag(space, index, t)
        a_kept, _ = _image_entry_positions(index, t)
        pos = a_kept.index(i) + 1
        if rigid_subindex_grass(target_space(space, t), image, pos):
            levels.append(t)
    return levels


def relation_flag(space, index, paper_literal=False):
    """Compatibility relation on the essential sub-indices of a type-A flag class.

    Edge a_i -> a_j (i < j) when a_j is essential in some push-forward at a
    level >= max(alpha_i, alpha_j); ``paper_literal`` restores min.
    """
    flag_space, flagged = _as_flagged(space, index)
    essentials = sorted(essential_flag_positions(flag_space, flagged))
    refs = {i: find_ref(flagged, "a", i) for i in essentials}
    k = flag_space.blocks
    edges = []
    for i in essentials:
        for j in essentials:
            if i >= j:
                continue
            thr = (min if paper_literal else max)(
                flagged.alpha[i - 1], flagged.alpha[j - 1]
            )
            level = _first_essential_level(flag_space, flagged, refs[j], thr)
            if level is not None:
                edges.append(RelationEdge(refs[i], refs[j], level))
    return _close_and_grade([refs[i] for i in essentials], edges)


def _first_essential_level(space, index, ref, threshold):
    k = space.blocks
    for t in range(max(threshold, ref.block), k + 1):
        if _essential_in_pushforward(space, index, ref, t):
            return t
    return None


def rigid_class_flag(space, index, paper_literal=False):
    """Class verdict for G(k,n) and F(d;n): all essential rigid + total order."""
    flag_space, flagged = _as_flagged(space, index)
    check_valid(flag_space, flagged)
    essentials = essential_flag_positions(flag_space, flagged)
    subs = []
    for ref in make_refs(flagged):
        if ref.position in essentials:
            verdict, levels = rigid_subindex_flag(flag_space, flagged, ref.position)
            subs.append(
                SubIndexVerdict(ref, True, verdict, ("levels", levels) if levels else ())
            )
        else:
            subs.append(SubIndexVerdict(ref, False, None))
    relation = relation_flag(flag_space, flagged, paper_literal)
    all_rigid = all(v.rigid for v in subs if v.essential)
    return RigidityVerdict(
        space=space,
        index=index,
        subs=tuple(subs),
        class_rigid=all_rigid and relation.totally_ordered,
        relation=relation,
    )


# ---------------------------------------------------------------------------
# rigid sub-indices, orthogonal Grassmannians


def _bound(n, k, j, b_j):
    return k - j + b_j - Fraction(n - 3, 2)


def _count_a_below(index, value):
    return sum(1 for a in index.a if a <= value)


def _a_side_not_rigid(space, index, i):
    """The two published non-rigidity clauses for an a-side entry."""
    n = space.ambient
    k = space.top_step
    a = index.a
    s = index.s
    a_i = a[i - 1]
    if a_i in index.b:
        j = index.b.index(a_i) + 1
        if Fraction(_count_a_below(index, a_i)) == _bound(n, k, j, a_i):
            return True
        return False
    if i >= s:
        # no following isotropic gap to compare against; only the value
        # clause above can disqualify the last entry
        return False
    a_prev = a[i - 2] if i >= 2 else 0
    between = sum(1 for b in index.b if a_i < b < a[i])
    return a_i - a_prev >= 2 and a[i] - a_i == 2 + between


def rigid_subindex_orthgrass(space, index, ref):
    """Exact clause evaluation for an essential OG sub-index."""
    check_valid(space, index)
    keys = essential_orthgrass(space, index)
    if ref.key() not in keys:
        raise NonEssentialSubIndexError(ref)
    n = space.ambient
    k = space.top_step
    if ref.side == "a":
        return not _a_side_not_rigid(space, index, ref.position)
    j = ref.position
    b_j = index.b[j - 1]
    if b_j == 0:
        return True
    for j2 in range(j, len(index.b) + 1):
        b_val = index.b[j2 - 1]
        if b_val in index.a and Fraction(_count_a_below(index, b_val)) > _bound(
            n, k, j2, b_val
        ):
            return True
    return False


def rigid_class_orthgrass(space, index):
    """Largest-essential-b criterion plus the no-bad-gap condition."""
    check_valid(space, index)
    if space.kind is not SpaceKind.GRASS_ORTH:
        raise UnsupportedKindError("rigid_class_orthgrass needs an OG(k,n) pair")
    n = space.ambient
    k = space.top_step
    keys = essential_orthgrass(space, index)
    subs = []
    for ref in make_refs(index):
        if ref.key() in keys:
            subs.append(
                SubIndexVerdict(ref, True, rigid_subindex_orthgrass(space, index, ref))
            )
        else:
            subs.append(SubIndexVerdict(ref, False, None))
    notes = ()
    if index.b:
        gamma = max(j for (side, j) in keys if side == "b")
        b_gamma = index.b[gamma - 1]
        cond1 = b_gamma in index.a and Fraction(
            _count_a_below(index, b_gamma)
        ) > _bound(n, k, gamma, b_gamma)
    else:
        cond1 = True
        notes = ("no co-condition part: largest-essential-b condition is vacuous",)
    cond2 = not any(
        index.a[i - 1] not in index.b and _a_side_not_rigid(space, index, i)
        for i in range(1, index.s)
    )
    return RigidityVerdict(
        space=space,
        index=index,
        subs=tuple(subs),
        class_rigid=cond1 and cond2,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# orthogonal flags


def _of_essential_refs(space, index):
    keys = essential_flag(space, index)
    return [ref for ref in make_refs(index) if ref.key() in keys]


def implies_relation_orthflag(space, index):
    """The rigidity-propagation relation on essential OF sub-indices.

    b_{j1} => b_{j2} for j2 < j1 when the larger value is not n/2 - 1 and the
    smaller entry is essential in some admissible push-forward; a_i <=> b_j
    when the values agree (and differ from n/2 - 1).  Closed reflexively and
    transitively.
    """
    check_valid(space, index)
    if space.kind is not SpaceKind.FLAG_ORTH:
        raise UnsupportedKindError("the => relation is defined on OF indices")
    n = space.ambient
    refs = _of_essential_refs(space, index)
    edges = []
    for src in refs:
        for dst in refs:
            if src.key() == dst.key():
                edges.append(RelationEdge(src, dst))
                continue
            if src.side == "b" and dst.side == "b" and dst.position < src.position:
                if 2 * src.value == n - 2:
                    continue
                level = _first_essential_level(
                    space, index, dst, min(src.block, dst.block)
                )
                if level is not None:
                    edges.append(RelationEdge(src, dst, level))
            elif src.side != dst.side and src.value == dst.value:
                if 2 * src.value != n - 2:
                    edges.append(RelationEdge(src, dst))
    return _close_and_grade(refs, edges)


def _rigid_levels_orthpair_entry(space, index, ref):
    """Levels at which ``ref`` is essential and rigid in the push-forward."""
    levels = []
    k = space.blocks
    for t in range(ref.block, k + 1):
        if not _essential_in_pushforward(space, index, ref, t):
            continue
        image = pushforward_pair_flag(space, index, t)
        a_kept, b_kept = _image_entry_positions(index, t)
        if ref.side == "a":
            pos = a_kept.index(ref.position) + 1
        else:
            pos = b_kept.index(ref.position) + 1
        tgt = target_space(space, t)
        image_ref = find_ref(image, ref.side, pos)
        if rigid_subindex_orthgrass(tgt, image, image_ref):
            levels.append(t)
    return levels


def rigid_subindex_orthflag(space, index, ref):
    """(verdict, witness chain) for an essential OF sub-index.

    Rigid exactly when some essential entry related to it under ``=>`` is
    rigid in a push-forward; the witness records the chain and the level.
    """
    check_valid(space, index)
    relation = implies_relation_orthflag(space, index)
    if all(e.key() != ref.key() for e in relation.elements):
        raise NonEssentialSubIndexError(ref)
    for source in relation.elements:
        if not relation.related(source, ref):
            continue
        levels = _rigid_levels_orthpair_entry(space, index, source)
        if levels:
            chain = _chain_between(relation, source, ref)
            return True, ("chain", (chain, levels[0]))
    return False, ()


def _chain_between(relation, source, target):
    """Shortest direct-edge path source => ... => target (BFS)."""
    if source.key() == target.key():
        return (source,)
    adjacency = {}
    for edge in relation.edges:
        adjacency.setdefault(edge.source.key(), []).append(edge.target)
    frontier = [(source, (source,))]
    seen = {source.key()}
    while frontier:
        current, path = frontier.pop(0)
        for nxt in adjacency.get(current.key(), []):
            if nxt.key() in seen:
                continue
            if nxt.key() == target.key():
                return path + (nxt,)
            seen.add(nxt.key())
            frontier.append((nxt, path + (nxt,)))
    return (source, target)


def compat_relation_orthflag(space, index, paper_literal=False):
    """The four-clause compatibility relation on essential OF sub-indices."""
    check_valid(space, index)
    if space.kind is not SpaceKind.FLAG_ORTH:
        raise UnsupportedKindError("the OF compatibility relation needs an OF index")
    n = space.ambient
    refs = _of_essential_refs(space, index)
    pick = min if paper_literal else max
    edges = []
    for src in refs:
        for dst in refs:
            if src.key() == dst.key():
                continue
            if src.side == "a" and dst.side == "a":
                if src.position > dst.position:
                    continue
                if n % 2 == 0 and 2 * dst.value == n:
                    edges.append(RelationEdge(src, dst))
                    continue
                level = _first_essential_level(space, index, dst, pick(src.block, dst.block))
                if level is not None:
                    edges.append(RelationEdge(src, dst, level))
            elif src.side == "a" and dst.side == "b":
                if src.value <= dst.value:
                    edges.append(RelationEdge(src, dst))
            elif src.side == "b" and dst.side == "a":
                if src.value > dst.value or 2 * src.value == n - 2:
                    continue
                level = _common_essential_level(
                    space, index, src, dst, pick(dst.block, src.block)
                )
                if level is not None:
                    edges.append(RelationEdge(src, dst, level))
            else:
                if src.position > dst.position:
                    continue
                level = _first_essential_level(space, index, src, pick(src.block, dst.block))
                if level is not None:
                    edges.append(RelationEdge(src, dst, level))
    return _close_and_grade(refs, edges)


def _common_essential_level(space, index, ref1, ref2, threshold):
    k = space.blocks
    start = max(threshold, ref1.block, ref2.block)
    for t in range(start, k + 1):
        if _essential_in_pushforward(space, index, ref1, t) and _essential_in_pushforward(
            space, index, ref2, t
        ):
            return t
    return None


def rigid_class_orthflag(space, index, paper_literal=False):
    check_valid(space, index)
    keys = essential_flag(space, index)
    subs = []
    for ref in make_refs(index):
        if ref.key() in keys:
            verdict, witness = rigid_subindex_orthflag(space, index, ref)
            subs.append(SubIndexVerdict(ref, True, verdict, witness))
        else:
            subs.append(SubIndexVerdict(ref, False, None))
    relation = compat_relation_orthflag(space, index, paper_literal)
    all_rigid = all(v.rigid for v in subs if v.essential)
    return RigidityVerdict(
        space=space,
        index=index,
        subs=tuple(subs),
        class_rigid=all_rigid and relation.totally_ordered,
        relation=relation,
    )


# ---------------------------------------------------------------------------
# symplectic spaces (sufficient conditions only)


def _sg_sufficient(space, index, i):
    """a_i = i with either a gap >= 3 after it or i = s and n >= 2k + 2."""
    n = space.ambient
    k = space.top_step
    a = index.a
    s = index.s
    if a[i - 1] != i:
        return False
    if i < s:
        return a[i] - a[i - 1] >= 3
    return n >= 2 * k + 2


def _is_rigid_family(space, index):
    """a = (1,...,i), b = (i,...,k-1) with n >= 2k + 2."""
    k = space.top_step
    n = space.ambient
    if n < 2 * k + 2:
        return False
    i = index.s
    if i < 1:
        return False
    return index.a == tuple(range(1, i + 1)) and index.b == tuple(range(i, k))


def rigid_symp(space, index):
    """Partial verdict for SG/SF classes: True where a sufficient condition
    applies, None (unknown) otherwise — the criteria are one-sided for type C.
    """
    check_valid(space, index)
    if space.kind is SpaceKind.GRASS_SYMP:
        keys = essential_symp_pair(space, index)
        family = _is_rigid_family(space, index)
        subs = []
        for ref in make_refs(index):
            essential = ref.key() in keys
            rigid = None
            witness = ()
            if essential and ref.side == "a" and _sg_sufficient(space, index, ref.position):
                rigid = True
                witness = ("note", "a_i = i sufficient condition")
            if essential and rigid is None and family:
                # a rigid class pins the witness subspace of every essential entry
                rigid = True
                witness = ("note", "class is a rigid family member")
            subs.append(SubIndexVerdict(ref, essential, rigid, witness))
        return RigidityVerdict(
            space=space,
            index=index,
            subs=tuple(subs),
            class_rigid=True if family else None,
            notes=() if family else ("no sufficient type-C criterion applies",),
        )
    if space.kind is not SpaceKind.FLAG_SYMP:
        raise UnsupportedKindError("rigid_symp needs an SG or SF index")
    keys = essential_flag(space, index)
    k = space.blocks
    subs = []
    for ref in make_refs(index):
        essential = ref.key() in keys
        rigid = None
        witness = ()
        if essential and ref.side == "a":
            for t in range(ref.block, k + 1):
                image = pushforward_pair_flag(space, index, t)
                a_kept, _ = _image_entry_positions(index, t)
                pos = a_kept.index(ref.position) + 1
                if _sg_sufficient(target_space(space, t), image, pos):
                    rigid = True
                    witness = ("levels", (t,))
                    break
        subs.append(SubIndexVerdict(ref, essential, rigid, witness))
    return RigidityVerdict(
        space=space,
        index=index,
        subs=tuple(subs),
        class_rigid=None,
        notes=("type-C flag classes carry no class-level sufficient criterion",),
    )


# ---------------------------------------------------------------------------
# dispatch


def classify(space, index, paper_literal=False):
    """Whole-class verdict for any supported kind (used by the census)."""
    if space.kind in (SpaceKind.GRASS_A, SpaceKind.FLAG_A):
        return rigid_class_flag(space, index, paper_literal)
    if space.kind is SpaceKind.GRASS_ORTH:
        return rigid_class_orthgrass(space, index)
    if space.kind is SpaceKind.FLAG_ORTH:
        return rigid_class_orthflag(space, index, paper_literal)
    return rigid_symp(space, index)
