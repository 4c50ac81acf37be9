"""Cross-checks behind the ``selftest`` command and the acceptance suite.

Each check either returns a short summary string or raises CheckFailure with
the failing detail.  ``quick`` covers the worked-example regressions;
``full`` adds the exhaustive oracle sweeps.
"""
from __future__ import annotations

from itertools import combinations

from . import chow, multirigid, projections, restriction, rigidity
from .errors import UnsupportedDegenerationError
from .indices import (
    SpaceDescriptor,
    SpaceKind,
    dimension,
    dual,
    enumerate_indices,
    plain_index,
)
from .parser import parse_index


class CheckFailure(AssertionError):
    pass


def _expect(condition, detail):
    if not condition:
        raise CheckFailure(detail)


def _space(text):
    from .parser import parse_space

    return parse_space(text)


# ---------------------------------------------------------------------------
# quick checks: worked-example regressions


def check_flag_rigidity_examples():
    """rigid(2^1,4^2 @ F(1,2;4)) and not rigid(2^2,4^1 @ F(1,2;4))."""
    space, idx = parse_index("2^1,4^2 @ F(1,2;4)")
    verdict = rigidity.rigid_class_flag(space, idx)
    _expect(verdict.class_rigid is True, "2^1,4^2 should be rigid")
    space, idx = parse_index("2^2,4^1 @ F(1,2;4)")
    verdict = rigidity.rigid_class_flag(space, idx)
    _expect(verdict.class_rigid is False, "2^2,4^1 should not be rigid")
    return "both F(1,2;4) verdicts match"


def check_pushforward_examples():
    space, idx = parse_index("1^1,3^2,5^2 @ F(1,3;5)")
    _expect(
        projections.pushforward_flag(space, idx, 2) == plain_index((1, 3, 5)),
        "pi_2 of 1^1,3^2,5^2 should be (1,3,5)",
    )
    space, idx = parse_index("2^1,4^2 @ F(1,2;4)")
    _expect(
        projections.pushforward_flag(space, idx, 1) == plain_index((2,)),
        "pi_1 of 2^1,4^2 should be (2)",
    )
    space, idx = parse_index("(3^2|3^1,1^1,0^2) @ OF(2,4;11)")
    image = projections.pushforward_orthflag(space, idx, 1)
    _expect(
        image.a == () and image.b == (1, 3),
        "pi_1 of 3^2;3^1,1^1,0^2 should be (;1,3), got %s" % image,
    )
    return "all three push-forward examples match"


def check_removal_rule_pairing_sweep():
    """Identify each push-forward by pairing against complementary classes."""
    space = _space("F(1,2;5)")
    checked = 0
    for idx in enumerate_indices(space):
        for t in (1, 2):
            image = projections.pushforward_flag(space, idx, t)
            tgt = projections.target_space(space, t)
            image_dim = dimension(tgt, image)
            box = tgt.top_step * (tgt.ambient - tgt.top_step)
            expected_dual = dual(tgt, image)
            for candidate in enumerate_indices(tgt):
                if dimension(tgt, candidate) != box - image_dim:
                    continue
                value = chow.pairing(tgt, image, candidate).value
                want = 1 if candidate == expected_dual else 0
                _expect(
                    value == want,
                    "pairing of pi_%d(%s) against %s gave %d, want %d"
                    % (t, idx, candidate, value, want),
                )
                checked += 1
    return "%d pairings checked" % checked


def check_zero_product_oracle_sweep():
    """is_zero_product agrees with the LR product for k <= 3, n <= 7."""
    checked = 0
    for n in range(2, 8):
        for k in range(1, min(3, n - 1) + 1):
            space = SpaceDescriptor(SpaceKind.GRASS_A, (k,), n)
            indices = list(enumerate_indices(space))
            for idx_a in indices:
                for idx_b in indices:
                    fast = chow.is_zero_product(space, idx_a, idx_b)
                    slow = chow.product_indices(space, idx_a, idx_b).is_zero()
                    _expect(
                        fast == slow,
                        "zero-product mismatch for %s, %s in %s" % (idx_a, idx_b, space),
                    )
                    checked += 1
    return "%d pairs checked" % checked


def _flag_spaces(max_n, max_steps):
    for n in range(2, max_n + 1):
        for size in range(1, max_steps + 1):
            for steps in combinations(range(1, n + 1), size):
                yield SpaceDescriptor(SpaceKind.FLAG_A, steps, n)


def check_flag_corollary_equivalence_sweep():
    """Closed-form flag essentialness and rigidity == the projection definitions."""
    checked = 0
    for space in _flag_spaces(max_n=7, max_steps=3):
        k = space.blocks
        for idx in enumerate_indices(space):
            essentials = rigidity.essential_flag_positions(space, idx)
            for ref in rigidity.make_refs(idx):
                via_projection = any(
                    rigidity._essential_in_pushforward(space, idx, ref, t)
                    for t in range(ref.block, k + 1)
                )
                _expect(
                    (ref.position in essentials) == via_projection,
                    "essential closed form mismatch for a_%d of %s @ %s"
                    % (ref.position, idx, space),
                )
            for i in sorted(essentials):
                verdict, levels = rigidity.rigid_subindex_flag(space, idx, i)
                _expect(
                    verdict == bool(levels),
                    "clause/projection mismatch for a_%d of %s @ %s: %s vs %s"
                    % (i, idx, space, verdict, levels),
                )
                checked += 1
    return "%d sub-indices checked (plus essentialness per entry)" % checked


def check_orthogonal_examples():
    space, idx = parse_index("(3|3,1,0) @ OG(4,11)")
    _expect(
        rigidity.rigid_class_orthgrass(space, idx).class_rigid is True,
        "sigma_{3;3,1,0} should be rigid in OG(4,11)",
    )
    space, idx = parse_index("(3^2|3^1,1^1,0^2) @ OF(2,4;11)")
    ref = rigidity.find_ref(idx, "b", 2)
    _expect(ref.value == 1, "b_2 of the OF example should have value 1")
    verdict, witness = rigidity.rigid_subindex_orthflag(space, idx, ref)
    _expect(verdict is True, "b-value 1 should be rigid for the OF(2,4;11) example")
    kind, (chain, _level) = witness
    _expect(kind == "chain", "expected a chain witness")
    values = tuple((r.side, r.value) for r in chain)
    _expect(
        values == (("a", 3), ("b", 3), ("b", 1)),
        "expected the chain a(3) => b(3) => b(1), got %s" % (values,),
    )
    space, idx = parse_index("(1^1|1^2) @ OF(1,2;5)")
    _expect(
        rigidity.rigid_class_orthflag(space, idx).class_rigid is True,
        "sigma_{1^1;1^2} should be rigid in OF(1,2;5)",
    )
    space, idx = parse_index("(1|1) @ OG(2,5)")
    _expect(
        rigidity.rigid_class_orthgrass(space, idx).class_rigid is False,
        "sigma_{1;1} should not be rigid in OG(2,5)",
    )
    return "all four orthogonal example verdicts match"


def check_restriction_expansion():
    from .parser import parse_sequence

    seq = parse_sequence("F:2 | Q:6^0 @ OG(2,7)")
    cls, _trace = restriction.expand(seq)
    space, s11 = parse_index("(1|1) @ OG(2,7)")
    _, s22 = parse_index("(2|2) @ OG(2,7)")
    _expect(
        cls.coefficient(s11) == 1 and cls.coefficient(s22) == 1 and len(cls.terms) == 2,
        "expansion of F_2 < Q_6^0 should be sigma_{1;1} + sigma_{2;2}, got %s" % cls,
    )
    return "expansion matches"


def check_og_to_grass_example():
    space, idx = parse_index("(1|1) @ OG(2,7)")
    cls, _trace = restriction.og_to_grass(space, idx)
    _expect(
        cls.terms == ((plain_index((1, 5)), 2),),
        "push of sigma_{1;1} should be 2 sigma_{1,5}, got %s" % cls,
    )
    report = multirigid.og_pushforward_leading(space, idx)
    _expect(
        report.coefficient == 2 and report.admissible,
        "leading coefficient should be 2 and admissible",
    )
    verdict = multirigid.multirigid_class_og(space, idx)
    _expect(verdict.class_rigid is True, "sigma_{1;1} should be multi-rigid in OG(2,7)")
    return "push-forward, leading term and multi-rigidity all match"


def check_multirigid_implies_rigid_sweep():
    """Multi-rigid => rigid for every essential GrassA sub-index, n <= 10, k <= 4."""
    checked = 0
    for n in range(2, 11):
        for k in range(1, min(4, n - 1) + 1):
            space = SpaceDescriptor(SpaceKind.GRASS_A, (k,), n)
            for idx in enumerate_indices(space):
                for i in sorted(rigidity.essential_grass(space, idx)):
                    if multirigid.multirigid_subindex_grass(space, idx, i):
                        _expect(
                            rigidity.rigid_subindex_grass(space, idx, i),
                            "multi-rigid but not rigid: a_%d of %s @ %s" % (i, idx, space),
                        )
                    checked += 1
    return "%d sub-indices checked, zero violations" % checked


def check_fiber_consistency_sweep():
    """Boundary reductions and dimension additivity for the fiber classes."""
    checked = 0
    for text in ("F(1,2;4)", "F(1,2,3;5)"):
        space = _space(text)
        k = space.blocks
        for idx in enumerate_indices(space):
            top = projections.fiber_class_top(space, idx)
            _expect(
                projections.fiber_class_mid(space, idx, k) == top,
                "fiber_class_mid(.,k) != fiber_class_top for %s @ %s" % (idx, space),
            )
            _expect(
                projections.fiber_class_mid(space, idx, 1)
                == projections.fiber_class_bottom(space, idx),
                "fiber_class_mid(.,1) != fiber_class_bottom for %s @ %s" % (idx, space),
            )
            for t in range(1, k + 1):
                image = projections.pushforward_flag(space, idx, t)
                tgt = projections.target_space(space, t)
                fiber = projections.fiber_class_mid(space, idx, t)
                _expect(
                    dimension(space, idx)
                    == dimension(tgt, image) + dimension(space, fiber),
                    "dimension additivity fails for %s @ %s at t=%d" % (idx, space, t),
                )
                checked += 1
    return "%d (index, level) pairs checked" % checked


def check_symplectic_family():
    """The (1..i; i..k-1) family is rigid in SG(k, 2k+2) for k <= 4."""
    from .indices import pair_index

    checked = 0
    for k in range(1, 5):
        n = 2 * k + 2
        space = SpaceDescriptor(SpaceKind.GRASS_SYMP, (k,), n)
        for i in range(1, k + 1):
            idx = pair_index(tuple(range(1, i + 1)), tuple(range(i, k)))
            verdict = rigidity.rigid_symp(space, idx)
            _expect(
                verdict.class_rigid is True,
                "family class (1..%d; %d..%d) should be rigid in SG(%d,%d)"
                % (i, i, k - 1, k, n),
            )
            checked += 1
    return "%d family members rigid" % checked


def check_remark_counterexample_gate():
    """The F(1,3;4) Remark index: not totally ordered under max, ordered under min."""
    space, idx = parse_index("1^2,3^1,4^2 @ F(1,3;4)")
    strict = rigidity.relation_flag(space, idx, paper_literal=False)
    literal = rigidity.relation_flag(space, idx, paper_literal=True)
    _expect(
        strict.totally_ordered is False,
        "max-threshold relation should leave the Remark index unordered",
    )
    _expect(
        rigidity.rigid_class_flag(space, idx).class_rigid is False,
        "the Remark index should not be class-rigid",
    )
    _expect(
        literal.totally_ordered is True,
        "paper-literal (min) relation should order the Remark index — the "
        "discrepancy this gate exists to document",
    )
    return "max: unordered / not rigid; min: ordered (discrepancy reproduced)"


# ---------------------------------------------------------------------------
# extra invariant sweeps for selftest full


def check_leading_term_law():
    """og_to_grass leading coefficient equals 2^(k-s) where the hypothesis holds."""
    checked = 0
    for k, n in ((2, 7), (2, 9), (3, 9), (3, 11)):
        space = SpaceDescriptor(SpaceKind.GRASS_ORTH, (k,), n)
        for idx in enumerate_indices(space):
            if not idx.a:
                continue
            a_keys = [p for (side, p) in rigidity.essential_orthgrass(space, idx) if side == "a"]
            if not a_keys:
                continue
            report = multirigid.og_pushforward_leading(space, idx)
            if not report.admissible:
                continue
            try:
                cls, _ = restriction.og_to_grass(space, idx)
            except UnsupportedDegenerationError:
                continue
            prefix = report.prefix
            matching = [
                (term, c) for term, c in cls.terms if term.a[: len(prefix)] == prefix
            ]
            _expect(matching, "no term with prefix %s in %s" % (prefix, cls))
            term, coeff = max(matching, key=lambda item: item[0].a)
            _expect(
                coeff == report.coefficient,
                "leading coefficient of %s @ %s is %d, want %d"
                % (idx, space, coeff, report.coefficient),
            )
            checked += 1
    return "%d leading terms checked" % checked


def check_expand_dimension_conservation():
    """All type-A terms of a push-forward expansion share one dimension."""
    checked = 0
    for n in (7, 9):
        space = SpaceDescriptor(SpaceKind.GRASS_ORTH, (2,), n)
        for idx in enumerate_indices(space):
            try:
                cls, _ = restriction.og_to_grass(space, idx)
            except UnsupportedDegenerationError:
                continue
            dims = {dimension(cls.space, term) for term, _ in cls.terms}
            _expect(
                len(dims) == 1,
                "mixed dimensions %s in push of %s @ %s" % (dims, idx, space),
            )
            checked += 1
    return "%d expansions checked" % checked


def check_class_rigid_implies_subs_og():
    """Class-rigid OG classes have every essential sub-index rigid (k<=3, n<=9)."""
    checked = 0
    for n in range(3, 10):
        for k in range(1, min(3, n // 2) + 1):
            space = SpaceDescriptor(SpaceKind.GRASS_ORTH, (k,), n)
            for idx in enumerate_indices(space):
                verdict = rigidity.rigid_class_orthgrass(space, idx)
                if verdict.class_rigid:
                    _expect(
                        all(v.rigid for v in verdict.subs if v.essential),
                        "class rigid but an essential sub-index is not: %s @ %s"
                        % (idx, space),
                    )
                checked += 1
    return "%d classes checked" % checked


QUICK_CHECKS = (
    ("flag rigidity examples", check_flag_rigidity_examples),
    ("push-forward examples", check_pushforward_examples),
    ("orthogonal examples", check_orthogonal_examples),
    ("restriction expansion", check_restriction_expansion),
    ("OG to G push-forward", check_og_to_grass_example),
    ("symplectic family", check_symplectic_family),
    ("remark counterexample gate", check_remark_counterexample_gate),
)

FULL_CHECKS = QUICK_CHECKS + (
    ("removal rule pairing sweep", check_removal_rule_pairing_sweep),
    ("zero product oracle sweep", check_zero_product_oracle_sweep),
    ("flag corollary equivalence sweep", check_flag_corollary_equivalence_sweep),
    ("multi-rigid implies rigid sweep", check_multirigid_implies_rigid_sweep),
    ("fiber consistency sweep", check_fiber_consistency_sweep),
    ("leading term law", check_leading_term_law),
    ("expansion dimension conservation", check_expand_dimension_conservation),
    ("OG class verdict implies sub-index verdicts", check_class_rigid_implies_subs_og),
)


def run_checks(scope="quick", emit=print):
    checks = QUICK_CHECKS if scope == "quick" else FULL_CHECKS
    failures = 0
    for name, func in checks:
        try:
            summary = func()
        except CheckFailure as exc:
            failures += 1
            emit("FAIL %s: %s" % (name, exc))
        else:
            emit("ok   %s (%s)" % (name, summary))
    return failures
