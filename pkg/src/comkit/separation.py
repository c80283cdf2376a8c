"""Separability queries, the subset separation criterion, and witness
extraction.

Two disjoint element sets V and W are separable in a system when some
covector is positive on all of V and negative on all of W.  For a full
partition of the ground set this asks whether the target vector (+ on V,
- on W) is a tope.  The separation criterion audited here: if for every
subset C of size rank+1 the target restricted to C is a tope of the
contraction to C, then the target is a tope.  A restricted target is a tope
of the contraction exactly when the target padded with zeros outside C is a
covector of the system itself, which makes all the subset scans cheap
membership tests.

When the target is not a tope, the witness machinery extracts the smallest
subset D whose contraction already misses the restricted target and checks
the constructive claim that, after reorienting to all-plus, the contraction
to D is the directed circuit on |D| elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .minors import contraction, directed_circuit, rank, reorient_system
from .signvectors import GroundSet, SignSystem, SignVector

CONTRACTION, DELETION = "contraction", "deletion"

CLAIM_SEPARATION = "theorem8"
CLAIM_CIRCUIT_COLLAPSE = "prop7"
CLAIM_MONOTONICITY = "monotonicity"


@dataclass(frozen=True)
class SeparationQuery:
    """Disjoint element sets to be separated: positives get +, negatives -."""

    positives: frozenset[str]
    negatives: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "positives", frozenset(self.positives))
        object.__setattr__(self, "negatives", frozenset(self.negatives))
        if self.positives & self.negatives:
            raise ValueError("the two sides of a query must be disjoint")

    @classmethod
    def of(cls, positives: Iterable[str], negatives: Iterable[str]) -> "SeparationQuery":
        return cls(frozenset(positives), frozenset(negatives))

    def validate(self, ground: GroundSet):
        ground.positions(self.positives)
        ground.positions(self.negatives)

    def is_full(self, ground: GroundSet) -> bool:
        return self.positives | self.negatives == set(ground.elements)


def target_vector(ground: GroundSet, query: SeparationQuery) -> SignVector:
    """+ on the positives, - on the negatives, 0 elsewhere."""
    query.validate(ground)
    pos = ground.positions(query.positives)
    neg = ground.positions(query.negatives)
    return SignVector(
        ground,
        tuple(1 if i in pos else -1 if i in neg else 0 for i in range(len(ground))),
    )


def separating_covector(system: SignSystem, query: SeparationQuery) -> SignVector | None:
    """The first covector (in canonical order) witnessing separability."""
    query.validate(system.ground)
    pos = system.ground.positions(query.positives)
    neg = system.ground.positions(query.negatives)
    for row in system.rows():
        if all(row[i] == 1 for i in pos) and all(row[i] == -1 for i in neg):
            return system.vector(row)
    return None


def is_separable(system: SignSystem, query: SeparationQuery) -> bool:
    return separating_covector(system, query) is not None


def target_tope_present(system: SignSystem, query: SeparationQuery) -> bool:
    """For a full partition: is the target vector a tope of the system?"""
    if not query.is_full(system.ground):
        raise ValueError("query must cover the whole ground set")
    return target_vector(system.ground, query).signs in system.row_set()


def _padded_present(system: SignSystem, target: tuple[int, ...], kept: frozenset[int]) -> bool:
    # target restricted to C is a tope of the contraction to C  iff
    # the target padded with zeros off C is a covector of the system
    padded = tuple(s if i in kept else 0 for i, s in enumerate(target))
    return padded in system.row_set()


def _restriction_matched(system: SignSystem, target: tuple[int, ...], kept: frozenset[int]) -> bool:
    # deletion variant: some covector matches the target on C
    for row in system.row_set():
        if all(row[i] == target[i] for i in kept):
            return True
    return False


def _subset_size(system: SignSystem) -> int:
    if len(system) == 0:
        # rank is undefined for an empty covector set; nothing can be a tope
        # of any contraction, so the degenerate scan size is zero
        return 0
    return min(rank(system) + 1, len(system.ground))


def _hypothesis_at(
    system: SignSystem,
    target: tuple[int, ...],
    k: int,
    variant: str,
) -> tuple[bool, tuple[str, ...] | None]:
    test = _padded_present if variant == CONTRACTION else _restriction_matched
    for combo in combinations(range(len(system.ground)), k):
        if not test(system, target, frozenset(combo)):
            failing = tuple(system.ground.elements[i] for i in combo)
            return False, failing
    return True, None


def hypothesis_holds(
    system: SignSystem,
    query: SeparationQuery,
    variant: str = CONTRACTION,
) -> tuple[bool, tuple[str, ...] | None]:
    """Does every subset C of size min(rank+1, |E|) admit the restricted
    target?  Returns the verdict and the first failing C, if any.

    The contraction variant restricts to covectors vanishing off C; the
    deletion variant projects all covectors.
    """
    if variant not in (CONTRACTION, DELETION):
        raise ValueError(f"unknown variant {variant!r}")
    if not system.is_com():
        raise ValueError("the subset criterion is stated for COMs")
    if not query.is_full(system.ground):
        raise ValueError("query must cover the whole ground set")
    target = target_vector(system.ground, query).signs
    return _hypothesis_at(system, target, _subset_size(system), variant)


def hypothesis_table(
    system: SignSystem, query: SeparationQuery
) -> list[tuple[tuple[str, ...], bool, bool]]:
    """Per-subset verdicts under both variants, for disagreement reports."""
    if not query.is_full(system.ground):
        raise ValueError("query must cover the whole ground set")
    target = target_vector(system.ground, query).signs
    n = len(system.ground)
    k = _subset_size(system)
    out = []
    for combo in combinations(range(n), k):
        kept = frozenset(combo)
        ids = tuple(system.ground.elements[i] for i in combo)
        out.append(
            (
                ids,
                _padded_present(system, target, kept),
                _restriction_matched(system, target, kept),
            )
        )
    return out


def _minimal_failing(system: SignSystem, target: tuple[int, ...]) -> frozenset[int]:
    """Smallest (then lexicographically first) index set whose contraction
    misses the restricted target.  E itself always qualifies when the target
    is not a tope, and the empty set qualifies exactly when the system lacks
    the zero covector."""
    n = len(system.ground)
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            if not _padded_present(system, target, frozenset(combo)):
                return frozenset(combo)
    raise AssertionError("unreachable: the full set must fail for a non-tope")


@dataclass(frozen=True)
class WitnessReport:
    """The constructive content of a failed separation.

    ``witness_set`` is the minimal failing subset D; ``contraction_snapshot``
    the contraction to D; ``circuit_verified`` whether that contraction,
    reoriented to an all-plus target, equals the directed circuit on |D|
    elements; ``extension`` a superset C of D of the criterion's subset size
    (D itself when D is already larger) and ``extension_fails`` whether the
    restricted target is still missing at C.
    """

    query: SeparationQuery
    target: str
    witness_set: tuple[str, ...]
    contraction_snapshot: SignSystem
    circuit_verified: bool
    extension: tuple[str, ...]
    extension_fails: bool

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "d": list(self.witness_set),
            "contraction": self.contraction_snapshot.to_json(),
            "circuit_verified": self.circuit_verified,
            "extension": list(self.extension),
            "extension_fails": self.extension_fails,
        }


def verify_circuit_structure(
    system: SignSystem, witness_set: Iterable[str], query: SeparationQuery
) -> bool:
    """After reorienting the negatives inside D to plus, is the contraction
    to D exactly the directed circuit on |D| elements?

    False for the empty witness set: there is no zero-element circuit.
    """
    d_ids = tuple(e for e in system.ground.elements if e in set(witness_set))
    if not d_ids:
        return False
    rest = [e for e in system.ground.elements if e not in set(d_ids)]
    snapshot = contraction(system, rest)
    flipped = reorient_system(snapshot, set(d_ids) & query.negatives)
    return flipped == directed_circuit(len(d_ids), d_ids)


def minimal_witness(
    system: SignSystem,
    query: SeparationQuery,
    subset_size: int | None = None,
) -> WitnessReport:
    """Extract the minimal failing subset and its circuit certificate.

    Only defined when the target is not a tope (callers are expected to have
    established the system is a COM).  ``subset_size`` can carry a
    precomputed min(rank+1, |E|) to spare repeated rank scans.
    """
    if not query.is_full(system.ground):
        raise ValueError("query must cover the whole ground set")
    target = target_vector(system.ground, query)
    if target.signs in system.row_set():
        raise ValueError("the target is a tope; there is no failing witness")
    n = len(system.ground)
    d_idx = _minimal_failing(system, target.signs)
    d_ids = tuple(system.ground.elements[i] for i in sorted(d_idx))
    rest = [system.ground.elements[i] for i in range(n) if i not in d_idx]
    snapshot = contraction(system, rest)

    k = _subset_size(system) if subset_size is None else subset_size
    if len(d_idx) >= k:
        ext_idx = frozenset(d_idx)
    else:
        extra = [i for i in range(n) if i not in d_idx]
        ext_idx = frozenset(d_idx | set(extra[: k - len(d_idx)]))
    ext_ids = tuple(system.ground.elements[i] for i in sorted(ext_idx))

    return WitnessReport(
        query=query,
        target=target.to_string(),
        witness_set=d_ids,
        contraction_snapshot=snapshot,
        circuit_verified=verify_circuit_structure(system, d_ids, query),
        extension=ext_ids,
        extension_fails=not _padded_present(system, target.signs, ext_idx),
    )


def check_circuit_collapse(
    system: SignSystem,
    require_simple: bool = True,
    require_zero: bool = False,
) -> bool:
    """If every single-minus tope exists and the all-plus vector is not a
    tope, the system must be the directed circuit on its ground set.

    Returns True when the implication holds (vacuously or not).  The default
    hypothesis matches the claim as usually stated: a simple COM with the
    single-minus topes and no all-plus tope.  That statement is false for
    COMs missing the zero covector (one corpus-discovered counterexample is
    pinned in the test suite); with ``require_zero=True`` the hypothesis
    additionally demands the zero covector, which restores a provable claim:
    composition and negation closure then force every such system to be the
    directed circuit.
    """
    if not system.is_com():
        raise ValueError("circuit-collapse check needs a COM")
    n = len(system.ground)
    rows = system.row_set()
    if require_simple and not system.is_simple():
        return True
    if require_zero and (0,) * n not in rows:
        return True
    all_plus = (1,) * n
    if all_plus in rows:
        return True
    for f in range(n):
        t_f = tuple(-1 if i == f else 1 for i in range(n))
        if t_f not in rows:
            return True
    return system == directed_circuit(n, system.ground.elements) if n >= 1 else len(rows) == 1


def all_targets(system: SignSystem) -> Iterator[SeparationQuery]:
    """All full (positives, negatives) partitions of the ground set.

    When the covector set is closed under negation, a query and its swap
    have the same answer everywhere, so only the lexicographically smaller
    of each pair is emitted.
    """
    if len(system) == 0:
        raise ValueError("no targets for an empty covector set")
    n = len(system.ground)
    elements = system.ground.elements
    dedup = system.is_negation_closed()
    for mask in range(1 << n):
        flip = ((1 << n) - 1) ^ mask
        if dedup and flip < mask:
            continue
        yield SeparationQuery.of(
            (elements[i] for i in range(n) if mask >> i & 1),
            (elements[i] for i in range(n) if not mask >> i & 1),
        )


def _record(system: SignSystem, target: str, claim: str, variant: str, witness: dict) -> dict:
    return {
        "system": system.to_json(),
        "target": target,
        "variant": variant,
        "claim": claim,
        "witness": witness,
    }


def audit_kirchberger(system: SignSystem) -> list[dict]:
    """Hunt for targets where the subset criterion holds but the target is
    not a tope.  Expected empty on every COM: zero-padded restricted targets
    compose across subset unions, so the criterion already forces the target
    into any composition-closed system."""
    if not system.is_com():
        raise ValueError("audit needs a COM")
    if len(system) == 0:
        return []
    k = _subset_size(system)
    records = []
    for query in all_targets(system):
        target = target_vector(system.ground, query)
        holds, _ = _hypothesis_at(system, target.signs, k, CONTRACTION)
        if holds and target.signs not in system.row_set():
            records.append(
                _record(
                    system,
                    target.to_string(),
                    CLAIM_SEPARATION,
                    CONTRACTION,
                    {"rank": rank(system), "subset_size": k},
                )
            )
    return records


def _circuit_collapse_record(system: SignSystem, statement_only: bool) -> dict:
    n = len(system.ground)
    return _record(
        system,
        "+" * n,
        CLAIM_CIRCUIT_COLLAPSE,
        CONTRACTION,
        {
            "expected_circuit": n,
            "simple": system.is_simple(),
            "zero_covector": (0,) * n in system.row_set(),
            "statement_only": statement_only,
        },
    )


def audit_circuit_collapse(system: SignSystem) -> list[dict]:
    """Record a counterexample when the proof-supported circuit-collapse
    claim fails: on systems containing the zero covector, the single-minus
    topes plus a missing all-plus tope must collapse the system to the
    directed circuit.  Expected empty everywhere."""
    if check_circuit_collapse(system, require_simple=True, require_zero=True):
        return []
    return [_circuit_collapse_record(system, statement_only=False)]


def circuit_collapse_findings(system: SignSystem) -> list[dict]:
    """Records where the claim fails as usually stated (no zero-covector
    hypothesis) although the proof-supported scope holds.  These are
    discovered defects of the statement, not of this implementation."""
    if check_circuit_collapse(system, require_simple=True, require_zero=False):
        return []
    if not check_circuit_collapse(system, require_simple=True, require_zero=True):
        return []  # already a hard counterexample
    return [_circuit_collapse_record(system, statement_only=True)]


def audit_monotonicity(system: SignSystem) -> list[dict]:
    """For every non-tope target, find the minimal failing subset D and
    check that every superset of D also fails.

    A passing superset contradicts a step the separation proof takes for
    granted; such violations do exist (see the package README) and are
    reported as records, not raised.
    """
    if not system.is_com():
        raise ValueError("audit needs a COM")
    if len(system) == 0:
        return []
    n = len(system.ground)
    records = []
    for query in all_targets(system):
        target = target_vector(system.ground, query)
        if target.signs in system.row_set():
            continue
        d_idx = _minimal_failing(system, target.signs)
        others = [i for i in range(n) if i not in d_idx]
        for extra in range(len(others) + 1):
            for combo in combinations(others, extra):
                sup = frozenset(d_idx | set(combo))
                if _padded_present(system, target.signs, sup):
                    records.append(
                        _record(
                            system,
                            target.to_string(),
                            CLAIM_MONOTONICITY,
                            CONTRACTION,
                            {
                                "d": [system.ground.elements[i] for i in sorted(d_idx)],
                                "c": [system.ground.elements[i] for i in sorted(sup)],
                            },
                        )
                    )
    return records
