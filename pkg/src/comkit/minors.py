"""Minors of sign-vector systems: deletion, contraction, reorientation,
the shattering rank, and the directed-circuit construction.

COMs are closed under deletion and contraction, and also under the face
restriction used by the corpus generator: fixing a nonzero sign at one
element and then removing it.  Face symmetry and strong elimination both
survive the restriction because the witnesses they produce inherit the fixed
sign through composition (for FS) and through "the element is never in the
separator" (for SE).  Restriction is the one operation here that can destroy
the zero covector, so it is the source of COMs that are not OMs and of empty
contractions.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from .signvectors import GroundSet, SignSystem, default_elements


def deletion(system: SignSystem, subset: Iterable[str]) -> SignSystem:
    """Restrict every covector to the complement of ``subset``."""
    drop = system.ground.positions(subset)
    keep = [i for i in range(len(system.ground)) if i not in drop]
    ground = GroundSet(tuple(system.ground.elements[i] for i in keep))
    return SignSystem(
        ground, (tuple(row[i] for i in keep) for row in system.row_set())
    )


def contraction(system: SignSystem, subset: Iterable[str]) -> SignSystem:
    """Keep the covectors vanishing on ``subset`` and restrict them."""
    drop = system.ground.positions(subset)
    keep = [i for i in range(len(system.ground)) if i not in drop]
    ground = GroundSet(tuple(system.ground.elements[i] for i in keep))
    return SignSystem(
        ground,
        (
            tuple(row[i] for i in keep)
            for row in system.row_set()
            if all(row[i] == 0 for i in drop)
        ),
    )


def reorient_system(system: SignSystem, subset: Iterable[str]) -> SignSystem:
    """Flip all covector signs on ``subset``."""
    flip = system.ground.positions(subset)
    return SignSystem(
        system.ground,
        (
            tuple(-s if i in flip else s for i, s in enumerate(row))
            for row in system.row_set()
        ),
    )


def face_restriction(system: SignSystem, element: str, sign: int) -> SignSystem:
    """Keep the covectors with the given nonzero sign at ``element`` and
    delete the element.  Preserves COM; may remove the zero covector."""
    if sign not in (-1, 1):
        raise ValueError("restriction sign must be +1 or -1")
    pos = system.ground.position(element)
    keep = [i for i in range(len(system.ground)) if i != pos]
    ground = GroundSet(tuple(system.ground.elements[i] for i in keep))
    return SignSystem(
        ground,
        (
            tuple(row[i] for i in keep)
            for row in system.row_set()
            if row[pos] == sign
        ),
    )


def is_shattered(system: SignSystem, subset: Iterable[str]) -> bool:
    """Does the projection to ``subset`` realize all 3**|subset| patterns?"""
    kept = sorted(system.ground.positions(subset))
    projected = {tuple(row[i] for i in kept) for row in system.row_set()}
    return len(projected) == 3 ** len(kept)


def rank(system: SignSystem) -> int:
    """Largest size of a shattered subset of the ground set.

    Shattered sets are downward closed, so the search grows them one element
    at a time and stops at the first empty level.
    """
    if len(system) == 0:
        raise ValueError("rank is undefined for an empty covector set")
    n = len(system.ground)
    rows = system.rows()
    level: set[frozenset[int]] = {frozenset()}
    best = 0
    while True:
        nxt: set[frozenset[int]] = set()
        for base in level:
            for e in range(n):
                if e in base:
                    continue
                cand = base | {e}
                if cand in nxt:
                    continue
                kept = sorted(cand)
                proj = {tuple(row[i] for i in kept) for row in rows}
                if len(proj) == 3 ** len(kept):
                    nxt.add(cand)
        if not nxt:
            return best
        best += 1
        level = nxt


def directed_circuit(n: int, elements: Iterable[str] | None = None) -> SignSystem:
    """The oriented matroid whose covectors are the zero vector plus every
    sign vector containing at least one plus and at least one minus.

    For n = 1 this degenerates to the single-loop system {0}: the only
    COM on one element that contains the zero vector but neither sign.
    """
    if n < 1:
        raise ValueError("a directed circuit needs at least one element")
    ground = GroundSet(tuple(elements) if elements else default_elements(n))
    if len(ground) != n:
        raise ValueError("element count does not match n")
    if n == 1:
        return SignSystem(ground, [(0,)])
    covs = [(0,) * n]
    covs.extend(
        v
        for v in product((-1, 0, 1), repeat=n)
        if any(s > 0 for s in v) and any(s < 0 for s in v)
    )
    return SignSystem(ground, covs)
