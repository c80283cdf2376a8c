"""Exact rational point configurations and strict linear feasibility.

Everything in this module is exact: coordinates are ``fractions.Fraction``
values, feasibility is decided by Fourier-Motzkin elimination over the
rationals (run on integer-scaled rows), and every returned functional
reproduces its sign vector under exact re-evaluation.  Floating-point input
is rejected at the parsing boundary.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .signvectors import (
    GroundSet,
    SignSystem,
    SignVector,
    default_elements,
    sign_of,
)

Rational = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(value) -> Fraction:
    """Exact rationals only: int, Fraction, or a 'p/q' / integer string."""
    if isinstance(value, bool):
        raise ValueError(f"not an exact rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if _RATIONAL_RE.match(text):
            return Fraction(text)
        raise ValueError(f"not an exact rational literal: {value!r}")
    raise ValueError(
        f"not an exact rational: {value!r} (floating point is rejected)"
    )


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class PointConfiguration:
    """Labeled points with exact rational coordinates.

    ``labels[i]`` is "V", "W" or None; ids are distinct and give the ground
    set (and hence serialization) order.
    """

    dim: int
    ids: tuple[str, ...]
    points: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str | None, ...]

    def __post_init__(self):
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("point ids must be distinct")
        if len(self.points) != len(self.ids) or len(self.labels) != len(self.ids):
            raise ValueError("ids, points and labels must align")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError("every point needs exactly dim coordinates")
        if any(lab not in (None, "V", "W") for lab in self.labels):
            raise ValueError("labels must be 'V', 'W' or absent")

    @classmethod
    def of(
        cls,
        points: Iterable[Sequence],
        ids: Iterable[str] | None = None,
        labels: Iterable[str | None] | None = None,
        dim: int | None = None,
    ) -> "PointConfiguration":
        pts = tuple(tuple(parse_rational(c) for c in p) for p in points)
        if dim is None:
            if not pts:
                raise ValueError("cannot infer dimension from no points")
            dim = len(pts[0])
        id_tuple = tuple(ids) if ids is not None else tuple(
            f"p{i + 1}" for i in range(len(pts))
        )
        lab_tuple = tuple(labels) if labels is not None else (None,) * len(pts)
        return cls(dim, id_tuple, pts, lab_tuple)

    def __len__(self) -> int:
        return len(self.ids)

    def ground(self) -> GroundSet:
        return GroundSet(self.ids)

    def index(self, point_id: str) -> int:
        try:
            return self.ids.index(point_id)
        except ValueError:
            raise ValueError(f"unknown point id {point_id!r}") from None

    def labeled(self, label: str) -> tuple[str, ...]:
        return tuple(i for i, lab in zip(self.ids, self.labels) if lab == label)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "points": [
                {
                    "id": i,
                    "coords": [format_rational(c) for c in p],
                    **({"label": lab} if lab else {}),
                }
                for i, p, lab in zip(self.ids, self.points, self.labels)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PointConfiguration":
        if not isinstance(data, dict) or "dim" not in data or "points" not in data:
            raise ValueError("point encoding needs 'dim' and 'points'")
        dim = int(data["dim"])
        ids, pts, labs = [], [], []
        for entry in data["points"]:
            ids.append(str(entry["id"]))
            pts.append(tuple(parse_rational(c) for c in entry["coords"]))
            labs.append(entry.get("label"))
        return cls(dim, tuple(ids), tuple(pts), tuple(labs))


@dataclass(frozen=True)
class AffineFunctional:
    """An exact pair (a, alpha) evaluated as a . v - alpha."""

    coeffs: tuple[Fraction, ...]
    offset: Fraction

    @classmethod
    def of(cls, coeffs: Iterable, offset) -> "AffineFunctional":
        return cls(
            tuple(parse_rational(c) for c in coeffs), parse_rational(offset)
        )

    def value_at(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.coeffs):
            raise ValueError("point dimension does not match the functional")
        return sum(a * x for a, x in zip(self.coeffs, point)) - self.offset

    def sign_at(self, point: Sequence[Fraction]) -> int:
        return sign_of(self.value_at(point))

    def induced_vector(self, config: PointConfiguration) -> SignVector:
        return SignVector(
            config.ground(), tuple(self.sign_at(p) for p in config.points)
        )

    def to_json(self) -> dict:
        return {
            "a": [format_rational(c) for c in self.coeffs],
            "alpha": format_rational(self.offset),
        }

    @classmethod
    def from_json(cls, data: dict) -> "AffineFunctional":
        return cls.of(data["a"], data["alpha"])


GE, EQ = "ge", "eq"


@dataclass
class LinearConstraintSystem:
    """Rows of the form  sum(coeffs * x) >= rhs  or  == rhs."""

    variables: int
    rows: list[tuple[tuple[Fraction, ...], str, Fraction]]

    def __init__(self, variables: int):
        self.variables = variables
        self.rows = []

    def _add(self, coeffs, relation, rhs):
        row = tuple(parse_rational(c) for c in coeffs)
        if len(row) != self.variables:
            raise ValueError("coefficient count does not match variable count")
        self.rows.append((row, relation, parse_rational(rhs)))

    def add_ge(self, coeffs, rhs):
        self._add(coeffs, GE, rhs)

    def add_eq(self, coeffs, rhs):
        self._add(coeffs, EQ, rhs)


def _scale_row(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[tuple[int, ...], int]:
    """Clear denominators; positive scaling preserves >= and ==."""
    mult = 1
    for c in list(coeffs) + [rhs]:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    return tuple(int(c * mult) for c in coeffs), int(rhs * mult)


def _reduce(coeffs: tuple[int, ...], rhs: int):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, rhs)
    if g > 1:
        return tuple(c // g for c in coeffs), rhs // g
    return coeffs, rhs


def _solve_int(
    ge_rows: list[tuple[tuple[int, ...], int]],
    eq_rows: list[tuple[tuple[int, ...], int]],
    nvars: int,
) -> tuple[Fraction, ...] | None:
    """Exact feasibility over the rationals for integer rows.

    Equalities are substituted away first (pivot: the highest-index nonzero
    coefficient), then Fourier-Motzkin eliminates the remaining variables
    from the highest index down to 1.  The witness is rebuilt from the
    elimination stack: each variable takes its largest lower bound when one
    exists, otherwise its smallest upper bound, otherwise 0, so the result
    is deterministic.
    """
    ge = [(tuple(c), int(r)) for c, r in ge_rows]
    eq = [(tuple(c), int(r)) for c, r in eq_rows]
    if nvars == 0:
        if any(r != 0 for _, r in eq) or any(r > 0 for _, r in ge):
            return None
        return ()

    subs: list[tuple[int, tuple[int, ...], int]] = []  # (pivot, coeffs, rhs)
    while eq:
        coeffs, rhs = eq.pop(0)
        pivot = -1
        for j in range(nvars - 1, -1, -1):
            if coeffs[j]:
                pivot = j
                break
        if pivot < 0:
            if rhs != 0:
                return None
            continue
        if coeffs[pivot] < 0:
            coeffs = tuple(-c for c in coeffs)
            rhs = -rhs
        subs.append((pivot, coeffs, rhs))

        def eliminate(row):
            rc, rr = row
            if not rc[pivot]:
                return row
            # coeffs[pivot] > 0, so the combination keeps >= intact
            nc = tuple(
                coeffs[pivot] * rc[k] - rc[pivot] * coeffs[k]
                for k in range(nvars)
            )
            return _reduce(nc, coeffs[pivot] * rr - rc[pivot] * rhs)

        ge = [eliminate(r) for r in ge]
        eq = [eliminate(r) for r in eq]

    stack: list[tuple[int, list[tuple[tuple[int, ...], int]]]] = []
    for j in range(nvars - 1, 0, -1):
        pos = [r for r in ge if r[0][j] > 0]
        neg = [r for r in ge if r[0][j] < 0]
        zer = [r for r in ge if r[0][j] == 0]
        stack.append((j, pos + neg))
        new = set(zer)
        for pc, pr in pos:
            for qc, qr in neg:
                nc = tuple(
                    (-qc[j]) * pc[k] + pc[j] * qc[k] for k in range(nvars)
                )
                new.add(_reduce(nc, (-qc[j]) * pr + pc[j] * qr))
        ge = []
        for rc, rr in new:
            if any(rc):
                ge.append((rc, rr))
            elif rr > 0:
                return None

    values = [Fraction(0)] * nvars
    lower, upper = None, None
    for rc, rr in ge:
        c = rc[0]
        if c > 0:
            bound = Fraction(rr, c)
            if lower is None or bound > lower:
                lower = bound
        elif c < 0:
            bound = Fraction(rr, c)
            if upper is None or bound < upper:
                upper = bound
        elif rr > 0:
            return None
    if lower is not None and upper is not None and lower > upper:
        return None
    values[0] = lower if lower is not None else (
        upper if upper is not None else Fraction(0)
    )

    for j, rows in reversed(stack):
        lower, upper = None, None
        for rc, rr in rows:
            rest = rr - sum(rc[k] * values[k] for k in range(j))
            bound = Fraction(rest, rc[j])
            if rc[j] > 0:
                if lower is None or bound > lower:
                    lower = bound
            else:
                if upper is None or bound < upper:
                    upper = bound
        values[j] = lower if lower is not None else (
            upper if upper is not None else Fraction(0)
        )

    for pivot, coeffs, rhs in reversed(subs):
        rest = rhs - sum(
            coeffs[k] * values[k] for k in range(nvars) if k != pivot
        )
        values[pivot] = Fraction(rest, coeffs[pivot])

    return tuple(values)


def lp_feasible(system: LinearConstraintSystem) -> tuple[Fraction, ...] | None:
    """Exact feasibility decision; returns a witness point or None.

    The empty system is feasible with the zero witness.
    """
    ge, eq = [], []
    for coeffs, relation, rhs in system.rows:
        scaled = _scale_row(coeffs, rhs)
        (ge if relation == GE else eq).append(scaled)
    return _solve_int(ge, eq, system.variables)


def _pattern_rows(
    points: Sequence[tuple[Fraction, ...]],
    signs: Sequence[int],
    homogeneous: bool,
) -> tuple[list, list]:
    """Margin-normalized integer rows for sign(a . v - alpha) = signs.

    The constraint set {(a, alpha) : sign(a . v_i - alpha) = X_i} is
    invariant under positive scaling, so strict feasibility of the + and -
    constraints is equivalent to feasibility at margin 1; zeros stay exact
    equalities.  Variables are (a_1..a_d) plus alpha as the last variable in
    the affine case.
    """
    ge, eq = [], []
    for v, s in zip(points, signs):
        row = list(v) if homogeneous else list(v) + [Fraction(-1)]
        if s > 0:
            ge.append(_scale_row(row, Fraction(1)))
        elif s < 0:
            ge.append(_scale_row([-c for c in row], Fraction(1)))
        else:
            eq.append(_scale_row(row, Fraction(0)))
    return ge, eq


def realize_sign_vector(
    config: PointConfiguration,
    target: SignVector,
    homogeneous: bool = False,
) -> AffineFunctional | None:
    """Find an exact functional inducing ``target`` on the configuration.

    With ``homogeneous`` the offset is pinned to zero (linear sign maps).
    """
    if tuple(target.ground.elements) != config.ids:
        raise ValueError("sign vector is not on the configuration's ground set")
    nvars = config.dim + (0 if homogeneous else 1)
    ge, eq = _pattern_rows(config.points, target.signs, homogeneous)
    witness = _solve_int(ge, eq, nvars)
    if witness is None:
        return None
    functional = AffineFunctional(
        witness[: config.dim],
        Fraction(0) if homogeneous else witness[config.dim],
    )
    if functional.induced_vector(config).signs != target.signs:
        raise RuntimeError("solver returned a functional with wrong signs")
    return functional


def _enumerate_patterns(
    points: Sequence[tuple[Fraction, ...]], homogeneous: bool
) -> set[tuple[int, ...]]:
    """All realizable sign patterns, by depth-first search over prefixes.

    A pattern refuted on a prefix of the points is refuted on every
    extension, so infeasible prefixes prune their whole subtree.  Patterns
    and their negations are realizable together (negate the functional), so
    only prefixes whose first nonzero sign is + are explored.
    """
    m = len(points)
    nvars = len(points[0]) + (0 if homogeneous else 1) if m else 0
    found: set[tuple[int, ...]] = set()

    def feasible(prefix: list[int]) -> bool:
        ge, eq = _pattern_rows(points[: len(prefix)], prefix, homogeneous)
        return _solve_int(ge, eq, nvars) is not None

    def walk(prefix: list[int], has_nonzero: bool):
        if not feasible(prefix):
            return
        if len(prefix) == m:
            pattern = tuple(prefix)
            found.add(pattern)
            found.add(tuple(-s for s in pattern))
            return
        choices = (-1, 0, 1) if has_nonzero else (0, 1)
        for s in choices:
            prefix.append(s)
            walk(prefix, has_nonzero or s != 0)
            prefix.pop()

    walk([], False)
    return found


def affine_com(config: PointConfiguration, max_points: int = 12) -> SignSystem:
    """The sign-vector system of all affine sign maps on the configuration."""
    if len(config) > max_points:
        raise ValueError(
            f"{len(config)} points exceed the enumeration guard ({max_points})"
        )
    return SignSystem(
        config.ground(), _enumerate_patterns(config.points, homogeneous=False)
    )


def linear_om(config: PointConfiguration, max_points: int = 12) -> SignSystem:
    """The sign-vector system of linear sign maps (offset fixed to zero).

    Always contains the all-zero vector, hence is an OM.
    """
    if len(config) > max_points:
        raise ValueError(
            f"{len(config)} points exceed the enumeration guard ({max_points})"
        )
    return SignSystem(
        config.ground(), _enumerate_patterns(config.points, homogeneous=True)
    )


def separating_functional(
    config: PointConfiguration,
    neg_ids: Iterable[str] | None = None,
    pos_ids: Iterable[str] | None = None,
) -> AffineFunctional | None:
    """A strict separator: a . v - alpha < 0 on ``neg_ids`` ("V") and > 0 on
    ``pos_ids`` ("W").  Defaults to the configuration's labels.  Unlabeled
    points are unconstrained."""
    vs = tuple(neg_ids) if neg_ids is not None else config.labeled("V")
    ws = tuple(pos_ids) if pos_ids is not None else config.labeled("W")
    vset, wset = set(vs), set(ws)
    if vset & wset:
        raise ValueError("the two sides overlap")
    ge = []
    for pid in vs:
        v = config.points[config.index(pid)]
        ge.append(_scale_row([-c for c in v] + [Fraction(1)], Fraction(1)))
    for pid in ws:
        w = config.points[config.index(pid)]
        ge.append(_scale_row(list(w) + [Fraction(-1)], Fraction(1)))
    witness = _solve_int(ge, [], config.dim + 1)
    if witness is None:
        return None
    functional = AffineFunctional(witness[: config.dim], witness[config.dim])
    for pid in vs:
        if functional.value_at(config.points[config.index(pid)]) >= 0:
            raise RuntimeError("separator fails strict re-evaluation")
    for pid in ws:
        if functional.value_at(config.points[config.index(pid)]) <= 0:
            raise RuntimeError("separator fails strict re-evaluation")
    return functional


def face_symmetry_functional(
    config: PointConfiguration,
    fa: AffineFunctional,
    fb: AffineFunctional,
) -> AffineFunctional:
    """A functional inducing X o (-Y) for the vectors X, Y induced by fa, fb.

    Shift fa against fb by half the critical ratio: with A_i, B_i the two
    value rows, eps = min |A_i| / |B_i| over the points where both are
    nonzero, and the result is (a, alpha) - eps/2 * (b, beta).  Where the
    ratio set is empty the shift scale is unconstrained and the functional
    is found by direct realization instead.
    """
    va = [fa.value_at(p) for p in config.points]
    vb = [fb.value_at(p) for p in config.points]
    ratios = [abs(a) / abs(b) for a, b in zip(va, vb) if a != 0 and b != 0]
    x = fa.induced_vector(config)
    y = fb.induced_vector(config)
    wanted = x.compose(-y)
    if not ratios:
        result = realize_sign_vector(config, wanted)
        if result is None:
            raise RuntimeError("composed sign vector is not realizable")
        return result
    eps = min(ratios)
    shifted = AffineFunctional(
        tuple(a - eps / 2 * b for a, b in zip(fa.coeffs, fb.coeffs)),
        fa.offset - eps / 2 * fb.offset,
    )
    if shifted.induced_vector(config).signs != wanted.signs:
        raise RuntimeError("shifted functional does not induce X o (-Y)")
    return shifted


def elimination_covector(
    config: PointConfiguration,
    fa: AffineFunctional,
    fb: AffineFunctional,
    element: str,
) -> SignVector:
    """The strong-elimination witness for the vectors induced by fa, fb at a
    separating element.

    Entry i is the sign of B_e * A_i - A_e * B_i (A, B the two value rows,
    e the separating point); the bilinear form vanishes at e and agrees with
    the composition outside the separator.  The orientation is normalized so
    that the value of fa at e is negative; in the opposite case the two
    functionals swap roles, which flips the form's sign.
    """
    idx = config.index(element)
    va = [fa.value_at(p) for p in config.points]
    vb = [fb.value_at(p) for p in config.points]
    ae, be = va[idx], vb[idx]
    if ae == 0 or be == 0 or sign_of(ae) == sign_of(be):
        raise ValueError("element is not in the separator of the two vectors")
    orient = 1 if ae < 0 else -1
    signs = tuple(
        sign_of(orient * (be * a - ae * b)) for a, b in zip(va, vb)
    )
    return SignVector(config.ground(), signs)


def affine_dependence(config: PointConfiguration) -> tuple[Fraction, ...] | None:
    """A nonzero rational vector with sum(l_i v_i) = 0 and sum(l_i) = 0,
    or None when the points are affinely independent.

    Deterministic: Gaussian elimination with first-nonzero pivots, free
    variables zero except the last one, which is set to 1.
    """
    m = len(config)
    rows = [[config.points[j][i] for j in range(m)] for i in range(config.dim)]
    rows.append([Fraction(1)] * m)
    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(m):
        src = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c] / rows[r][c]
                rows[k] = [rows[k][t] - f * rows[r][t] for t in range(m)]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(m) if c not in pivot_cols]
    if not free:
        return None
    lam = [Fraction(0)] * m
    lam[free[-1]] = Fraction(1)
    for rr, c in reversed(pivots):
        rest = sum(rows[rr][k] * lam[k] for k in range(m) if k != c)
        lam[c] = -rest / rows[rr][c]
    return tuple(lam)


def radon_partition(
    config: PointConfiguration,
) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """Two disjoint id sets whose convex hulls intersect, or None.

    Derived from an exact affine dependence; always exists when the number
    of points exceeds dim + 1.
    """
    lam = affine_dependence(config)
    if lam is None:
        return None
    part1 = tuple(i for i, l in zip(config.ids, lam) if l > 0)
    part2 = tuple(i for i, l in zip(config.ids, lam) if l < 0)
    return part1, part2


def affine_span_dimension(config: PointConfiguration) -> int:
    """Dimension of the affine hull of the points (-1 for no points)."""
    if len(config) == 0:
        return -1
    base = config.points[0]
    vecs = [
        tuple(c - b for c, b in zip(p, base)) for p in config.points[1:]
    ]
    rank = 0
    rows = [list(v) for v in vecs]
    for c in range(config.dim):
        src = next((k for k in range(rank, len(rows)) if rows[k][c] != 0), None)
        if src is None:
            continue
        rows[rank], rows[src] = rows[src], rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k][c] != 0:
                f = rows[k][c] / rows[rank][c]
                rows[k] = [rows[k][t] - f * rows[rank][t] for t in range(config.dim)]
        rank += 1
    return rank


def load_points(text: str) -> PointConfiguration:
    return PointConfiguration.from_json(json.loads(text))
