"""Deterministic corpus generation for the audit harness.

Instances derive from random rational point configurations: a realizable
system (affine or linear sign maps) followed by a short chain of random
minors (contraction, deletion, face restriction) and a random reorientation.
Face restriction is what produces COMs that are not OMs, systems whose
contractions are empty, and fully empty covector sets; plain contraction,
deletion and reorientation all preserve the zero covector of a realizable
system.

Randomness comes from an explicit splitmix64 stream so corpora are
reproducible across platforms from (seed, index) alone:

* state' = (state + 0x9E3779B97F4A7C15) mod 2**64
* output = mix(state') with the murmur-style finalizer
  (xor-shift 30, * 0xBF58476D1CE4E5B9, xor-shift 27, * 0x94D049BB133111EB,
  xor-shift 31)
* the stream for instance ``index`` starts at state = seed + index * gamma.

Bounded draws use rejection sampling, so every draw is exactly uniform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .minors import contraction, deletion, face_restriction, rank, reorient_system
from .realizable import PointConfiguration, affine_com, linear_om
from .separation import SeparationQuery, all_targets  # noqa: F401  (re-export)
from .signvectors import SignSystem

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """The splitmix64 generator; state advances by the golden-ratio gamma."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & MASK64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform draw from [0, n) by rejection."""
        if n <= 0:
            raise ValueError("need a positive bound")
        limit = (MASK64 + 1) - (MASK64 + 1) % n
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform draw from the inclusive range [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def subset(self, seq, size: int) -> list:
        pool = list(seq)
        out = []
        for _ in range(size):
            out.append(pool.pop(self.below(len(pool))))
        return out


def instance_rng(seed: int, index: int) -> SplitMix64:
    return SplitMix64((seed + index * GAMMA) & MASK64)


@dataclass(frozen=True)
class CorpusSpec:
    """Everything the corpus stream depends on; generation is a pure
    function of this record."""

    seed: int = 7
    count: int = 300
    max_points: int = 7
    max_dim: int = 3
    coord_bound: int = 4
    minor_depth: int = 2

    def __post_init__(self):
        if self.count < 1 or self.max_points < 1 or self.max_dim < 1:
            raise ValueError("spec bounds must be positive")
        if self.max_points > 8 or self.max_dim > 3:
            raise ValueError("spec caps: at most 8 points in dimension at most 3")
        if self.coord_bound < 1 or self.minor_depth < 0:
            raise ValueError("spec bounds must be positive")


def _grid_points(rng: SplitMix64, m: int, free_dims: int, full_dim: int, bound: int):
    """m distinct integer points; coordinates beyond free_dims are a shared
    random tail (the lower-dimensional flat used for degenerate inputs)."""
    capacity = (2 * bound + 1) ** free_dims
    if capacity < m:
        raise ValueError(f"cannot place {m} distinct points in that flat")
    tail = tuple(rng.randint(-bound, bound) for _ in range(full_dim - free_dims))
    seen = set()
    points = []
    attempts = 0
    while len(points) < m:
        head = tuple(rng.randint(-bound, bound) for _ in range(free_dims))
        attempts += 1
        if head in seen:
            if attempts > 64 * m:
                # deterministic sweep fallback for nearly-full grids
                for cand in product(range(-bound, bound + 1), repeat=free_dims):
                    if cand not in seen:
                        head = cand
                        break
            else:
                continue
        seen.add(head)
        points.append(head + tail)
    return points


def random_point_config(
    seed: int, index: int, m: int, d: int, bound: int
) -> PointConfiguration:
    """Deterministic configuration of m distinct labeled points in [-B, B]^d.

    With probability 1/4 (and d >= 2) the points are snapped to a random
    axis-parallel flat of lower dimension, so collinear and coplanar inputs
    are a deliberate part of every corpus.
    """
    if m < 1 or d < 1 or bound < 1:
        raise ValueError("need positive point count, dimension and bound")
    rng = instance_rng(seed, index)
    return _config_from_rng(rng, m, d, bound)


def _config_from_rng(rng: SplitMix64, m: int, d: int, bound: int) -> PointConfiguration:
    free = d
    if d >= 2 and rng.chance(1, 4):
        lower = rng.randint(1, d - 1)
        if (2 * bound + 1) ** lower >= m:
            free = lower
    points = _grid_points(rng, m, free, d, bound)
    labels = tuple("V" if rng.chance(1, 2) else "W" for _ in range(m))
    return PointConfiguration.of(points, labels=labels, dim=d)


@dataclass(frozen=True)
class CorpusInstance:
    seed: int
    index: int
    system: SignSystem
    tags: tuple[str, ...]
    config: PointConfiguration

    def to_json(self) -> dict:
        body = {"seed": self.seed, "index": self.index}
        body.update(self.system.to_json())
        body["tags"] = list(self.tags)
        return body


def _tags_for(system: SignSystem) -> tuple[str, ...]:
    tags = []
    if len(system) == 0:
        tags.append("empty")
    else:
        if system.zero_vector().signs in system.row_set():
            tags.append("om")
        else:
            tags.append("com-not-om")
        if len(system.ground) == rank(system) + 1:
            tags.append("tight-rank")
    if not system.is_simple():
        tags.append("non-simple")
    return tuple(sorted(tags))


def com_corpus(spec: CorpusSpec) -> Iterator[CorpusInstance]:
    """The deterministic instance stream for a spec.

    Every emitted system is checked against the COM axioms; a failure would
    be a bug in the minor operations and raises immediately with the
    (seed, index) needed to reproduce it.
    """
    for index in range(spec.count):
        rng = instance_rng(spec.seed, index)
        m = rng.randint(1, spec.max_points)
        d = rng.randint(1, spec.max_dim)
        config = _config_from_rng(rng, m, d, spec.coord_bound)
        if rng.chance(1, 3):
            system = linear_om(config)
        else:
            system = affine_com(config)
        for _ in range(rng.randint(0, spec.minor_depth)):
            n = len(system.ground)
            if n <= 1:
                break
            kind = rng.choice(("contract", "delete", "restrict"))
            if kind == "restrict":
                element = rng.choice(system.ground.elements)
                sign = rng.choice((1, -1))
                system = face_restriction(system, element, sign)
            else:
                size = 1 if n <= 2 or not rng.chance(1, 4) else 2
                subset = rng.subset(system.ground.elements, size)
                op = contraction if kind == "contract" else deletion
                system = op(system, subset)
        flip = [e for e in system.ground.elements if rng.chance(1, 2)]
        system = reorient_system(system, flip)
        if not system.is_com():
            raise RuntimeError(
                f"corpus instance (seed={spec.seed}, index={index}) is not a COM"
            )
        yield CorpusInstance(spec.seed, index, system, _tags_for(system), config)


def dump_corpus(spec: CorpusSpec, stream) -> int:
    """Write the corpus as JSON lines; returns the instance count."""
    count = 0
    for instance in com_corpus(spec):
        stream.write(json.dumps(instance.to_json()) + "\n")
        count += 1
    return count
