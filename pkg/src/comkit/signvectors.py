"""Sign vectors, sign-vector systems, and the covector axioms.

A sign vector assigns one of ``+``, ``0``, ``-`` to every element of a fixed
finite ground set.  Signs are stored as the integers ``+1``, ``0``, ``-1`` so
that negation is arithmetic negation and the sign product of two entries is
ordinary multiplication.  A :class:`SignSystem` is a ground set together with
a finite set of sign vectors ("covectors"); the three closure axioms checked
here are

* composition:        for all X, Y in L, X o Y is in L,
* face symmetry:      for all X, Y in L, X o (-Y) is in L,
* strong elimination: for all X, Y in L and every separating element e there
  is a Z in L with Z_e = 0 that agrees with X o Y outside the separator.

Face symmetry implies composition.  A system satisfying face symmetry and
strong elimination is a complex of oriented matroids (COM); a COM containing
the all-zero vector is an oriented matroid (OM).

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernels

MINUS, ZERO, PLUS = -1, 0, 1

_SIGN_TO_CHAR = {PLUS: "+", ZERO: "0", MINUS: "-"}
_CHAR_TO_SIGN = {"+": PLUS, "0": ZERO, "-": MINUS}


class GroundMismatchError(ValueError):
    """Raised when an operation mixes sign vectors on different ground sets."""


def sign_of(x) -> int:
    """Sign of a number as +1, 0 or -1."""
    return (x > 0) - (x < 0)


def default_elements(n: int) -> tuple[str, ...]:
    """Element identifiers e1..en used when a caller does not provide any."""
    return tuple(f"e{i + 1}" for i in range(n))


@dataclass(frozen=True)
class GroundSet:
    """An ordered finite sequence of distinct element identifiers.

    The order is fixed at construction and defines the serialization order of
    every sign vector on the ground set.
    """

    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("ground-set elements must be distinct")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, element: str) -> bool:
        return element in self._index

    @property
    def _index(self) -> dict[str, int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.elements)}
            self.__dict__["_index_cache"] = idx
        return idx

    def position(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise KeyError(f"element {element!r} is not in the ground set") from None

    def positions(self, subset: Iterable[str]) -> frozenset[int]:
        """Indices of a subset; raises if any element is unknown."""
        idx = self._index
        out = set()
        for e in subset:
            if e not in idx:
                raise ValueError(f"element {e!r} is not in the ground set")
            out.add(idx[e])
        return frozenset(out)

    def without(self, subset: Iterable[str]) -> "GroundSet":
        drop = self.positions(subset)
        return GroundSet(tuple(e for i, e in enumerate(self.elements) if i not in drop))


@dataclass(frozen=True)
class SignVector:
    """A total assignment of signs to the elements of a ground set."""

    ground: GroundSet
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        if len(self.signs) != len(self.ground):
            raise ValueError("sign vector length does not match the ground set")
        if any(s not in (MINUS, ZERO, PLUS) for s in self.signs):
            raise ValueError("signs must be -1, 0 or +1")

    @classmethod
    def from_string(cls, text: str, ground: GroundSet | None = None) -> "SignVector":
        """Parse a string over the alphabet ``+ - 0``, one character per element."""
        if ground is None:
            ground = GroundSet(default_elements(len(text)))
        try:
            signs = tuple(_CHAR_TO_SIGN[c] for c in text)
        except KeyError as exc:
            raise ValueError(f"invalid sign character {exc.args[0]!r}") from None
        return cls(ground, signs)

    def to_string(self) -> str:
        return "".join(_SIGN_TO_CHAR[s] for s in self.signs)

    def __str__(self) -> str:
        return self.to_string()

    def __getitem__(self, element: str) -> int:
        return self.signs[self.ground.position(element)]

    def _require_same_ground(self, other: "SignVector"):
        if self.ground != other.ground:
            raise GroundMismatchError("sign vectors live on different ground sets")

    def compose(self, other: "SignVector") -> "SignVector":
        """X o Y: take X's entry where nonzero, otherwise Y's."""
        self._require_same_ground(other)
        return SignVector(
            self.ground,
            tuple(x if x else y for x, y in zip(self.signs, other.signs)),
        )

    def __neg__(self) -> "SignVector":
        return SignVector(self.ground, tuple(-s for s in self.signs))

    def separator(self, other: "SignVector") -> frozenset[str]:
        """Elements where the two vectors carry opposite nonzero signs."""
        self._require_same_ground(other)
        return frozenset(
            e
            for e, x, y in zip(self.ground.elements, self.signs, other.signs)
            if x and x == -y
        )

    @property
    def support(self) -> frozenset[str]:
        return frozenset(
            e for e, s in zip(self.ground.elements, self.signs) if s
        )

    @property
    def is_zero(self) -> bool:
        return not any(self.signs)

    def drop(self, subset: Iterable[str]) -> "SignVector":
        """Restriction to the complement of ``subset`` (entries copied over)."""
        gone = self.ground.positions(subset)
        return SignVector(
            self.ground.without(self.ground.elements[i] for i in gone),
            tuple(s for i, s in enumerate(self.signs) if i not in gone),
        )

    def reorient(self, subset: Iterable[str]) -> "SignVector":
        """Negate the entries on ``subset``; an involution for fixed subset."""
        flip = self.ground.positions(subset)
        return SignVector(
            self.ground,
            tuple(-s if i in flip else s for i, s in enumerate(self.signs)),
        )


def compose(x: SignVector, y: SignVector) -> SignVector:
    return x.compose(y)


def negate(x: SignVector) -> SignVector:
    return -x


def separator(x: SignVector, y: SignVector) -> frozenset[str]:
    return x.separator(y)


def support(x: SignVector) -> frozenset[str]:
    return x.support


class SignSystem:
    """A ground set plus a finite set of sign vectors on it (set semantics).

    Covectors may be given as :class:`SignVector` instances, raw sign tuples,
    or strings like ``"+-0"``.  Duplicates collapse.  The empty covector set
    is permitted; it vacuously satisfies all three axioms.
    """

    __slots__ = ("ground", "_rows", "_sorted", "_vectors")

    def __init__(self, ground: GroundSet, covectors: Iterable = ()):
        rows = set()
        n = len(ground)
        for cov in covectors:
            if isinstance(cov, SignVector):
                if cov.ground != ground:
                    raise GroundMismatchError("covector on a different ground set")
                rows.add(cov.signs)
            elif isinstance(cov, str):
                rows.add(SignVector.from_string(cov, ground).signs)
            else:
                row = tuple(cov)
                if len(row) != n or any(s not in (-1, 0, 1) for s in row):
                    raise ValueError(f"invalid covector {cov!r}")
                rows.add(row)
        self.ground = ground
        self._rows = frozenset(rows)
        self._sorted = None
        self._vectors = None

    @classmethod
    def from_strings(
        cls, covectors: Iterable[str], elements: Iterable[str] | None = None
    ) -> "SignSystem":
        covectors = list(covectors)
        if elements is None:
            if not covectors:
                raise ValueError("cannot infer a ground set from no covectors")
            elements = default_elements(len(covectors[0]))
        return cls(GroundSet(tuple(elements)), covectors)

    # -- set-like surface ---------------------------------------------------

    def __len__(self) -> int:
        return len(self._rows)

    def __bool__(self) -> bool:
        # A system is always a usable value; do not confuse emptiness with
        # falsehood in callers.
        return True

    def __contains__(self, item) -> bool:
        if isinstance(item, SignVector):
            return item.ground == self.ground and item.signs in self._rows
        if isinstance(item, str):
            return SignVector.from_string(item, self.ground).signs in self._rows
        return tuple(item) in self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignSystem):
            return NotImplemented
        return self.ground == other.ground and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ground, self._rows))

    def __repr__(self) -> str:
        return f"SignSystem({list(self.ground.elements)!r}, {len(self)} covectors)"

    def rows(self) -> list[tuple[int, ...]]:
        """Covectors as sign tuples in canonical (lexicographic) order."""
        if self._sorted is None:
            self._sorted = sorted(self._rows)
        return self._sorted

    def row_set(self) -> frozenset[tuple[int, ...]]:
        return self._rows

    @property
    def covectors(self) -> frozenset[SignVector]:
        if self._vectors is None:
            self._vectors = frozenset(
                SignVector(self.ground, row) for row in self._rows
            )
        return self._vectors

    def vector(self, row) -> SignVector:
        return SignVector(self.ground, tuple(row))

    # -- axioms ---------------------------------------------------------------

    def is_composition_closed(self) -> bool:
        """Axiom (C): closed under composition (exhaustive pair scan)."""
        return _kernels.compose_closed(self.rows())

    def is_face_symmetric(self) -> bool:
        """Axiom (FS): X o (-Y) stays in the system for every pair."""
        return _kernels.face_symmetry_closed(self.rows())

    def has_strong_elimination(self) -> bool:
        """Axiom (SE): separators can be eliminated within the system."""
        return _kernels.strong_elimination_holds(self.rows())

    def is_com(self) -> bool:
        """Face symmetry plus strong elimination."""
        return self.is_face_symmetric() and self.has_strong_elimination()

    def is_om(self) -> bool:
        """A COM containing the all-zero vector."""
        return (0,) * len(self.ground) in self._rows and self.is_com()

    def is_simple(self) -> bool:
        """Every element, and every sign product of two elements, hits +, - and 0."""
        n = len(self.ground)
        rows = self.rows()
        for i in range(n):
            if {r[i] for r in rows} != {-1, 0, 1}:
                return False
        for i in range(n):
            for j in range(i + 1, n):
                if {r[i] * r[j] for r in rows} != {-1, 0, 1}:
                    return False
        return True

    def is_negation_closed(self) -> bool:
        rows = self._rows
        return all(tuple(-s for s in r) in rows for r in rows)

    def topes(self) -> frozenset[SignVector]:
        """Covectors of full support."""
        return frozenset(
            SignVector(self.ground, r) for r in self._rows if all(r)
        )

    def zero_vector(self) -> SignVector:
        return SignVector(self.ground, (0,) * len(self.ground))

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        """The interchange encoding: element list plus covector strings."""
        return {
            "elements": list(self.ground.elements),
            "covectors": [
                "".join(_SIGN_TO_CHAR[s] for s in row) for row in self.rows()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SignSystem":
        if not isinstance(data, dict) or "elements" not in data or "covectors" not in data:
            raise ValueError("system encoding needs 'elements' and 'covectors'")
        ground = GroundSet(tuple(str(e) for e in data["elements"]))
        return cls(ground, [str(c) for c in data["covectors"]])

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "SignSystem":
        return cls.from_json(json.loads(text))


def system_equals(a: SignSystem, b: SignSystem) -> bool:
    """Equality of ground sets (as ordered sequences) and covector sets."""
    return a == b


def full_system(n: int, elements: Iterable[str] | None = None) -> SignSystem:
    """All 3**n sign vectors on n elements."""
    from itertools import product

    ground = GroundSet(tuple(elements) if elements else default_elements(n))
    return SignSystem(ground, product((-1, 0, 1), repeat=n))
