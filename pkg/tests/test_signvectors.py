import json

import pytest
from hypothesis import given, strategies as st

from comkit import (
    GroundMismatchError,
    GroundSet,
    SignSystem,
    SignVector,
    full_system,
    system_equals,
)

from conftest import sv, system


signs = st.sampled_from((-1, 0, 1))


def vectors(n):
    return st.builds(
        lambda s: SignVector(GroundSet(tuple(f"e{i+1}" for i in range(n))), tuple(s)),
        st.lists(signs, min_size=n, max_size=n),
    )


def vector_triples():
    return st.integers(1, 5).flatmap(
        lambda n: st.tuples(vectors(n), vectors(n), vectors(n))
    )


# -- elementary operations ----------------------------------------------------


def test_compose_forced_by_definition():
    assert sv("+00").compose(sv("--0")) == sv("+-0")


def test_compose_idempotent():
    x = sv("0+-")
    assert x.compose(x) == x


def test_zero_is_left_identity():
    assert sv("00").compose(sv("-+")) == sv("-+")


def test_compose_ground_mismatch():
    with pytest.raises(GroundMismatchError):
        sv("+-").compose(sv("+-0"))


def test_negate():
    assert -sv("+0-") == sv("-0+")
    assert -(-sv("++")) == sv("++")
    assert -sv("000") == sv("000")


def test_separator():
    assert sv("+-0").separator(sv("--+")) == {"e1"}
    x = sv("0+-+")
    assert x.separator(x) == frozenset()
    assert sv("++").separator(sv("--")) == {"e1", "e2"}


def test_support():
    assert sv("+0-").support == {"e1", "e3"}
    assert sv("00").support == frozenset()
    assert sv("+-").support == {"e1", "e2"}


def test_drop():
    out = sv("+-0").drop({"e2"})
    assert out.ground.elements == ("e1", "e3")
    assert out.to_string() == "+0"
    assert sv("+-").drop(set()) == sv("+-")
    empty = sv("+-").drop({"e1", "e2"})
    assert empty.ground.elements == ()
    assert empty.signs == ()


def test_drop_requires_subset():
    with pytest.raises(ValueError):
        sv("+-").drop({"e9"})


def test_reorient():
    assert sv("+-+").reorient({"e2"}) == sv("+++")
    x = sv("0-+")
    assert x.reorient(set()) == x
    assert sv("0+").reorient({"e2"}).reorient({"e2"}) == sv("0+")


@given(vector_triples())
def test_compose_associative_idempotent(xyz):
    x, y, z = xyz
    assert x.compose(y).compose(z) == x.compose(y.compose(z))
    assert x.compose(x) == x
    zero = SignVector(x.ground, (0,) * len(x.ground))
    assert zero.compose(y) == y


@given(vector_triples())
def test_negate_distributes_over_compose(xyz):
    x, y, _ = xyz
    assert -(x.compose(y)) == (-x).compose(-y)


@given(vector_triples())
def test_separator_inside_support_intersection(xyz):
    x, y, _ = xyz
    assert x.separator(y) <= (x.support & y.support)
    assert x.separator(y) == y.separator(x)


# -- axiom checks -------------------------------------------------------------


def test_c2_satisfies_all_axioms(c2):
    assert c2.is_composition_closed()
    assert c2.is_face_symmetric()
    assert c2.has_strong_elimination()
    assert c2.is_com() and c2.is_om()
    # e1 and e2 are antiparallel (X_1 = -X_2 throughout), so the sign
    # product never hits +; the two-element circuit is not simple.
    assert not c2.is_simple()


def test_composition_failure_detected():
    m = system("+0", "0+")
    assert not m.is_composition_closed()
    assert not m.is_face_symmetric()


def test_face_symmetry_failure_detected():
    # (+0) o -(0+) = (+-) is absent
    m = system("+0", "0+", "++")
    assert m.is_composition_closed()
    assert not m.is_face_symmetric()


def test_empty_system_vacuous():
    m = SignSystem(GroundSet(("e1", "e2")))
    assert m.is_composition_closed()
    assert m.is_face_symmetric()
    assert m.has_strong_elimination()
    assert m.is_com() and not m.is_om()


def test_strong_elimination_needs_zero_entry():
    m = system("+", "-")
    assert not m.has_strong_elimination()


def test_strong_elimination_vacuous_for_singleton():
    m = system("+-")
    assert m.has_strong_elimination()


def test_face_symmetry_implies_composition():
    # scan a batch of small systems: whenever FS holds, C holds
    from itertools import combinations, product

    n = 2
    all_vecs = list(product((-1, 0, 1), repeat=n))
    checked = 0
    for size in (1, 2, 3):
        for rows in combinations(all_vecs, size):
            m = SignSystem(GroundSet(("e1", "e2")), rows)
            if m.is_face_symmetric():
                checked += 1
                assert m.is_composition_closed()
    assert checked > 0


def test_is_om_requires_zero():
    m = system("+-", "-+")
    assert not m.is_om()


def test_simplicity():
    assert not system("0").is_simple()
    assert full_system(2).is_simple()
    # parallel elements: sign product never -
    assert not system("++", "--", "00").is_simple()


def test_full_system_axioms():
    m = full_system(2)
    assert m.is_com() and m.is_om() and m.is_simple()


def test_topes():
    assert {t.to_string() for t in system("00").topes()} == set()
    assert {t.to_string() for t in full_system(1).topes()} == {"+", "-"}


def test_system_equality_is_set_like(c2):
    reordered = system("-+", "00", "+-")
    assert c2 == reordered
    assert system_equals(c2, reordered)
    assert c2 != full_system(2)
    assert len(full_system(2)) == 9 and len(c2) == 3


def test_system_equality_cares_about_ground_order(c2):
    other = system("00", "-+", "+-", elements=("e2", "e1"))
    assert c2 != other


# -- serialization --------------------------------------------------------------


def test_json_round_trip(c2):
    data = c2.to_json()
    assert data == {"elements": ["e1", "e2"], "covectors": ["-+", "00", "+-"]}
    assert SignSystem.from_json(json.loads(json.dumps(data))) == c2


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        SignSystem.from_json({"covectors": []})
    with pytest.raises(ValueError):
        SignSystem.from_strings(["+?"])


def test_ground_set_rejects_duplicates():
    with pytest.raises(ValueError):
        GroundSet(("e1", "e1"))
