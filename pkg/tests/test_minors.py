from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from comkit import (
    SignSystem,
    SplitMix64,
    contraction,
    deletion,
    directed_circuit,
    face_restriction,
    full_system,
    is_shattered,
    rank,
    reorient_system,
)

from conftest import system


def test_contraction_of_circuit_drops_to_smaller_circuit():
    c3 = directed_circuit(3)
    assert contraction(c3, {"e3"}) == directed_circuit(2)
    assert contraction(c3, set()) == c3
    assert contraction(c3, {"e2", "e3"}) == system("0", elements=("e1",))


def test_deletion_of_circuit_projects_everything():
    c3 = directed_circuit(3)
    out = deletion(c3, {"e3"})
    assert out == full_system(2)
    assert deletion(c3, set()) == c3
    assert deletion(system("+-"), {"e1"}) == system("-", elements=("e2",))


def test_minor_errors_on_non_subset():
    with pytest.raises(ValueError):
        contraction(directed_circuit(2), {"zz"})
    with pytest.raises(ValueError):
        deletion(directed_circuit(2), {"zz"})
    with pytest.raises(ValueError):
        reorient_system(directed_circuit(2), {"zz"})


def test_reorient_system():
    c2 = directed_circuit(2)
    flipped = reorient_system(c2, {"e1"})
    assert flipped == system("00", "--", "++")
    assert reorient_system(c2, set()) == c2
    c3 = directed_circuit(3)
    assert reorient_system(reorient_system(c3, {"e1", "e2"}), {"e1", "e2"}) == c3


def test_reorient_preserves_structure():
    c4 = directed_circuit(4)
    flipped = reorient_system(c4, {"e2", "e4"})
    assert len(flipped) == len(c4)
    assert flipped.is_com() and flipped.is_om()
    assert flipped.is_simple() == c4.is_simple()
    assert rank(flipped) == rank(c4)


def test_chained_minors_compose():
    c5 = directed_circuit(5)
    assert contraction(contraction(c5, {"e1"}), {"e3"}) == contraction(
        c5, {"e1", "e3"}
    )
    assert deletion(deletion(c5, {"e2"}), {"e5"}) == deletion(c5, {"e2", "e5"})
    assert contraction(deletion(c5, {"e1"}), {"e4"}) == deletion(
        contraction(c5, {"e4"}), {"e1"}
    )


def test_com_closed_under_minors():
    c4 = directed_circuit(4)
    for subset in ({"e1"}, {"e2", "e4"}, {"e1", "e2", "e3"}):
        assert contraction(c4, subset).is_com()
        assert deletion(c4, subset).is_com()


def test_face_restriction_preserves_com_but_not_zero():
    c3 = directed_circuit(3)
    restricted = face_restriction(c3, "e1", 1)
    assert restricted.is_com()
    assert not restricted.is_om()
    assert (0, 0) not in restricted.row_set()


def test_face_restriction_rejects_zero_sign():
    with pytest.raises(ValueError):
        face_restriction(directed_circuit(2), "e1", 0)


# -- shattering and rank --------------------------------------------------------


def test_is_shattered_examples():
    c3 = directed_circuit(3)
    assert is_shattered(c3, {"e1", "e2"})
    assert not is_shattered(c3, {"e1", "e2", "e3"})
    assert is_shattered(c3, set())
    empty = SignSystem(c3.ground)
    assert not is_shattered(empty, set())


def test_shattering_downward_closed():
    c4 = directed_circuit(4)
    for size in range(5):
        for subset in combinations(c4.ground.elements, size):
            if is_shattered(c4, subset):
                for smaller in combinations(subset, max(0, size - 1)):
                    assert is_shattered(c4, smaller)


def _naive_rank(m):
    best = -1
    n = len(m.ground)
    for size in range(n + 1):
        if any(
            is_shattered(m, subset)
            for subset in combinations(m.ground.elements, size)
        ):
            best = size
    return best


def test_rank_examples():
    assert rank(full_system(2)) == 2
    assert rank(system("00")) == 0
    for n in range(2, 7):
        assert rank(directed_circuit(n)) == n - 1
    with pytest.raises(ValueError):
        rank(SignSystem(full_system(1).ground))


def test_rank_matches_exhaustive_search():
    rng = SplitMix64(99)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = {
            tuple(rng.randint(-1, 1) for _ in range(n))
            for _ in range(rng.randint(1, 18))
        }
        m = SignSystem(full_system(n).ground, rows)
        assert rank(m) == _naive_rank(m)


def test_rank_monotone_under_deletion():
    c5 = directed_circuit(5)
    for subset in ({"e1"}, {"e2", "e4"}):
        assert rank(deletion(c5, subset)) <= rank(c5)


# -- directed circuits ------------------------------------------------------------


def test_directed_circuit_small_cases():
    assert directed_circuit(2) == system("00", "+-", "-+")
    c3 = directed_circuit(3)
    assert len(c3) == 13
    assert "+-+" in c3
    assert "+++" not in c3
    assert directed_circuit(1) == system("0")
    with pytest.raises(ValueError):
        directed_circuit(0)


def test_directed_circuit_counts_and_structure():
    for n in range(2, 7):
        cn = directed_circuit(n)
        assert len(cn) == 3**n - 2 ** (n + 1) + 2
        assert len(cn.topes()) == 2**n - 2
        # independent count: enumerate the defining predicate directly
        brute = sum(
            1
            for v in product((-1, 0, 1), repeat=n)
            if v == (0,) * n or (any(s > 0 for s in v) and any(s < 0 for s in v))
        )
        assert len(cn) == brute


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5))
def test_directed_circuit_is_simple_om(n):
    cn = directed_circuit(n)
    assert cn.is_com() and cn.is_om()
    assert cn.is_simple() == (n >= 3)
