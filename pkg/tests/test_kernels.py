"""Backend parity: the compiled kernels must agree with the pure-Python ones,
and both must agree with a brute-force oracle on small systems."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from comkit import SplitMix64, directed_circuit, full_system
from comkit._kernels import _pykernels

_ckernels = pytest.importorskip("comkit._kernels._ckernels")

KERNELS = ("compose_closed", "face_symmetry_closed", "strong_elimination_holds")


# -- brute-force oracle -------------------------------------------------------


def naive_compose(rows):
    rset = set(rows)
    return all(
        tuple(a if a else b for a, b in zip(x, y)) in rset
        for x in rows
        for y in rows
    )


def naive_face_symmetry(rows):
    rset = set(rows)
    return all(
        tuple(a if a else -b for a, b in zip(x, y)) in rset
        for x in rows
        for y in rows
    )


def naive_strong_elimination(rows):
    if not rows:
        return True
    n = len(rows[0])
    for x in rows:
        for y in rows:
            sep = [e for e in range(n) if x[e] and x[e] == -y[e]]
            comp = tuple(a if a else b for a, b in zip(x, y))
            for e in sep:
                if not any(
                    z[e] == 0
                    and all(z[f] == comp[f] for f in range(n) if f not in sep)
                    for z in rows
                ):
                    return False
    return True


ORACLES = {
    "compose_closed": naive_compose,
    "face_symmetry_closed": naive_face_symmetry,
    "strong_elimination_holds": naive_strong_elimination,
}


def random_rows(seed, n, count):
    rng = SplitMix64(seed)
    rows = {
        tuple(rng.randint(-1, 1) for _ in range(n)) for _ in range(count)
    }
    return sorted(rows)


@pytest.mark.parametrize("kernel", KERNELS)
@pytest.mark.parametrize("seed", range(40))
def test_backends_match_oracle_on_random_systems(kernel, seed):
    rng = SplitMix64(seed * 1000 + 17)
    n = rng.randint(1, 4)
    count = rng.randint(1, 20)
    rows = random_rows(seed, n, count)
    expected = ORACLES[kernel](rows)
    assert getattr(_pykernels, kernel)(rows) == expected
    assert getattr(_ckernels, kernel)(rows) == expected


@pytest.mark.parametrize("kernel", KERNELS)
def test_backends_match_on_structured_systems(kernel):
    for rows in (
        directed_circuit(4).rows(),
        full_system(3).rows(),
        [()],
        [],
        [(0, 0, 0)],
        sorted(product((-1, 1), repeat=3)),
    ):
        assert getattr(_pykernels, kernel)(rows) == getattr(_ckernels, kernel)(rows)


@pytest.mark.parametrize("kernel", KERNELS)
def test_backends_agree_on_large_circuits(kernel):
    # big separators push the compiled scan through both existence
    # strategies (candidate odometer and zero-row scan)
    for n in (5, 6):
        rows = directed_circuit(n).rows()
        assert getattr(_ckernels, kernel)(rows) is True
        assert getattr(_pykernels, kernel)(rows) is True
    # and a holed variant that must fail strong elimination
    holed = [r for r in directed_circuit(5).rows() if r.count(0) != 4]
    assert getattr(_pykernels, kernel)(holed) == getattr(_ckernels, kernel)(holed)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.tuples(*[st.sampled_from((-1, 0, 1))] * n),
            min_size=0,
            max_size=15,
            unique=True,
        )
    )
)
def test_backend_parity_property(rows):
    rows = sorted(rows)
    for kernel in KERNELS:
        expected = ORACLES[kernel](rows)
        assert getattr(_pykernels, kernel)(rows) == expected
        assert getattr(_ckernels, kernel)(rows) == expected


def test_dispatcher_reports_backend():
    from comkit import kernel_backend

    assert kernel_backend in ("compiled", "python")
