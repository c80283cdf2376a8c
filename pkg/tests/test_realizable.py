from fractions import Fraction
from itertools import product

import pytest

from comkit import (
    AffineFunctional,
    LinearConstraintSystem,
    PointConfiguration,
    SplitMix64,
    affine_com,
    affine_dependence,
    affine_span_dimension,
    directed_circuit,
    elimination_covector,
    face_symmetry_functional,
    linear_om,
    lp_feasible,
    parse_rational,
    radon_partition,
    rank,
    realize_sign_vector,
    separating_functional,
)
from comkit.signvectors import SignVector, sign_of

from conftest import config, sv


# -- rational parsing -----------------------------------------------------------


def test_parse_rational_accepts_exact_forms():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-3") == Fraction(-3)
    assert parse_rational(7) == Fraction(7)


@pytest.mark.parametrize("bad", [0.5, "0.5", "1/0", "1e3", None, True])
def test_parse_rational_rejects_inexact_forms(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


# -- exact feasibility ------------------------------------------------------------


def test_lp_infeasible_pair():
    s = LinearConstraintSystem(1)
    s.add_ge([1], 1)
    s.add_ge([-1], 0)
    assert lp_feasible(s) is None


def test_lp_single_bound_witness():
    s = LinearConstraintSystem(1)
    s.add_ge([1], 1)
    assert lp_feasible(s) == (Fraction(1),)


def test_lp_equality_substitution_witness():
    s = LinearConstraintSystem(2)
    s.add_ge([1, 1], 1)
    s.add_eq([1, -1], 0)
    assert lp_feasible(s) == (Fraction(1, 2), Fraction(1, 2))


def test_lp_empty_system_is_feasible_at_zero():
    assert lp_feasible(LinearConstraintSystem(3)) == (Fraction(0),) * 3


def test_lp_witnesses_satisfy_rows_exactly():
    rng = SplitMix64(5)
    solved = 0
    for _ in range(60):
        nv = rng.randint(1, 4)
        s = LinearConstraintSystem(nv)
        for _ in range(rng.randint(1, 6)):
            coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(nv)]
            rhs = Fraction(rng.randint(-3, 3))
            if rng.chance(1, 4):
                s.add_eq(coeffs, rhs)
            else:
                s.add_ge(coeffs, rhs)
        witness = lp_feasible(s)
        if witness is None:
            continue
        solved += 1
        for coeffs, relation, rhs in s.rows:
            value = sum(c * x for c, x in zip(coeffs, witness))
            assert value == rhs if relation == "eq" else value >= rhs
    assert solved > 10


# -- realizing sign vectors --------------------------------------------------------


def test_realize_two_points(line3):
    two = config([(0,), (1,)])
    functional = realize_sign_vector(two, sv("+-", two.ids))
    assert functional is not None
    assert functional.induced_vector(two).to_string() == "+-"


def test_realize_middle_point_blocked(line3):
    assert realize_sign_vector(line3, sv("+-+", line3.ids)) is None


def test_realize_point_on_hyperplane():
    one = config([(0,)])
    functional = realize_sign_vector(one, sv("0", one.ids))
    assert functional is not None
    assert functional.sign_at(one.points[0]) == 0


# -- system enumeration ------------------------------------------------------------


def _grid_affine_patterns(points, bound=6):
    """Independent oracle: grid-search small rational functionals."""
    values = sorted(
        {Fraction(n, d) for d in (1, 2, 3) for n in range(-bound * d, bound * d + 1)}
    )
    dim = len(points[0])
    assert dim == 1
    return {
        tuple(sign_of(a * p[0] - al) for p in points)
        for a in values
        for al in values
    }


def test_affine_com_two_points_is_full():
    m = affine_com(config([(0,), (1,)]))
    assert len(m) == 9


def test_affine_com_three_collinear_matches_grid_oracle(line3):
    m = affine_com(line3)
    assert len(m) == 13
    assert m.row_set() == frozenset(_grid_affine_patterns(line3.points))
    assert "+-+" not in m and "-+-" not in m
    assert m.is_com() and m.is_om()


def test_affine_com_single_point():
    m = affine_com(config([(2,)]))
    assert m.row_set() == {(1,), (-1,), (0,)}


def test_affine_com_size_guard():
    pts = config([(i,) for i in range(13)])
    with pytest.raises(ValueError):
        affine_com(pts)


def test_linear_om_examples():
    m = linear_om(config([(1,)]))
    assert m.row_set() == {(1,), (-1,), (0,)}
    loop = linear_om(config([(0, 0)]))
    assert loop.row_set() == {(0,)}
    cyclic = config([(1, -1, 0), (0, 1, -1), (-1, 0, 1)])
    assert linear_om(cyclic) == directed_circuit(3, cyclic.ids)


def test_linear_om_always_contains_zero():
    rng = SplitMix64(31)
    for _ in range(10):
        pts = [
            tuple(rng.randint(-3, 3) for _ in range(2))
            for _ in range(rng.randint(1, 5))
        ]
        m = linear_om(config(pts))
        assert m.is_om()


# -- classical separation -----------------------------------------------------------


def test_separating_functional_simple_split():
    c = config([(0, 0), (2, 0)], ids=("a", "b"))
    functional = separating_functional(c, ["a"], ["b"])
    assert functional is not None
    assert functional.value_at(c.points[0]) < 0
    assert functional.value_at(c.points[1]) > 0


def test_separating_functional_middle_point_blocked():
    c = config([(0, 0), (2, 0), (1, 0)], ids=("a", "b", "m"))
    assert separating_functional(c, ["a", "b"], ["m"]) is None


def test_separating_functional_empty_side():
    c = config([(0, 0), (5, 5)], ids=("a", "b"))
    assert separating_functional(c, ["a", "b"], []) is not None


def test_separating_functional_rejects_overlap():
    c = config([(0,)], ids=("a",))
    with pytest.raises(ValueError):
        separating_functional(c, ["a"], ["a"])


def test_separating_functional_uses_labels():
    c = config([(0,), (1,)], ids=("a", "b"), labels=("V", "W"))
    functional = separating_functional(c)
    assert functional is not None
    assert functional.value_at(c.points[0]) < 0


# -- the two witness formulas ---------------------------------------------------------


def test_face_symmetry_functional_frozen_example():
    two = config([(0,), (1,)])
    fa = AffineFunctional.of(["1"], "1/2")
    fb = AffineFunctional.of(["1"], "3/2")
    assert fa.induced_vector(two).to_string() == "-+"
    assert fb.induced_vector(two).to_string() == "--"
    shifted = face_symmetry_functional(two, fa, fb)
    assert shifted.coeffs == (Fraction(5, 6),)
    assert shifted.offset == Fraction(1, 4)
    assert shifted.induced_vector(two).to_string() == "-+"


def test_face_symmetry_functional_full_support_left():
    two = config([(0,), (1,)])
    fa = AffineFunctional.of(["1"], "1/2")  # (-, +), full support
    fb = AffineFunctional.of(["-1"], "-2")  # values 2, 1 -> (+, +)
    out = face_symmetry_functional(two, fa, fb)
    assert out.induced_vector(two) == fa.induced_vector(two)


def test_face_symmetry_functional_fallback_when_ratio_set_empty():
    two = config([(0,), (1,)])
    fa = AffineFunctional.of(["1"], "0")  # values 0, 1 -> (0, +)
    fb = AffineFunctional.of(["1"], "1")  # values -1, 0 -> (-, 0)
    out = face_symmetry_functional(two, fa, fb)
    want = fa.induced_vector(two).compose(-fb.induced_vector(two))
    assert out.induced_vector(two) == want


def test_face_symmetry_functional_property():
    rng = SplitMix64(77)
    checked = 0
    for _ in range(60):
        m = rng.randint(1, 5)
        d = rng.randint(1, 2)
        pts = set()
        while len(pts) < m:
            pts.add(tuple(rng.randint(-3, 3) for _ in range(d)))
        c = config(sorted(pts))
        fa = AffineFunctional.of(
            [rng.randint(-3, 3) for _ in range(d)], rng.randint(-3, 3)
        )
        fb = AffineFunctional.of(
            [rng.randint(-3, 3) for _ in range(d)], rng.randint(-3, 3)
        )
        out = face_symmetry_functional(c, fa, fb)
        want = fa.induced_vector(c).compose(-fb.induced_vector(c))
        assert out.induced_vector(c) == want
        checked += 1
    assert checked == 60


def test_elimination_covector_frozen_example(line3):
    fa = AffineFunctional.of(["1"], "1/2")
    fb = AffineFunctional.of(["-1"], "-3/2")
    x = fa.induced_vector(line3)
    y = fb.induced_vector(line3)
    assert x.to_string() == "-++"
    assert y.to_string() == "++-"
    assert x.separator(y) == {"p1", "p3"}
    z = elimination_covector(line3, fa, fb, "p1")
    assert z.to_string() == "0++"
    # agrees with the composition off the separator
    assert z["p2"] == x.compose(y)["p2"]
    # and is itself realizable
    assert realize_sign_vector(line3, z) is not None


def test_elimination_covector_requires_separating_element(line3):
    fa = AffineFunctional.of(["1"], "1/2")
    fb = AffineFunctional.of(["-1"], "-3/2")
    with pytest.raises(ValueError):
        elimination_covector(line3, fa, fb, "p2")


def test_elimination_covector_property():
    rng = SplitMix64(123)
    hits = 0
    while hits < 40:
        m = rng.randint(2, 5)
        d = rng.randint(1, 2)
        pts = set()
        while len(pts) < m:
            pts.add(tuple(rng.randint(-3, 3) for _ in range(d)))
        c = config(sorted(pts))
        fa = AffineFunctional.of(
            [rng.randint(-3, 3) for _ in range(d)], rng.randint(-3, 3)
        )
        fb = AffineFunctional.of(
            [rng.randint(-3, 3) for _ in range(d)], rng.randint(-3, 3)
        )
        x = fa.induced_vector(c)
        y = fb.induced_vector(c)
        sep = sorted(x.separator(y))
        if not sep:
            continue
        hits += 1
        comp = x.compose(y)
        for e in sep:
            z = elimination_covector(c, fa, fb, e)
            assert z[e] == 0
            for f in c.ids:
                if f not in set(sep):
                    assert z[f] == comp[f]
            assert realize_sign_vector(c, z) is not None


# -- radon partitions ---------------------------------------------------------------


def test_radon_three_collinear(line3):
    assert radon_partition(line3) == (("p1", "p3"), ("p2",))


def test_radon_square_diagonals():
    square = config([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert radon_partition(square) == (("p2", "p4"), ("p1", "p3"))


def test_radon_none_for_affinely_independent():
    assert radon_partition(config([(0,), (1,)])) is None
    assert affine_dependence(config([(0, 0), (1, 0), (0, 1)])) is None


def test_radon_partition_pattern_not_realizable():
    rng = SplitMix64(2024)
    for _ in range(15):
        d = rng.randint(1, 2)
        m = d + 2
        pts = set()
        while len(pts) < m:
            pts.add(tuple(rng.randint(-3, 3) for _ in range(d)))
        c = config(sorted(pts))
        parts = radon_partition(c)
        assert parts is not None
        p1, p2 = parts
        signs = tuple(
            -1 if i in set(p1) else (1 if i in set(p2) else 0) for i in c.ids
        )
        # minus on one class, plus on the other can never be induced
        assert realize_sign_vector(c, SignVector(c.ground(), signs)) is None


def test_affine_dependence_is_exact():
    c = config([(0,), (1,), (2,)])
    lam = affine_dependence(c)
    assert lam == (Fraction(1), Fraction(-2), Fraction(1))
    assert sum(lam) == 0
    assert sum(l * p[0] for l, p in zip(lam, c.points)) == 0


# -- rank of realizable systems ---------------------------------------------------------


def test_affine_rank_is_span_dimension_plus_one():
    for pts, expected_span in (
        ([(0,), (1,), (2,)], 1),
        ([(0, 0), (1, 0), (0, 1), (1, 1)], 2),
        ([(0, 0), (1, 1), (2, 2)], 1),
        ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)], 2),
    ):
        c = config(pts)
        assert affine_span_dimension(c) == expected_span
        assert rank(affine_com(c)) == expected_span + 1


def test_affine_tope_count_matches_dichotomy_counting():
    # points on the parabola are in general position; the number of
    # linearly separable dichotomies of m generic planar points is
    # 2 * (C(m-1,0) + C(m-1,1) + C(m-1,2)), which must equal the tope count
    from math import comb

    for m in (4, 5, 6, 7):
        pts = config([(t, t * t) for t in range(m)])
        m_sys = affine_com(pts)
        assert len(m_sys.topes()) == 2 * sum(comb(m - 1, k) for k in range(3))
        # full covector count: hyperplanes pinned through each generic
        # z-subset contribute the dichotomies of the remaining points with
        # d - z remaining degrees of freedom, plus the all-zero covector
        want = 1 + sum(
            comb(m, z) * 2 * sum(comb(m - z - 1, k) for k in range(2 - z + 1))
            for z in range(3)
        )
        assert len(m_sys) == want


def test_point_config_json_round_trip():
    c = config([(0, 1), (2, 3)], ids=("a", "b"), labels=("V", None))
    data = c.to_json()
    assert data["points"][0] == {"id": "a", "coords": ["0", "1"], "label": "V"}
    assert PointConfiguration.from_json(data) == c
