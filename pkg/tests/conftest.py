from fractions import Fraction

import pytest

from comkit import GroundSet, PointConfiguration, SignSystem, SignVector


def sv(text: str, elements=None) -> SignVector:
    ground = GroundSet(tuple(elements)) if elements else None
    return SignVector.from_string(text, ground)


def system(*covectors: str, elements=None) -> SignSystem:
    return SignSystem.from_strings(covectors, elements)


def config(points, ids=None, labels=None) -> PointConfiguration:
    return PointConfiguration.of(
        [[Fraction(c) for c in p] for p in points], ids=ids, labels=labels
    )


@pytest.fixture
def c2():
    return system("00", "+-", "-+")


@pytest.fixture
def line3():
    """Three collinear rational points 0, 1, 2 on the line."""
    return config([(0,), (1,), (2,)])
