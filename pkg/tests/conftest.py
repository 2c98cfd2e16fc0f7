"""Shared fixtures: fundamental units of small real quadratic fields."""

from __future__ import annotations

from fractions import Fraction

import pytest

from lenspec.algnum import QuadraticElement


@pytest.fixture(scope="session")
def fundamental_units() -> dict[int, QuadraticElement]:
    """Fundamental units epsilon_D for a few small squarefree D (norm +-1,
    checked on construction)."""
    units = {
        2: QuadraticElement(1, 1, 2),
        3: QuadraticElement(2, 1, 3),
        5: QuadraticElement(Fraction(1, 2), Fraction(1, 2), 5),
        6: QuadraticElement(5, 2, 6),
        7: QuadraticElement(8, 3, 7),
        10: QuadraticElement(3, 1, 10),
    }
    for d, u in units.items():
        assert u.d == d
        assert abs(u.norm()) == 1, (d, u.norm())
    return units
