import itertools
import random
from fractions import Fraction

import pytest

from lenspec.algnum import quad_eigenvalue
from lenspec.errors import DomainError
from lenspec.etale import (
    CSAProfile,
    EtaleProfile,
    ReciprocalPolynomial,
    embeds_in_csa_global,
    embeds_in_csa_local,
    expand_by_x_minus_one,
    same_maximal_etale,
    truncate_reciprocal_charpoly,
)


# ---------------------------------------------------------------------------
# local criterion
# ---------------------------------------------------------------------------

def test_local_examples():
    assert embeds_in_csa_local([2], 2)
    assert not embeds_in_csa_local([1, 1], 2)
    assert embeds_in_csa_local([3, 4, 5], 1)


def test_local_rejections():
    with pytest.raises(DomainError):
        embeds_in_csa_local([2], 0)
    with pytest.raises(DomainError):
        embeds_in_csa_local([], 2)


# ---------------------------------------------------------------------------
# global criterion
# ---------------------------------------------------------------------------

QUAD_FIELD = EtaleProfile((2,), {"2": ((2,),), "3": ((2,),)})
QUAD_SPLIT3 = EtaleProfile((2,), {"2": ((2,),), "3": ((1, 1),)})
QUAT_23 = CSAProfile(2, {"2": 2, "3": 2})
QUAT_2357 = CSAProfile(2, {"2": 2, "3": 2, "5": 2, "7": 2})


def test_global_examples():
    assert embeds_in_csa_global(QUAD_FIELD, QUAT_23)
    assert not embeds_in_csa_global(QUAD_SPLIT3, QUAT_23)
    assert embeds_in_csa_global(QUAD_FIELD, CSAProfile(2, {}))


def test_global_degree_mismatch():
    with pytest.raises(DomainError):
        embeds_in_csa_global(EtaleProfile((3,), {}), QUAT_23)


def test_global_monotone_in_local_indices():
    # shrinking the ramified set never turns a true verdict false
    places = ["2", "3", "5"]
    profiles = []
    for pattern in itertools.product(((2,), (1, 1)), repeat=3):
        profiles.append(EtaleProfile((2,), dict(zip(places, ((p,) for p in pattern)))))
    full = CSAProfile(2, {p: 2 for p in places})
    for keep in itertools.chain.from_iterable(
            itertools.combinations(places, r) for r in range(3)):
        smaller = CSAProfile(2, {p: 2 for p in keep})
        for profile in profiles:
            if embeds_in_csa_global(profile, full):
                assert embeds_in_csa_global(profile, smaller)


def test_same_maximal_etale():
    assert same_maximal_etale(QUAT_23, QUAT_23)
    assert not same_maximal_etale(QUAT_23, QUAT_2357)
    padded = CSAProfile(2, {"2": 2, "3": 2, "11": 1})
    assert same_maximal_etale(QUAT_23, padded)
    with pytest.raises(DomainError):
        same_maximal_etale(QUAT_23, CSAProfile(4, {}))


def test_same_profile_implies_same_verdicts():
    rng = random.Random(13)
    places = ["2", "3", "5", "7"]
    a = CSAProfile(2, {"2": 2, "5": 2})
    b = CSAProfile(2, {"2": 2, "5": 2, "3": 1})
    assert same_maximal_etale(a, b)
    for _ in range(40):
        pattern = {p: ((2,),) if rng.random() < 0.5 else ((1, 1),) for p in places}
        profile = EtaleProfile((2,), pattern)
        assert embeds_in_csa_global(profile, a) == embeds_in_csa_global(profile, b)


# ---------------------------------------------------------------------------
# truncation
# ---------------------------------------------------------------------------

def test_truncate_examples():
    q = truncate_reciprocal_charpoly([1, -4, 4, -1])
    assert q.coefficients == (Fraction(1), Fraction(-3), Fraction(1))
    q2 = truncate_reciprocal_charpoly([1, 0, 0, -1])
    assert q2.coefficients == (Fraction(1), Fraction(1), Fraction(1))


def test_truncate_rejections():
    with pytest.raises(DomainError):
        truncate_reciprocal_charpoly([1, -3, 1])            # even degree
    with pytest.raises(DomainError):
        truncate_reciprocal_charpoly([1, 0, 0, 1])          # p(1) != 0
    with pytest.raises(DomainError):
        # p(1) = 0 but quotient x^2 + x - 2... build: (x-1)(x^2+2x+3) has
        # non-palindromic quotient
        truncate_reciprocal_charpoly([1, 1, 1, -3])


def test_truncate_round_trip():
    rng = random.Random(5)
    for _ in range(30):
        # random plus-type palindromic polynomial of even degree 2n
        n = rng.randint(1, 4)
        body = [Fraction(rng.randint(-5, 5)) for _ in range(n - 1)]
        mid = Fraction(rng.randint(-5, 5))
        coeffs = [Fraction(1)] + body + [mid] + body[::-1] + [Fraction(1)]
        poly = ReciprocalPolynomial(tuple(coeffs))
        expanded = expand_by_x_minus_one(poly)
        back = truncate_reciprocal_charpoly(expanded)
        assert back.coefficients == poly.coefficients


def test_norm_one_trace_charpoly_cross_module():
    # (x - 1)(x^2 - |t| x + 1) truncates to the eigenvalue polynomial
    for t in (3, 4, 6, 11):
        coeffs = [Fraction(1), Fraction(-(t + 1)), Fraction(t + 1), Fraction(-1)]
        q = truncate_reciprocal_charpoly(coeffs)
        assert q.coefficients == (Fraction(1), Fraction(-t), Fraction(1))
        lam = quad_eigenvalue(t)
        assert lam * lam - t * lam + 1 == 0
        assert lam.inverse() * lam.inverse() - t * lam.inverse() + 1 == 0


def test_reciprocal_polynomial_validation():
    with pytest.raises(DomainError):
        ReciprocalPolynomial((Fraction(1), Fraction(2)))     # not palindromic
    with pytest.raises(DomainError):
        ReciprocalPolynomial((Fraction(0), Fraction(0)))
    p = ReciprocalPolynomial((Fraction(2), Fraction(3), Fraction(2)))
    assert p.degree == 2 and p(Fraction(1)) == 7


def test_profile_validation():
    with pytest.raises(DomainError):
        EtaleProfile((2,), {"2": ((1, 2),)})        # partition sums to 3 != 2
    with pytest.raises(DomainError):
        CSAProfile(2, {"3": 4})                     # 4 does not divide 2
    with pytest.raises(DomainError):
        EtaleProfile((), {})


def test_profile_json_round_trip():
    assert EtaleProfile.from_json_dict(QUAD_FIELD.to_json_dict()) == QUAD_FIELD
    assert CSAProfile.from_json_dict(QUAT_23.to_json_dict()) == QUAT_23
    q = truncate_reciprocal_charpoly([1, -4, 4, -1])
    assert ReciprocalPolynomial.from_json_dict(q.to_json_dict()) == q
