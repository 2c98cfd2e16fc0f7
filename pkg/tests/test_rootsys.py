import math
import random
from fractions import Fraction

import pytest

from lenspec.algnum import QuadraticElement, quad_eigenvalue
from lenspec.errors import DomainError, UnsupportedError
from lenspec.rootsys import (
    ROOT_COUNT,
    RootSystem,
    TorusElement,
    bc_ratio_squared,
    bn_cn_pair_lengths,
    build_root_system,
    hyperbolic_weyl_order,
    identity_element,
    length_lambda,
    length_of_element,
    length_sq_from_mu,
    torus_root_values,
    weyl_conjugacy_classes,
    weyl_group_brute,
    weyl_order,
)

ALL_SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3),
             ("C", 4), ("D", 3), ("D", 4), ("G", 2), ("F", 4)]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_root_counts_match_family_formulas():
    for family, rank in ALL_SMALL + [("E", 6), ("E", 7), ("E", 8), ("B", 10), ("C", 10)]:
        system = build_root_system(family, rank)
        assert len(system.roots) == ROOT_COUNT[family](rank)


def test_a1_is_plus_minus_one_root():
    system = build_root_system("A", 1)
    assert set(system.roots) == {(1, -1), (-1, 1)}


def test_b3_has_18_roots_and_g2_has_12():
    assert len(build_root_system("B", 3).roots) == 18
    assert len(build_root_system("G", 2).roots) == 12


def test_negation_closure_and_reducedness():
    for family, rank in ALL_SMALL:
        roots = set(build_root_system(family, rank).roots)
        for r in roots:
            assert tuple(-x for x in r) in roots
            assert tuple(2 * x for x in r) not in roots


@pytest.mark.parametrize("family,rank", [("B", 1), ("C", 1), ("D", 2), ("E", 5),
                                         ("F", 3), ("G", 3), ("A", 0), ("X", 2)])
def test_invalid_pairs_rejected(family, rank):
    with pytest.raises(DomainError):
        build_root_system(family, rank)


def test_root_system_json_round_trip():
    system = build_root_system("G", 2)
    assert RootSystem.from_json_dict(system.to_json_dict()) == system


# ---------------------------------------------------------------------------
# Weyl orders and conjugacy classes
# ---------------------------------------------------------------------------

def test_weyl_order_closed_forms():
    assert weyl_order("A", 1) == 2
    assert weyl_order("B", 3) == 48
    assert weyl_order("G", 2) == 12
    assert weyl_order("F", 4) == 1152
    assert weyl_order("E", 8) == 696729600
    for n in range(2, 8):
        assert weyl_order("B", n) == weyl_order("C", n) == 2 ** n * math.factorial(n)


def test_brute_force_orders_small_ranks():
    for family, rank in ALL_SMALL:
        assert len(weyl_group_brute(family, rank)) == weyl_order(family, rank)


def partitions(n: int) -> int:
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def test_conjugacy_class_counts_against_partition_oracle():
    # classes of W(A_n) = S_{n+1} are partitions of n+1; W(B_n) classes are
    # pairs of partitions with total size n
    for n in range(1, 5):
        assert weyl_conjugacy_classes("A", n) == partitions(n + 1) - 1
    for n in range(2, 5):
        expected = sum(partitions(k) * partitions(n - k) for k in range(n + 1))
        assert weyl_conjugacy_classes("B", n) == expected - 1


def test_conjugacy_class_spec_values():
    assert weyl_conjugacy_classes("A", 1) == 1
    assert weyl_conjugacy_classes("A", 2) == 2
    assert weyl_conjugacy_classes("B", 2) == 4


def test_conjugacy_class_exceptional_families():
    # classical values: W(G2) has 6 classes, W(F4) 25, W(D4) 13
    assert weyl_conjugacy_classes("G", 2) == 5
    assert weyl_conjugacy_classes("F", 4) == 24
    assert weyl_conjugacy_classes("D", 4) == 12


def test_conjugacy_cap_is_explicit():
    with pytest.raises(UnsupportedError):
        weyl_conjugacy_classes("E", 7)
    with pytest.raises(UnsupportedError):
        weyl_conjugacy_classes("B", 7)


# ---------------------------------------------------------------------------
# hyperbolic Weyl order
# ---------------------------------------------------------------------------

def test_hyperbolic_weyl_order_values():
    assert hyperbolic_weyl_order(2) == 2
    assert hyperbolic_weyl_order(4) == 8
    assert hyperbolic_weyl_order(5) == 24


def test_hyperbolic_weyl_order_strictly_increasing():
    ds = [2] + list(range(4, 41))
    values = [hyperbolic_weyl_order(d) for d in ds]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("d", [3, 1, 0, -2])
def test_hyperbolic_weyl_order_rejections(d):
    with pytest.raises(DomainError):
        hyperbolic_weyl_order(d)


# ---------------------------------------------------------------------------
# torus root values
# ---------------------------------------------------------------------------

def test_b3_root_values_multiset():
    system = build_root_system("B", 3)
    values = torus_root_values(system, TorusElement("B", 3, (Fraction(3), 1, 1)))
    assert len(values) == 18
    assert values.count(Fraction(3)) == 5       # e1 and e1 +- e_j
    assert values.count(Fraction(1, 3)) == 5
    assert values.count(Fraction(1)) == 8


def test_c3_root_values_contain_squares():
    system = build_root_system("C", 3)
    values = torus_root_values(system, TorusElement("C", 3, (Fraction(3), 1, 1)))
    assert len(values) == 18
    assert Fraction(9) in values and Fraction(1, 9) in values


def test_identity_gives_all_ones_everywhere():
    for family, rank in ALL_SMALL + [("E", 6)]:
        system = build_root_system(family, rank)
        values = torus_root_values(system, identity_element(family, rank))
        assert all(v == 1 for v in values)
        assert length_lambda(values).value.endpoints() == (0, 0)


def test_inversion_closure_of_values():
    system = build_root_system("B", 3)
    lam = quad_eigenvalue(5)
    values = torus_root_values(system, TorusElement("B", 3, (lam, Fraction(2), 1)))
    for v in values:
        inv = v.inverse() if isinstance(v, QuadraticElement) else 1 / Fraction(v)
        assert inv in values


def test_torus_element_validation():
    with pytest.raises(DomainError):
        TorusElement("B", 3, (1, 1))            # wrong length
    with pytest.raises(DomainError):
        TorusElement("B", 3, (0, 1, 1))         # zero eigenvalue
    with pytest.raises(DomainError):
        TorusElement("A", 2, (2, 1, 1))         # product != 1
    TorusElement("A", 2, (Fraction(2), Fraction(1, 2), 1))


# ---------------------------------------------------------------------------
# length functional
# ---------------------------------------------------------------------------

def test_length_zero_iff_all_values_unit():
    assert float(length_lambda([1, -1, 1]).value) == 0.0
    val = length_lambda([Fraction(2), Fraction(1, 2)]).value
    assert val.is_positive()


def test_a1_length_closed_form():
    lam = quad_eigenvalue(3)
    system = build_root_system("A", 1)
    element = TorusElement("A", 1, (lam, lam.inverse()))
    length = length_of_element(system, element)
    expected = 2 * math.sqrt(2) * math.log((3 + math.sqrt(5)) / 2)
    assert abs(float(length.value) - expected) < 1e-12
    assert abs(float(length.value) - 2.7222) < 1e-4


def test_b3_length_at_unit_mu_is_sqrt_10():
    system = build_root_system("B", 3)
    assert length_sq_from_mu(system, [1, 0, 0]) == 10
    # through actual eigenvalues exp(mu): interval evaluation
    e = math.e
    element = TorusElement("B", 3, (e, 1.0, 1.0))
    length = length_of_element(system, element)
    assert abs(float(length.value) - math.sqrt(10)) < 1e-9


def test_length_invariant_under_inversion():
    lam = quad_eigenvalue(7)
    system = build_root_system("B", 2)
    el = TorusElement("B", 2, (lam, Fraction(3)))
    el_inv = TorusElement("B", 2, (lam.inverse(), Fraction(1, 3)))
    a = length_of_element(system, el)
    b = length_of_element(system, el_inv)
    assert abs(float(a.value) - float(b.value)) < 1e-30


def test_length_rejects_zero_values():
    with pytest.raises(DomainError):
        length_lambda([Fraction(0), 1])


# ---------------------------------------------------------------------------
# the B/C pair
# ---------------------------------------------------------------------------

def test_bn_cn_n3_unit_mu():
    lam1, lam2, ratio = bn_cn_pair_lengths(3, [1, 0, 0])
    assert abs(lam1 - math.sqrt(10)) < 1e-14
    assert abs(lam2 - 4) < 1e-14
    assert abs(ratio - math.sqrt(8 / 5)) < 1e-15
    assert abs(ratio - 1.2649111) < 1e-7


def test_bn_cn_n4():
    lam1, lam2, ratio = bn_cn_pair_lengths(4, [1, 1, 0, 0])
    assert abs(lam1 - math.sqrt(28)) < 1e-13
    assert abs(lam2 - math.sqrt(40)) < 1e-13
    assert abs(ratio - math.sqrt(Fraction(10, 7))) < 1e-15


def test_bn_cn_closed_forms_exact():
    # lambda1^2 = (4n-2) sum mu^2 and lambda2^2 = 4(n+1) sum mu^2, exactly
    rng = random.Random(11)
    for n in range(3, 8):
        mu = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        if all(m == 0 for m in mu):
            mu[0] = Fraction(1)
        ssq = sum(m * m for m in mu)
        assert length_sq_from_mu(build_root_system("B", n), mu) == (4 * n - 2) * ssq
        assert length_sq_from_mu(build_root_system("C", n), mu) == 4 * (n + 1) * ssq


def test_ratio_constant_over_random_mu():
    rng = random.Random(3)
    for n in range(3, 11):
        expected = math.sqrt((2 * n + 2) / (2 * n - 1))
        for _ in range(20):
            mu = [rng.uniform(-5, 5) for _ in range(n)]
            _, _, ratio = bn_cn_pair_lengths(n, mu)
            assert abs(ratio - expected) < 1e-12


def test_bn_cn_rejections():
    with pytest.raises(DomainError):
        bn_cn_pair_lengths(2, [1, 0])
    with pytest.raises(DomainError):
        bn_cn_pair_lengths(3, [0, 0, 0])
    with pytest.raises(DomainError):
        bc_ratio_squared(2)
