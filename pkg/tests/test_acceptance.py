"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings."""

import math
import random
import time
from fractions import Fraction

from lenspec.algnum import (
    QuadraticElement,
    certify_relation,
    find_integer_relation,
    log_abs,
    multiplicatively_independent,
    quad_eigenvalue,
)
from lenspec.cli import run_bc_ratio_experiment, run_example_7_4_experiment
from lenspec.errors import DomainError
from lenspec.galmod import (
    fixed_sublattice_rank,
    is_q_irreducible,
    unscramble_exponent,
    verify_exponent_containment,
    weyl_weight_module,
)
from lenspec.quatarith import (
    REAL_PLACE,
    QuaternionAlgebra,
    enumerate_norm_one,
    enumerate_norm_one_naive,
    hilbert_symbol,
)
from lenspec.rootsys import (
    bn_cn_pair_lengths,
    hyperbolic_weyl_order,
    length_lambda,
    weyl_conjugacy_classes,
    weyl_group_brute,
    weyl_order,
)


def _report(number: int, name: str, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} ({name}): {status} - {detail}")


def test_criterion_1_bc_similarity_constant():
    start = time.monotonic()
    doc = run_bc_ratio_experiment(n_min=3, n_max=10, samples=100, seed=0)
    elapsed = time.monotonic() - start
    ok = doc["pass"] and elapsed < 1.0
    _report(1, "B_n/C_n similarity constant", ok,
            f"max deviation {doc['max_deviation']}, {elapsed:.3f}s")
    assert doc["pass"], doc
    assert elapsed < 1.0, f"ratio sweep took {elapsed:.3f}s (budget 1s)"


def test_criterion_2_hyperbolic_weyl_order():
    violations = []
    if hyperbolic_weyl_order(2) != 2:
        violations.append("w(2) != 2")
    if hyperbolic_weyl_order(4) != 8:
        violations.append("w(4) != 8")
    if hyperbolic_weyl_order(5) != 24:
        violations.append("w(5) != 24")
    ds = [2] + list(range(4, 41))
    values = [hyperbolic_weyl_order(d) for d in ds]
    if not all(a < b for a, b in zip(values, values[1:])):
        violations.append("not strictly increasing on {2,4,5,...,40}")
    try:
        hyperbolic_weyl_order(3)
        violations.append("d=3 not rejected")
    except DomainError:
        pass
    _report(2, "Corollary-1 Weyl order machinery", not violations,
            "; ".join(violations) or "values 2/8/24, monotone, d=3 rejected")
    assert not violations, violations


def test_criterion_3_brute_force_weyl_agreement():
    start = time.monotonic()
    pairs = [("A", r) for r in range(1, 6)] + \
            [("B", r) for r in range(2, 6)] + \
            [("C", r) for r in range(2, 6)] + \
            [("D", r) for r in range(3, 6)] + [("G", 2), ("F", 4)]
    violations = []
    for family, rank in pairs:
        brute = weyl_group_brute(family, rank)
        if len(brute) != weyl_order(family, rank):
            violations.append(f"order mismatch {family}{rank}")
        classes = weyl_conjugacy_classes(family, rank)
        if classes < 1:
            violations.append(f"no nontrivial classes {family}{rank}")
    # spot checks of class counts against the partition-pair oracle
    def partitions(n):
        table = [1] + [0] * n
        for part in range(1, n + 1):
            for total in range(part, n + 1):
                table[total] += table[total - part]
        return table[n]
    for n in range(1, 6):
        if weyl_conjugacy_classes("A", n) != partitions(n + 1) - 1:
            violations.append(f"A{n} class count")
    for n in range(2, 6):
        expected = sum(partitions(k) * partitions(n - k) for k in range(n + 1)) - 1
        if weyl_conjugacy_classes("B", n) != expected:
            violations.append(f"B{n} class count")
        if weyl_conjugacy_classes("C", n) != expected:
            violations.append(f"C{n} class count")
    elapsed = time.monotonic() - start
    _report(3, "brute-force Weyl agreement rank <= 5", not violations,
            "; ".join(violations) or f"{len(pairs)} pairs checked, {elapsed:.1f}s")
    assert not violations, violations


def test_criterion_4_example_7_4():
    start = time.monotonic()
    doc = run_example_7_4_experiment(height=30, witness_height=200, power_bound=6)
    elapsed = time.monotonic() - start
    summary = doc["summary"]
    violations = []
    if summary["vacuous"]:
        violations.append("spectra vacuous at height 30")
    if not summary["forward_all_field_verdicts_true"]:
        violations.append("a D2 trace failed the field criterion into D1")
    if summary["forward_witnessed_count"] < 1:
        violations.append("no explicit power witness with n <= 6 at height 200")
    if not summary["reverse_has_false_verdict"]:
        violations.append("reverse direction has no false verdict")
    if elapsed >= 60:
        violations.append(f"took {elapsed:.1f}s (budget 60s)")
    _report(4, "example-7-4 spectrum inclusion", not violations,
            "; ".join(violations) or
            f"forward 100% true, {summary['forward_witnessed_count']} witnesses, "
            f"reverse has false verdict, {elapsed:.1f}s")
    assert not violations, (violations, summary)


def test_criterion_5_hilbert_property_suite():
    from lenspec.quatarith import ramification_set, solvability_oracle
    start = time.monotonic()
    violations = []
    rng = random.Random(1234)
    for _ in range(1000):
        a = rng.randint(-500, 500) or 17
        b = rng.randint(-500, 500) or -17
        ram = ramification_set(QuaternionAlgebra(a, b))
        if len(ram) % 2 != 0:
            violations.append(f"odd ramification for ({a},{b})")
    for _ in range(1000):
        a = rng.randint(-500, 500) or 11
        b1 = rng.randint(-500, 500) or 13
        b2 = rng.randint(-500, 500) or 19
        p = rng.choice([2, 3, 5, 7, 11, 13, REAL_PLACE])
        if hilbert_symbol(a, b1 * b2, p) != hilbert_symbol(a, b1, p) * hilbert_symbol(a, b2, p):
            violations.append(f"bimultiplicativity fails ({a},{b1},{b2},{p})")
    mismatches = 0
    for a in range(-30, 31):
        for b in range(-30, 31):
            if a == 0 or b == 0:
                continue
            for p in (2, 3, 5, 7, 11, 13):
                if hilbert_symbol(a, b, p) != solvability_oracle(a, b, p):
                    mismatches += 1
                    if mismatches <= 5:
                        violations.append(f"oracle mismatch ({a},{b},{p})")
    elapsed = time.monotonic() - start
    _report(5, "Hilbert reciprocity suite", not violations,
            "; ".join(violations[:6]) or
            f"1000 reciprocity + 1000 bimultiplicativity + 21600 oracle checks, {elapsed:.1f}s")
    assert not violations, violations[:10]


def test_criterion_6_length_functional():
    violations = []
    zero = length_lambda([1, -1, Fraction(1)])
    if zero.value.endpoints() != (0, 0):
        violations.append("length at all-ones is not exactly 0")
    rng = random.Random(77)
    for _ in range(100):
        if rng.random() < 0.5:
            t = Fraction(rng.randint(3, 400))
        else:
            t = Fraction(rng.randint(5, 800), 2)
            if t <= 2:
                t = Fraction(5, 2)
        lam = quad_eigenvalue(t)
        direct = length_lambda([lam * lam, (lam * lam).inverse()])
        if not direct.value.is_positive() and float(direct.value) != 0.0:
            violations.append(f"negative length at t={t}")
        closed = 2 * math.sqrt(2) * math.log(float(lam))
        if abs(float(direct.value) - closed) >= 1e-12:
            violations.append(f"closed form deviates at t={t}")
    _report(6, "length functional A1 closed form", not violations,
            "; ".join(violations[:4]) or "100 seeded traces within 1e-12, zero at identity")
    assert not violations, violations[:10]


def test_criterion_7_galois_module_suite():
    start = time.monotonic()
    panel = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
             ("B", 4), ("C", 3), ("D", 4), ("G", 2)]
    violations = []
    modules = {}
    for family, rank in panel:
        module = weyl_weight_module(family, rank)
        modules[(family, rank)] = module
        if fixed_sublattice_rank(module) != 0:
            violations.append(f"fixed rank nonzero for {family}{rank}")
        if not is_q_irreducible(module):
            violations.append(f"{family}{rank} not Q-irreducible")
    rng = random.Random(555)
    for _ in range(50):
        family, rank = panel[rng.randrange(len(panel))]
        module = modules[(family, rank)]
        chi = [rng.randint(-5, 5) for _ in range(module.dim)]
        if not any(chi):
            chi[0] = 1
        mu, d = unscramble_exponent(module, chi)
        if not verify_exponent_containment(module, mu, d):
            violations.append(f"containment fails for {family}{rank}, chi={chi}")
    elapsed = time.monotonic() - start
    _report(7, "Galois-module suite", not violations,
            "; ".join(violations[:4]) or
            f"panel irreducible, 50 seeded exponent containments verified, {elapsed:.1f}s")
    assert not violations, violations[:10]


def test_criterion_8_relation_detection():
    start = time.monotonic()
    violations = []
    units = {2: QuadraticElement(1, 1, 2), 3: QuadraticElement(2, 1, 3),
             5: QuadraticElement(Fraction(1, 2), Fraction(1, 2), 5),
             7: QuadraticElement(8, 3, 7)}
    rng = random.Random(99)
    for trial in range(12):
        ds = rng.sample(sorted(units), rng.randint(1, 3))
        elements = []
        planted = []
        # per field: u^j and u^k carry the relation k*(first) - j*(second) = 0
        for d in ds:
            j = rng.randint(1, 3)
            k = rng.randint(j + 1, min(10, j + 5))
            elements += [units[d] ** j, units[d] ** k]
            planted_vec = [0] * len(elements)
            planted_vec[-2], planted_vec[-1] = k, -j
            planted.append(planted_vec)
        while len(elements) > 5:
            elements = elements[:-2]
            planted = planted[:-1]
        for vec in planted:
            vec += [0] * (len(elements) - len(vec))
            if not certify_relation(elements, vec[: len(elements)]):
                violations.append(f"planted relation fails certification: {vec}")
        verdict = multiplicatively_independent(elements, coeff_bound=10)
        if verdict.kind != "dependent":
            violations.append(f"trial {trial}: dependence not detected")
        elif verdict.witness.status != "exact":
            violations.append(f"trial {trial}: witness not exactly certified")
        elif not certify_relation(elements, verdict.witness.exponents):
            violations.append(f"trial {trial}: witness fails certification")
    logs = [log_abs(p, 256) for p in (2, 3, 5, 7)]
    candidates = find_integer_relation(logs, 10 ** 6)
    spurious = [n for n in candidates if certify_relation([2, 3, 5, 7], n)]
    if spurious:
        violations.append(f"relation reported among prime logs: {spurious}")
    elapsed = time.monotonic() - start
    if elapsed >= 10:
        violations.append(f"took {elapsed:.1f}s (budget 10s)")
    _report(8, "relation detection", not violations,
            "; ".join(violations[:4]) or
            f"12 planted trials recovered+certified, primes refuted at 1e6, {elapsed:.1f}s")
    assert not violations, violations[:10]


def test_criterion_9_enumeration_oracle_equivalence():
    start = time.monotonic()
    panel = [QuaternionAlgebra(-1, -1), QuaternionAlgebra(2, 3),
             QuaternionAlgebra(-3, 2), QuaternionAlgebra(2, 5),
             QuaternionAlgebra(-1, 3), QuaternionAlgebra(-30, 35)]
    violations = []
    for algebra in panel:
        full_naive = enumerate_norm_one_naive(algebra, 10)
        for height in range(1, 11):
            fast = enumerate_norm_one(algebra, height)
            boxed = [e for e in full_naive if max(abs(c) for c in e) <= height]
            if fast != boxed:
                violations.append(f"{algebra} height {height}")
    elapsed = time.monotonic() - start
    _report(9, "enumeration oracle equivalence", not violations,
            "; ".join(violations[:4]) or f"6 algebras x heights 1..10, {elapsed:.1f}s")
    assert not violations, violations[:10]
