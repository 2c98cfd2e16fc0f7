"""Multiplicative relations among quadratic units: lattice-reduction
detection, exact certification, bounded-independence verdicts, and weak
containment witnesses."""

from lenspec.algnum import (
    QuadraticElement,
    certify_relation,
    find_integer_relation,
    log_abs,
    multiplicatively_independent,
    quad_eigenvalue,
    weak_containment_search,
)


def main():
    eps2 = QuadraticElement(1, 1, 2)          # 1 + sqrt(2)
    eps3 = QuadraticElement(2, 1, 3)          # 2 + sqrt(3)
    lam = quad_eigenvalue(3)                  # (3 + sqrt(5))/2

    print("a planted relation: elements (eps2^2, eps2^5)")
    elements = [eps2 ** 2, eps2 ** 5]
    verdict = multiplicatively_independent(elements, coeff_bound=10)
    print("  verdict:", verdict.kind)
    print("  witness:", verdict.witness.exponents, f"[{verdict.witness.status}]")
    assert certify_relation(elements, verdict.witness.exponents)

    print("\nno relation between units of different real quadratic fields:")
    verdict = multiplicatively_independent([eps2, eps3], coeff_bound=1000)
    print(f"  (eps2, eps3): {verdict.kind} (bound {verdict.coeff_bound})")

    print("\nprime logarithms are refuted by unique factorization:")
    logs = [log_abs(p, 256) for p in (2, 3, 5, 7)]
    candidates = find_integer_relation(logs, 10 ** 6)
    print(f"  candidates with |n_i| <= 10^6 among log 2,3,5,7: {candidates}")

    print("\nweak containment: does some power of lam match a power of lam^3?")
    witness = weak_containment_search([lam], [lam ** 3], 10)
    print(f"  witness: lam^{witness.left_exponents[0]} = "
          f"(lam^3)^{witness.right_exponents[0]}  [{witness.status}]")

    print("\n...but nothing links eps2 to eps3 with exponents up to 10:")
    print(" ", weak_containment_search([eps2], [eps3], 10))


if __name__ == "__main__":
    main()
