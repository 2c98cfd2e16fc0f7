"""Etale algebras in central simple algebras: the divisibility criterion,
profile comparison, and the truncation that drops a forced eigenvalue 1."""

from fractions import Fraction

from lenspec.etale import (
    CSAProfile,
    EtaleProfile,
    embeds_in_csa_global,
    embeds_in_csa_local,
    same_maximal_etale,
    truncate_reciprocal_charpoly,
)


def main():
    print("local criterion (divisibility of factor degrees by the index):")
    print("  quadratic field into a quaternion division algebra:",
          embeds_in_csa_local([2], 2))
    print("  split etale Q x Q into the same algebra:",
          embeds_in_csa_local([1, 1], 2))

    print("\nglobal criterion over labeled places:")
    field = EtaleProfile((2,), {"2": ((2,),), "3": ((2,),)})
    split3 = EtaleProfile((2,), {"2": ((2,),), "3": ((1, 1),)})
    quat23 = CSAProfile(2, {"2": 2, "3": 2})
    print("  field inert at 2 and 3 into the {2,3} quaternion:",
          embeds_in_csa_global(field, quat23))
    print("  field split at 3 into the same algebra:",
          embeds_in_csa_global(split3, quat23))

    print("\nprofiles with identical local indices admit the same subfields:")
    quat2357 = CSAProfile(2, {"2": 2, "3": 2, "5": 2, "7": 2})
    print("  {2,3} vs {2,3}:", same_maximal_etale(quat23, quat23))
    print("  {2,3} vs {2,3,5,7}:", same_maximal_etale(quat23, quat2357),
          " (the one-way inclusion of the spectra demo lives here)")

    print("\ntruncating the forced eigenvalue 1 from an odd-degree charpoly:")
    coeffs = [Fraction(1), Fraction(-4), Fraction(4), Fraction(-1)]
    q = truncate_reciprocal_charpoly(coeffs)
    print(f"  (x-1)(x^2-3x+1) = {coeffs}  ->  {[str(c) for c in q.coefficients]}")
    print("  the quotient is palindromic: its roots come in inverse pairs.")


if __name__ == "__main__":
    main()
