"""Two non-isomorphic quaternion algebras whose trace spectra nest one way
only: the algebra ramified at {2,3,5,7} contributes geodesics whose trace
fields all embed into the {2,3}-ramified algebra, while the converse fails.

This is the desk-scale shadow of a pair of arithmetic hyperbolic surfaces
with Q L(M_2) contained in Q L(M_1) but not conversely."""

from lenspec.quatarith import (
    algebra_from_ramset,
    embeds_quadratic_field,
    ramification_set,
    spectrum_commensurable_inclusion,
    trace_spectrum,
)


def main():
    d1 = algebra_from_ramset({2, 3})
    d2 = algebra_from_ramset({2, 3, 5, 7})
    print(f"D1 = ({d1.a}, {d1.b}),  ramified at {sorted(map(str, ramification_set(d1)))}")
    print(f"D2 = ({d2.a}, {d2.b}),  ramified at {sorted(map(str, ramification_set(d2)))}")

    s1 = trace_spectrum(d1, 30)
    s2 = trace_spectrum(d2, 30)
    print(f"\nhyperbolic traces (height 30):")
    print(f"  D1: {[str(e.trace) for e in s1.entries]}")
    print(f"  D2: {[str(e.trace) for e in s2.entries]}")

    t1 = trace_spectrum(d1, 200)
    forward = spectrum_commensurable_inclusion(s2, d1, t1, power_bound=6)
    print("\nforward direction (D2 traces into D1):")
    for entry in forward.entries:
        witness = (f"lambda^{entry.witness_power} hits trace {entry.witness_trace}"
                   if entry.witness_power else "no power witness <= 6")
        print(f"  t = {str(entry.trace):>3}: field criterion "
              f"{'PASS' if entry.field_verdict else 'FAIL'}; {witness}")
    print(f"  => all field verdicts true: {forward.all_field_verdicts_true}")

    t2 = trace_spectrum(d2, 200)
    reverse = spectrum_commensurable_inclusion(s1, d2, t2, power_bound=6)
    failures = [e for e in reverse.entries if not e.field_verdict]
    print(f"\nreverse direction (D1 traces into D2): {len(failures)} failures "
          f"out of {len(reverse.entries)}")
    for entry in failures[:5]:
        d = int(entry.trace) ** 2 - 4
        print(f"  t = {entry.trace}: Q(sqrt({d})) does not embed in D2 "
              f"(it splits at a ramified place)")
    print("\nthe asymmetry is the point: one-way inclusion of rational length spans.")
    assert forward.all_field_verdicts_true and reverse.any_field_verdict_false


if __name__ == "__main__":
    main()
