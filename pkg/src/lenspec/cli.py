"""Command-line front-end: every library operation as a subcommand with
JSON/CSV/table output, plus the two packaged experiments.

Exit codes: 0 success, 2 domain error (machine-readable JSON on stderr),
64 usage error.  Output is deterministic for a fixed argv and seed.
The environment variable LENSPEC_PRECISION overrides the default interval
precision when no --precision-bits flag is given."""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import etale, galmod, quatarith, rootsys
from .algnum import (
    DEFAULT_PRECISION,
    Interval,
    QuadraticElement,
    multiplicatively_independent,
    weak_containment_search,
)
from .errors import DomainError, LenspecError

USAGE_EXIT = 64
DOMAIN_EXIT = 2

FORMATS = ("json", "csv", "table")


@dataclass
class RunConfig:
    precision_bits: int = DEFAULT_PRECISION
    coeff_bound: int = 1000
    height: int = 30
    power_bound: int = 6
    fmt: str = "json"
    seed: int = 0

    def __post_init__(self):
        for name in ("precision_bits", "coeff_bound", "height", "power_bound"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        if self.fmt not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def _default_precision() -> int:
    env = os.environ.get("LENSPEC_PRECISION")
    if env is None:
        return DEFAULT_PRECISION
    try:
        value = int(env)
    except ValueError as exc:
        raise DomainError(f"LENSPEC_PRECISION must be an integer, got {env!r}") from exc
    if value <= 0:
        raise DomainError("LENSPEC_PRECISION must be positive")
    return value


# ---------------------------------------------------------------------------
# parsing helpers
# ---------------------------------------------------------------------------

_QUAD_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?:(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


def parse_quadratic(text: str) -> QuadraticElement:
    """Parse 'a', 'a+b*sqrt(D)', '-sqrt(D)'-style element strings."""
    m = _QUAD_RE.match(text)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise DomainError(f"cannot parse element {text!r}; "
                          "expected forms like 3/2, 1+sqrt(2), 2-3/2*sqrt(5)")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    if m.group("d") is None:
        return QuadraticElement.from_rational(a)
    b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
    if m.group("sign") == "-":
        b = -b
    return QuadraticElement(a, b, int(m.group("d")))


def parse_elements(text: str) -> list[QuadraticElement]:
    items = [s for s in text.split(";") if s.strip()]
    if not items:
        return []
    return [parse_quadratic(s) for s in items]


def parse_place(text: str):
    if text == quatarith.REAL_PLACE:
        return quatarith.REAL_PLACE
    try:
        return int(text)
    except ValueError as exc:
        raise DomainError(f"place must be a prime or 'real', got {text!r}") from exc


def parse_rational_vector(text: str) -> list[Fraction]:
    return [Fraction(s.strip()) for s in text.split(",") if s.strip()]


def parse_int_vector(text: str) -> list[int]:
    return [int(s.strip()) for s in text.split(",") if s.strip()]


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# experiments (importable library-side as well)
# ---------------------------------------------------------------------------

BC_TOLERANCE = Fraction(1, 10 ** 12)


def run_bc_ratio_experiment(n_min: int = 3, n_max: int = 10, samples: int = 100,
                            seed: int = 0) -> dict:
    """Ratio sweep: for each n, seeded random mu-vectors; reports the maximum
    deviation of the computed ratio from sqrt((2n+2)/(2n-1))."""
    if n_min < 3:
        raise DomainError("the B/C comparison requires n >= 3")
    if n_max < n_min:
        raise DomainError("empty n range")
    rng = random.Random(seed)
    per_n = []
    overall = 0.0
    for n in range(n_min, n_max + 1):
        expected = math.sqrt((2 * n + 2) / (2 * n - 1))
        worst = 0.0
        for _ in range(samples):
            mu = [rng.uniform(-2.0, 2.0) for _ in range(n)]
            while all(abs(m) < 1e-9 for m in mu):
                mu = [rng.uniform(-2.0, 2.0) for _ in range(n)]
            _, _, ratio = rootsys.bn_cn_pair_lengths(n, mu)
            worst = max(worst, abs(ratio - expected))
        per_n.append({"n": n, "ratio_squared": _frac(rootsys.bc_ratio_squared(n)),
                      "max_deviation": repr(worst)})
        overall = max(overall, worst)
    return {
        "experiment": "bc-ratio",
        "n_range": [n_min, n_max],
        "samples_per_n": samples,
        "seed": seed,
        "per_n": per_n,
        "max_deviation": repr(overall),
        "tolerance": "1e-12",
        "pass": overall < float(BC_TOLERANCE),
    }


def run_example_7_4_experiment(height: int = 30, witness_height: int = 200,
                               power_bound: int = 6,
                               precision_bits: int = DEFAULT_PRECISION) -> dict:
    """Two quaternion algebras with ramification {2,3} and {2,3,5,7}: the
    spectrum of the second embeds field-wise into the first (with explicit
    power witnesses where found), while the reverse direction fails for at
    least one trace."""
    d1 = quatarith.algebra_from_ramset({2, 3})
    d2 = quatarith.algebra_from_ramset({2, 3, 5, 7})
    s1 = quatarith.trace_spectrum(d1, height, precision_bits)
    s2 = quatarith.trace_spectrum(d2, height, precision_bits)
    wh = max(height, witness_height)
    t1 = quatarith.trace_spectrum(d1, wh, precision_bits)
    t2 = quatarith.trace_spectrum(d2, wh, precision_bits)
    forward = quatarith.spectrum_commensurable_inclusion(s2, d1, t1, power_bound)
    reverse = quatarith.spectrum_commensurable_inclusion(s1, d2, t2, power_bound)
    vacuous = forward.vacuous or reverse.vacuous
    return {
        "experiment": "example-7-4",
        "d1": {"algebra": d1.to_json_dict(),
               "ramified": sorted(map(str, quatarith.ramification_set(d1)))},
        "d2": {"algebra": d2.to_json_dict(),
               "ramified": sorted(map(str, quatarith.ramification_set(d2)))},
        "height": height,
        "witness_height": wh,
        "forward": forward.to_json_dict(),
        "reverse": reverse.to_json_dict(),
        "summary": {
            "vacuous": vacuous,
            "forward_all_field_verdicts_true": forward.all_field_verdicts_true,
            "forward_witnessed_count": len(forward.witnessed_traces),
            "reverse_has_false_verdict": reverse.any_field_verdict_false,
        },
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_weyl(args) -> dict:
    return {"family": args.family, "rank": args.rank,
            "weyl_order": rootsys.weyl_order(args.family, args.rank)}


def _cmd_hyperbolic_weyl(args) -> dict:
    return {"d": args.d, "w": rootsys.hyperbolic_weyl_order(args.d)}


def _cmd_roots(args) -> dict:
    return rootsys.build_root_system(args.family, args.rank).to_json_dict()


def _cmd_classes(args) -> dict:
    return {"family": args.family, "rank": args.rank,
            "nontrivial_classes": rootsys.weyl_conjugacy_classes(args.family, args.rank)}


def _cmd_lambda(args) -> dict:
    prec = args.precision_bits
    if args.trace is not None:
        if args.mu is not None:
            raise DomainError("give either --trace or --mu, not both")
        t = Fraction(args.trace)
        length = quatarith.spectrum_length(t, prec)
        return {"trace": _frac(t), "length_interval": length.to_json_dict()}
    if args.mu is None or args.family is None or args.rank is None:
        raise DomainError("need --trace, or --family/--rank/--mu")
    mu = parse_rational_vector(args.mu)
    system = rootsys.build_root_system(args.family, args.rank)
    lam_sq = rootsys.length_sq_from_mu(system, mu)
    interval = Interval.from_rational(lam_sq, prec).sqrt()
    return {"family": args.family, "rank": args.rank,
            "mu": [_frac(m) for m in mu],
            "lambda_squared": _frac(lam_sq),
            "length_interval": interval.to_json_dict()}


def _cmd_ratio(args) -> dict:
    rsq = rootsys.bc_ratio_squared(args.n)
    interval = Interval.from_rational(rsq, args.precision_bits).sqrt()
    return {"n": args.n, "ratio": f"sqrt({rsq})", "ratio_squared": _frac(rsq),
            "decimal_interval": [interval.to_json_dict()["lo"],
                                 interval.to_json_dict()["hi"]],
            "precision_bits": args.precision_bits}


def _cmd_hilbert(args) -> dict:
    place = parse_place(args.place)
    return {"a": _frac(Fraction(args.a)), "b": _frac(Fraction(args.b)),
            "place": str(place),
            "symbol": quatarith.hilbert_symbol(Fraction(args.a), Fraction(args.b), place)}


def _cmd_ramify(args) -> dict:
    alg = quatarith.QuaternionAlgebra(Fraction(args.a), Fraction(args.b))
    ram = quatarith.ramification_set(alg)
    return {"algebra": alg.to_json_dict(),
            "ramified": [str(v) for v in sorted(ram, key=quatarith.place_sort_key)]}


def _cmd_mkalg(args) -> dict:
    places = {parse_place(tok.strip()) for tok in args.places.split(",") if tok.strip()}
    alg = quatarith.algebra_from_ramset(places, args.search_bound)
    return {"algebra": alg.to_json_dict(),
            "ramified": [str(v) for v in
                         sorted(quatarith.ramification_set(alg), key=quatarith.place_sort_key)]}


def _cmd_embedfield(args) -> dict:
    alg = quatarith.QuaternionAlgebra(Fraction(args.a), Fraction(args.b))
    return {"algebra": alg.to_json_dict(), "d": _frac(Fraction(args.d)),
            "embeds": quatarith.embeds_quadratic_field(alg, Fraction(args.d))}


def _cmd_enumerate(args) -> dict:
    alg = quatarith.QuaternionAlgebra(Fraction(args.a), Fraction(args.b))
    elements = quatarith.enumerate_norm_one(alg, args.height)
    return {"algebra": alg.to_json_dict(), "height": args.height,
            "count": len(elements), "elements": [list(e) for e in elements]}


def _cmd_spectrum(args) -> dict:
    alg = quatarith.QuaternionAlgebra(Fraction(args.a), Fraction(args.b))
    return quatarith.trace_spectrum(alg, args.height, args.precision_bits).to_json_dict()


def _cmd_compare(args) -> dict:
    source_alg = quatarith.QuaternionAlgebra(Fraction(args.source_a), Fraction(args.source_b))
    target_alg = quatarith.QuaternionAlgebra(Fraction(args.target_a), Fraction(args.target_b))
    source = quatarith.trace_spectrum(source_alg, args.height, args.precision_bits)
    target = quatarith.trace_spectrum(target_alg, args.target_height, args.precision_bits)
    report = quatarith.spectrum_commensurable_inclusion(
        source, target_alg, target, args.power_bound)
    return {"source": source_alg.to_json_dict(), "target": target_alg.to_json_dict(),
            "height": args.height, "target_height": args.target_height,
            "report": report.to_json_dict()}


def _cmd_indep(args) -> dict:
    elements = parse_elements(args.elements)
    verdict = multiplicatively_independent(elements, args.coeff_bound, args.precision_bits)
    doc = {"elements": [e.to_json_dict() for e in elements],
           "coeff_bound": args.coeff_bound, "verdict": verdict.kind}
    if verdict.witness is not None:
        doc["witness"] = {"exponents": list(verdict.witness.exponents),
                          "status": verdict.witness.status}
    return doc


def _cmd_contain(args) -> dict:
    side1 = parse_elements(args.side1)
    side2 = parse_elements(args.side2) if args.side2 else []
    witness = weak_containment_search(side1, side2, args.exponent_bound,
                                      args.precision_bits)
    doc = {"side1": [e.to_json_dict() for e in side1],
           "side2": [e.to_json_dict() for e in side2],
           "exponent_bound": args.exponent_bound}
    if witness is None:
        doc["witness"] = None
        doc["verdict"] = "none-up-to-bound"
    else:
        doc["witness"] = {"left_exponents": list(witness.left_exponents),
                          "right_exponents": list(witness.right_exponents),
                          "status": witness.status}
        doc["verdict"] = "weakly-contained"
    return doc


def _cmd_unscramble(args) -> dict:
    if args.module_json:
        module = galmod.GaloisModule.from_json_dict(json.loads(args.module_json))
    elif args.family and args.rank:
        module = galmod.weyl_weight_module(args.family, args.rank)
    else:
        raise DomainError("need --module-json or --family/--rank")
    chi = parse_int_vector(args.chi)
    mu, d = galmod.unscramble_exponent(module, chi)
    return {"module": module.to_json_dict(), "chi": list(chi), "mu": list(mu), "d": d,
            "containment_verified": galmod.verify_exponent_containment(module, mu, d)}


def _cmd_etale_embed(args) -> dict:
    if args.degrees is not None and args.index is not None:
        degrees = parse_int_vector(args.degrees)
        return {"factor_degrees": degrees, "local_index": args.index,
                "embeds": etale.embeds_in_csa_local(degrees, args.index)}
    if args.etale_json and args.csa_json:
        eprof = etale.EtaleProfile.from_json_dict(json.loads(args.etale_json))
        cprof = etale.CSAProfile.from_json_dict(json.loads(args.csa_json))
        return {"etale": eprof.to_json_dict(), "csa": cprof.to_json_dict(),
                "embeds": etale.embeds_in_csa_global(eprof, cprof)}
    raise DomainError("need --degrees/--index (local) or --etale-json/--csa-json (global)")


def _cmd_truncate(args) -> dict:
    coeffs = parse_rational_vector(args.coeffs)
    result = etale.truncate_reciprocal_charpoly(coeffs)
    return {"input_coefficients": [_frac(c) for c in coeffs],
            "coefficients": [_frac(c) for c in result.coefficients]}


def _cmd_experiment(args) -> dict:
    if args.name == "bc-ratio":
        return run_bc_ratio_experiment(args.n_min, args.n_max, args.samples, args.seed)
    if args.name == "example-7-4":
        return run_example_7_4_experiment(args.height, args.witness_height,
                                          args.power_bound, args.precision_bits)
    raise DomainError(f"unknown experiment {args.name!r}")


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------

def _flatten(doc: dict, prefix: str = "") -> list[tuple[str, str]]:
    rows = []
    for key in sorted(doc):
        val = doc[key]
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            rows.extend(_flatten(val, name + "."))
        elif isinstance(val, list):
            rows.append((name, json.dumps(val, sort_keys=True)))
        else:
            rows.append((name, json.dumps(val)))
    return rows


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    rows = _flatten(doc)
    if fmt == "csv":
        lines = ["key,value"]
        for k, v in rows:
            v = v.replace('"', '""')
            lines.append(f'{k},"{v}"')
        return "\n".join(lines) + "\n"
    width = max(len(k) for k, _ in rows) if rows else 0
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


# ---------------------------------------------------------------------------
# parser construction and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="lenspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    def common(p, precision=False):
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="json")
        p.add_argument("--seed", type=int, default=0)
        if precision:
            p.add_argument("--precision-bits", type=int, default=None)

    p = sub.add_parser("weyl", help="Weyl group order of a family/rank")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_weyl)

    p = sub.add_parser("hyperbolic-weyl", help="w(d) for hyperbolic d-space (d != 3)")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_hyperbolic_weyl)

    p = sub.add_parser("roots", help="explicit root system")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("classes", help="nontrivial Weyl conjugacy classes (brute force)")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_classes)

    p = sub.add_parser("lambda", help="length functional value")
    p.add_argument("--family")
    p.add_argument("--rank", type=int)
    p.add_argument("--mu", help="comma-separated rational mu-vector")
    p.add_argument("--trace", help="hyperbolic trace (A1 closed form)")
    common(p, precision=True)
    p.set_defaults(fn=_cmd_lambda)

    p = sub.add_parser("ratio", help="B_n/C_n similarity constant")
    p.add_argument("--n", type=int, required=True)
    common(p, precision=True)
    p.set_defaults(fn=_cmd_ratio)

    p = sub.add_parser("hilbert", help="local Hilbert symbol")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--place", required=True)
    common(p)
    p.set_defaults(fn=_cmd_hilbert)

    p = sub.add_parser("ramify", help="ramification set of (a,b)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    common(p)
    p.set_defaults(fn=_cmd_ramify)

    p = sub.add_parser("mkalg", help="algebra with a prescribed ramification set")
    p.add_argument("--places", required=True, help="comma-separated primes / 'real'")
    p.add_argument("--search-bound", type=int, default=400)
    common(p)
    p.set_defaults(fn=_cmd_mkalg)

    p = sub.add_parser("embedfield", help="quadratic subfield embedding criterion")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--d", required=True)
    common(p)
    p.set_defaults(fn=_cmd_embedfield)

    p = sub.add_parser("enumerate", help="norm-one elements in the standard order")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--height", type=int, default=30)
    common(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("spectrum", help="hyperbolic trace spectrum")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--height", type=int, default=30)
    common(p, precision=True)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("compare", help="spectrum inclusion report")
    p.add_argument("--source-a", required=True)
    p.add_argument("--source-b", required=True)
    p.add_argument("--target-a", required=True)
    p.add_argument("--target-b", required=True)
    p.add_argument("--height", type=int, default=30)
    p.add_argument("--target-height", type=int, default=200)
    p.add_argument("--power-bound", type=int, default=6)
    common(p, precision=True)
    p.set_defaults(fn=_cmd_compare)

    p = sub.add_parser("indep", help="multiplicative independence verdict")
    p.add_argument("--elements", required=True,
                   help="semicolon-separated elements, e.g. '1+sqrt(2);2+sqrt(3)'")
    p.add_argument("--coeff-bound", type=int, default=1000)
    common(p, precision=True)
    p.set_defaults(fn=_cmd_indep)

    p = sub.add_parser("contain", help="weak containment witness search")
    p.add_argument("--side1", required=True)
    p.add_argument("--side2", default="")
    p.add_argument("--exponent-bound", type=int, default=10)
    common(p, precision=True)
    p.set_defaults(fn=_cmd_contain)

    p = sub.add_parser("unscramble", help="orbit exponent of a character")
    p.add_argument("--family")
    p.add_argument("--rank", type=int)
    p.add_argument("--module-json", help="GaloisModule JSON document")
    p.add_argument("--chi", required=True, help="comma-separated integers")
    common(p)
    p.set_defaults(fn=_cmd_unscramble)

    p = sub.add_parser("etale-embed", help="etale-into-CSA embedding criteria")
    p.add_argument("--degrees", help="comma-separated factor degrees (local test)")
    p.add_argument("--index", type=int, help="local index (local test)")
    p.add_argument("--etale-json", help="EtaleProfile JSON (global test)")
    p.add_argument("--csa-json", help="CSAProfile JSON (global test)")
    common(p)
    p.set_defaults(fn=_cmd_etale_embed)

    p = sub.add_parser("truncate", help="drop the forced eigenvalue 1 from a charpoly")
    p.add_argument("--coeffs", required=True,
                   help="comma-separated rational coefficients, leading first")
    common(p)
    p.set_defaults(fn=_cmd_truncate)

    p = sub.add_parser("experiment", help="packaged experiments")
    p.add_argument("name", choices=["bc-ratio", "example-7-4"])
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--height", type=int, default=30)
    p.add_argument("--witness-height", type=int, default=200)
    p.add_argument("--power-bound", type=int, default=6)
    common(p, precision=True)
    p.set_defaults(fn=_cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) is None:
        parser.print_usage(sys.stderr)
        return USAGE_EXIT
    try:
        if hasattr(args, "precision_bits") and args.precision_bits is None:
            args.precision_bits = _default_precision()
        config = RunConfig(
            precision_bits=getattr(args, "precision_bits", DEFAULT_PRECISION),
            coeff_bound=getattr(args, "coeff_bound", 1000),
            height=getattr(args, "height", 30),
            power_bound=getattr(args, "power_bound", 6),
            fmt=args.fmt,
            seed=args.seed,
        )
        doc = args.fn(args)
    except LenspecError as exc:
        _emit_error(exc)
        return DOMAIN_EXIT
    sys.stdout.write(render(doc, config.fmt))
    return 0


def _emit_error(exc: Exception) -> None:
    doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")


if __name__ == "__main__":
    sys.exit(main())
