"""Quaternion algebras over Q: Hilbert symbols, ramification sets, the
quadratic-subfield embedding criterion, norm-one element enumeration in the
standard order, trace spectra with their geodesic length values, and the
two-spectra inclusion report.

Place labels are primes (ints) plus the string "real".  Trace spectra store
|t| only: gamma and -gamma define the same adjoint-group element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np
import sympy

from .algnum import (
    DEFAULT_PRECISION,
    Interval,
    QuadraticElement,
    log_abs,
    quad_eigenvalue,
    rational_square_class,
    squarefree_decompose,
)
from .errors import DomainError, UnsupportedError

REAL_PLACE = "real"
Place = Union[int, str]
Rational = Union[int, Fraction]


def validate_place(place: Place) -> Place:
    if place == REAL_PLACE:
        return place
    if isinstance(place, int) and sympy.isprime(place):
        return place
    raise DomainError(f"place must be a prime or {REAL_PLACE!r}, got {place!r}")


def place_sort_key(place: Place):
    return (1, 0) if place == REAL_PLACE else (0, place)


# ---------------------------------------------------------------------------
# Hilbert symbols
# ---------------------------------------------------------------------------

def _legendre(a: int, p: int) -> int:
    """Legendre symbol of a mod an odd prime p (a must be a p-unit)."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _padic_split(q: Fraction, p: int) -> tuple[int, Fraction]:
    """q = p^v * u with u a p-unit; returns (v, u)."""
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _unit_mod(u: Fraction, modulus: int) -> int:
    """A p-unit rational as a residue modulo p^k (denominator inverted)."""
    return (u.numerator * pow(u.denominator, -1, modulus)) % modulus


@lru_cache(maxsize=None)
def _square_tables(modulus: int, p: int) -> tuple[frozenset[int], frozenset[int]]:
    """(all squares mod modulus, squares of p-units mod modulus)."""
    squares = set()
    unit_squares = set()
    for z in range(modulus):
        s = z * z % modulus
        squares.add(s)
        if z % p != 0:
            unit_squares.add(s)
    return frozenset(squares), frozenset(unit_squares)


@lru_cache(maxsize=None)
def _two_adic_solvable(a: int, b: int) -> bool:
    """Primitive solvability of z^2 = a x^2 + b y^2 over Q_2 for a, b with
    2-adic valuation at most 1, by search modulo 64 (enough margin for
    Hensel lifting at the dyadic place given v_2 <= 1)."""
    mod = 64
    squares, odd_squares = _square_tables(mod, 2)
    for x in range(mod):
        ax2 = a * x * x % mod
        for y in range(mod):
            w = (ax2 + b * y * y) % mod
            if x % 2 or y % 2:
                if w in squares:
                    return True
            elif w in odd_squares:
                return True
    return False


def hilbert_symbol(a: Rational, b: Rational, place: Place) -> int:
    """The local Hilbert symbol (a, b) at a place of Q: +1 iff
    z^2 = a x^2 + b y^2 has a nontrivial local solution.

    Real place by signs; odd p by Legendre-symbol case analysis on the
    p-adic valuations; p = 2 by mod-64 solvability after normalizing the
    pair modulo squares."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol requires nonzero arguments")
    place = validate_place(place)
    if place == REAL_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    p = place
    alpha, u = _padic_split(a, p)
    beta, v = _padic_split(b, p)
    if p != 2:
        ul = _legendre(_unit_mod(u, p), p)
        vl = _legendre(_unit_mod(v, p), p)
        sign = 1
        if (alpha % 2) and (beta % 2) and (p % 4 == 3):
            sign = -sign
        if beta % 2:
            sign *= ul
        if alpha % 2:
            sign *= vl
        return sign
    # p = 2: normalize to representatives 2^(v mod 2) * (odd unit mod 8)
    a_norm = (2 if alpha % 2 else 1) * (_unit_mod(u, 8))
    b_norm = (2 if beta % 2 else 1) * (_unit_mod(v, 8))
    return 1 if _two_adic_solvable(a_norm, b_norm) else -1


def solvability_oracle(a: Rational, b: Rational, place: Place) -> int:
    """Brute search oracle for the Hilbert symbol: looks for primitive
    solutions of z^2 = a x^2 + b y^2 modulo p^k with enough Hensel margin.
    Independent of the case analysis in hilbert_symbol; slower."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise DomainError("nonzero arguments required")
    place = validate_place(place)
    if place == REAL_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    p = place
    # clear denominators and square factors so valuations are 0 or 1
    ai = _strip_squares(a.numerator * a.denominator, p)
    bi = _strip_squares(b.numerator * b.denominator, p)
    va, vb = (1 if ai % p == 0 else 0), (1 if bi % p == 0 else 0)
    if p == 2:
        k = 7
    elif va == 0 and vb == 0:
        k = 1
    elif va and vb:
        k = 3
    else:
        k = 2
    modulus = p ** k
    return 1 if _search_mod(ai % modulus, bi % modulus, p, modulus) else -1


def _strip_squares(n: int, p: int) -> int:
    while n % (p * p) == 0:
        n //= p * p
    return n


@lru_cache(maxsize=None)
def _search_mod(a: int, b: int, p: int, modulus: int) -> bool:
    """Primitive solution search for z^2 - a x^2 - b y^2 = 0 mod modulus.
    Solvability mod p^k only depends on a, b mod p^k, so results are cached
    on the reduced pair."""
    a %= modulus
    b %= modulus
    squares, unit_squares = _square_tables(modulus, p)
    xs = np.arange(modulus, dtype=np.int64)
    ax2 = (a % modulus) * xs * xs % modulus
    by2 = (b % modulus) * xs * xs % modulus
    sq = np.zeros(modulus, dtype=bool)
    sq[np.array(sorted(squares), dtype=np.int64)] = True
    usq = np.zeros(modulus, dtype=bool)
    usq[np.array(sorted(unit_squares), dtype=np.int64)] = True
    unit_mask = (xs % p) != 0
    w = (ax2[:, None] + by2[None, :]) % modulus
    # x or y a p-unit: any z works
    prim_xy = unit_mask[:, None] | unit_mask[None, :]
    if bool(np.any(sq[w] & prim_xy)):
        return True
    # x and y divisible by p: z must be a p-unit
    rest = ~prim_xy
    return bool(np.any(usq[w] & rest))


# ---------------------------------------------------------------------------
# quaternion algebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuaternionAlgebra:
    """(a, b / Q): basis 1, i, j, ij with i^2 = a, j^2 = b, ij = -ji."""
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise DomainError("quaternion parameters must be nonzero")

    def to_json_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "QuaternionAlgebra":
        return cls(Fraction(doc["a"]), Fraction(doc["b"]))

    def reduced_norm(self, x: Sequence[Rational]) -> Fraction:
        x0, x1, x2, x3 = (Fraction(c) for c in x)
        return x0 * x0 - self.a * x1 * x1 - self.b * x2 * x2 + self.a * self.b * x3 * x3

    def is_definite(self) -> bool:
        return self.a < 0 and self.b < 0


@lru_cache(maxsize=None)
def _ramification_cached(a: Fraction, b: Fraction) -> frozenset:
    candidates: set = {2, REAL_PLACE}
    for q in (a, b):
        for n in (q.numerator, q.denominator):
            candidates.update(sympy.factorint(abs(n)).keys())
    ram = {v for v in candidates if hilbert_symbol(a, b, v) == -1}
    if len(ram) % 2 != 0:
        raise DomainError(
            f"odd ramification set {ram} for ({a},{b}); reciprocity violated")
    return frozenset(ram)


def ramification_set(algebra: QuaternionAlgebra) -> set:
    """Places where the algebra is division: {v : (a,b)_v = -1}.  Candidates
    are the real place and primes dividing 2 num(ab) den(ab); always of even
    cardinality by reciprocity."""
    return set(_ramification_cached(algebra.a, algebra.b))


def algebra_from_ramset(places: Iterable[Place], search_bound: int = 400) -> QuaternionAlgebra:
    """Deterministic bounded search for (a, b) with the given ramification
    set: pairs of nonzero integers ordered by max(|a|,|b|), then (a, b)."""
    target = {validate_place(v) for v in places}
    if len(target) % 2 != 0:
        raise DomainError(f"ramification sets have even cardinality; got {sorted(map(str, target))}")
    if not target:
        return QuaternionAlgebra(1, 1)
    for height in range(1, search_bound + 1):
        for a in range(-height, height + 1):
            if a == 0:
                continue
            for b in range(-height, height + 1):
                if b == 0 or max(abs(a), abs(b)) != height:
                    continue
                if _ramification_cached(Fraction(a), Fraction(b)) == target:
                    return QuaternionAlgebra(a, b)
    raise UnsupportedError(
        f"no algebra with ramification {sorted(map(str, target))} found with "
        f"|a|,|b| <= {search_bound}")


def embeds_quadratic_field(algebra: QuaternionAlgebra, d: Rational) -> bool:
    """Whether Q(sqrt(d)) embeds as a maximal subfield: true iff d is a
    nonsquare in the completion at every ramified place."""
    d = Fraction(d)
    if d == 0:
        raise DomainError("d must be nonzero")
    if _is_rational_square(d):
        raise DomainError(f"d = {d} is a square; Q(sqrt(d)) is not a field")
    for v in ramification_set(algebra):
        if _is_local_square(d, v):
            return False
    return True


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator


def _is_local_square(d: Fraction, place: Place) -> bool:
    """Is d a square in the completion of Q at the place?  Real: d > 0;
    odd p: even valuation and unit part a QR; p = 2: even valuation and unit
    part 1 mod 8."""
    if place == REAL_PLACE:
        return d > 0
    p = place
    v, u = _padic_split(d, p)
    if v % 2 != 0:
        return False
    if p == 2:
        return _unit_mod(u, 8) == 1
    return _legendre(_unit_mod(u, p), p) == 1


# ---------------------------------------------------------------------------
# norm-one enumeration and trace spectra
# ---------------------------------------------------------------------------

class NormOneElement(NamedTuple):
    x0: int
    x1: int
    x2: int
    x3: int


def enumerate_norm_one(algebra: QuaternionAlgebra, height: int) -> list[NormOneElement]:
    """All integer solutions of x0^2 - a x1^2 - b x2^2 + ab x3^2 = 1 with
    max |x_i| <= height, exhaustively.  Requires integer a, b."""
    a, b = _integer_parameters(algebra)
    if height < 1:
        raise DomainError("height must be >= 1")
    _check_enumeration_range(a, b, height)
    out: list[NormOneElement] = []
    rng = np.arange(-height, height + 1, dtype=np.int64)
    x1_sq = a * rng * rng
    x2_sq = b * rng * rng
    ab = a * b
    for x3 in range(-height, height + 1):
        c3 = ab * x3 * x3
        # s = 1 + a x1^2 + b x2^2 - ab x3^2 must be a square x0^2 <= height^2
        s = 1 + x1_sq[:, None] + x2_sq[None, :] - c3
        mask = (s >= 0) & (s <= height * height)
        if not mask.any():
            continue
        roots = np.zeros_like(s)
        vals = s[mask]
        r = np.sqrt(vals.astype(np.float64)).astype(np.int64)
        # fix float rounding at the boundary
        r = np.where((r + 1) * (r + 1) <= vals, r + 1, r)
        r = np.where(r * r > vals, r - 1, r)
        exact = r * r == vals
        roots[mask] = np.where(exact, r, -1)
        idx1, idx2 = np.nonzero(mask)
        for i1, i2, x0 in zip(idx1, idx2, roots[mask]):
            if x0 < 0:
                continue
            x1v, x2v = int(rng[i1]), int(rng[i2])
            if x0 == 0:
                out.append(NormOneElement(0, x1v, x2v, x3))
            else:
                out.append(NormOneElement(int(x0), x1v, x2v, x3))
                out.append(NormOneElement(-int(x0), x1v, x2v, x3))
    out.sort()
    return out


def enumerate_norm_one_naive(algebra: QuaternionAlgebra, height: int) -> list[NormOneElement]:
    """Quadruple-loop oracle for the enumeration (test reference)."""
    a, b = _integer_parameters(algebra)
    out = []
    span = range(-height, height + 1)
    for x0 in span:
        for x1 in span:
            for x2 in span:
                for x3 in span:
                    if x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3 == 1:
                        out.append(NormOneElement(x0, x1, x2, x3))
    out.sort()
    return out


def _integer_parameters(algebra: QuaternionAlgebra) -> tuple[int, int]:
    if algebra.a.denominator != 1 or algebra.b.denominator != 1:
        raise UnsupportedError("norm-one enumeration needs integer parameters")
    return int(algebra.a), int(algebra.b)


def _check_enumeration_range(a: int, b: int, height: int) -> None:
    # the vectorized scan works in int64; keep 1 + (|a|+|b|+|ab|) h^2 well inside
    bound = (1 + (abs(a) + abs(b) + abs(a * b)) * height * height) << 1
    if bound >= 1 << 62:
        raise UnsupportedError(
            f"enumeration values for (a,b)=({a},{b}) at height {height} exceed "
            "the 64-bit scan range")


def _distinct_traces(algebra: QuaternionAlgebra, height: int) -> list[int]:
    """Distinct values |x0| >= 2 over norm-one elements in the height box
    (memory-light scan; does not materialize the element list)."""
    a, b = _integer_parameters(algebra)
    _check_enumeration_range(a, b, height)
    found: set[int] = set()
    rng = np.arange(-height, height + 1, dtype=np.int64)
    x1_sq = a * rng * rng
    x2_sq = b * rng * rng
    ab = a * b
    for x3 in range(-height, height + 1):
        s = 1 + x1_sq[:, None] + x2_sq[None, :] - ab * x3 * x3
        mask = (s >= 4) & (s <= height * height)
        if not mask.any():
            continue
        vals = np.unique(s[mask])
        r = np.sqrt(vals.astype(np.float64)).astype(np.int64)
        r = np.where((r + 1) * (r + 1) <= vals, r + 1, r)
        r = np.where(r * r > vals, r - 1, r)
        for x0 in r[r * r == vals]:
            found.add(int(x0))
    return sorted(found)


@dataclass(frozen=True)
class SpectrumEntry:
    """One hyperbolic trace |t| with its derived data."""
    trace: Fraction            # |t| > 2
    disc: int                  # squarefree class of t^2 - 4
    eigenvalue: QuadraticElement
    length: Interval           # 2*sqrt(2)*log(eigenvalue)

    def to_json_dict(self) -> dict:
        interval = self.length.to_json_dict()
        return {"t": str(self.trace), "disc": self.disc,
                "lambda": self.eigenvalue.to_json_dict(),
                "length_interval": [interval["lo"], interval["hi"]]}

    @classmethod
    def from_json_dict(cls, doc: dict, precision_bits: int) -> "SpectrumEntry":
        lo, hi = doc["length_interval"]
        interval = Interval.from_json_dict(
            {"lo": lo, "hi": hi, "precision_bits": precision_bits})
        return cls(Fraction(doc["t"]), int(doc["disc"]),
                   QuadraticElement.from_json_dict(doc["lambda"]), interval)


@dataclass(frozen=True)
class TraceSpectrum:
    algebra: QuaternionAlgebra
    height: int
    entries: tuple[SpectrumEntry, ...]
    precision_bits: int = DEFAULT_PRECISION

    def traces(self) -> list[Fraction]:
        return [e.trace for e in self.entries]

    def to_json_dict(self) -> dict:
        return {"algebra": self.algebra.to_json_dict(), "height": self.height,
                "precision_bits": self.precision_bits,
                "entries": [e.to_json_dict() for e in self.entries]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "TraceSpectrum":
        prec = int(doc["precision_bits"])
        return cls(QuaternionAlgebra.from_json_dict(doc["algebra"]), int(doc["height"]),
                   tuple(SpectrumEntry.from_json_dict(e, prec) for e in doc["entries"]),
                   prec)


def spectrum_length(t: Rational, precision_bits: int = DEFAULT_PRECISION) -> Interval:
    """Geodesic length value 2*sqrt(2)*log(lambda) of a hyperbolic trace."""
    lam = quad_eigenvalue(t)
    return log_abs(lam, precision_bits) * Interval.from_rational(8, precision_bits).sqrt()


def trace_spectrum(algebra: QuaternionAlgebra, height: int,
                   precision_bits: int = DEFAULT_PRECISION) -> TraceSpectrum:
    """Deduplicated multiset of hyperbolic traces |t| = |2 x0| > 2 over the
    norm-one elements of the standard order in the height box, with
    eigenvalues and certified length values."""
    if height < 1:
        raise DomainError("height must be >= 1")
    entries = []
    for x0 in _distinct_traces(algebra, height):
        t = Fraction(2 * x0)
        lam = quad_eigenvalue(t)
        _, disc = squarefree_decompose(int(t * t) - 4)
        entries.append(SpectrumEntry(t, disc, lam, spectrum_length(t, precision_bits)))
    return TraceSpectrum(algebra, height, tuple(entries), precision_bits)


def adjoint_trace(t: Rational) -> Fraction:
    """Trace of the adjoint of a norm-one element of reduced trace t:
    lambda^2 + 1 + lambda^{-2} = t^2 - 1."""
    t = Fraction(t)
    return t * t - 1


# ---------------------------------------------------------------------------
# spectrum inclusion report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InclusionEntry:
    trace: Fraction
    field_verdict: bool
    witness_power: int | None       # n with lambda(t') = lambda(t)^n, if found
    witness_trace: Fraction | None

    def to_json_dict(self) -> dict:
        return {"t": str(self.trace), "field_verdict": self.field_verdict,
                "witness_power": self.witness_power,
                "witness_trace": None if self.witness_trace is None else str(self.witness_trace)}


@dataclass(frozen=True)
class InclusionReport:
    entries: tuple[InclusionEntry, ...]
    power_bound: int

    @property
    def vacuous(self) -> bool:
        return not self.entries

    @property
    def all_field_verdicts_true(self) -> bool:
        return all(e.field_verdict for e in self.entries)

    @property
    def any_field_verdict_false(self) -> bool:
        return any(not e.field_verdict for e in self.entries)

    @property
    def witnessed_traces(self) -> list[Fraction]:
        return [e.trace for e in self.entries if e.witness_power is not None]

    def to_json_dict(self) -> dict:
        return {"power_bound": self.power_bound, "vacuous": self.vacuous,
                "all_field_verdicts_true": self.all_field_verdicts_true,
                "entries": [e.to_json_dict() for e in self.entries]}


def power_trace(t: Rational, n: int) -> Fraction:
    """Trace of the n-th power of a norm-one element of trace t
    (lambda^n + lambda^{-n}, by the three-term recurrence)."""
    t = Fraction(t)
    if n < 0:
        n = -n
    prev, cur = Fraction(2), t
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, t * cur - prev
    return cur


def spectrum_commensurable_inclusion(source: TraceSpectrum,
                                     target_algebra: QuaternionAlgebra,
                                     target: TraceSpectrum,
                                     power_bound: int = 6) -> InclusionReport:
    """For each source trace t: (i) does Q(sqrt(t^2-4)) embed in the target
    algebra (field criterion); (ii) is there a target trace t' with
    lambda(t') = lambda(t)^n exactly for some 1 <= n <= power_bound."""
    if power_bound < 1:
        raise DomainError("power bound must be >= 1")
    target_traces = {abs(tr) for tr in target.traces()}
    entries = []
    for e in source.entries:
        t = e.trace
        verdict = embeds_quadratic_field(target_algebra, t * t - 4)
        witness_n = None
        witness_t = None
        for n in range(1, power_bound + 1):
            tn = abs(power_trace(t, n))
            if tn in target_traces:
                # exact identity check: lambda(t_n) = lambda(t)^n
                if quad_eigenvalue(tn) == quad_eigenvalue(t) ** n:
                    witness_n, witness_t = n, tn
                    break
        entries.append(InclusionEntry(t, verdict, witness_n, witness_t))
    return InclusionReport(tuple(entries), power_bound)
