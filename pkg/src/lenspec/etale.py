"""Local-global embedding criteria for commutative etale algebras in central
simple algebras, comparison of local index profiles, and the reciprocal
characteristic-polynomial truncation that matches eigenvalue sets closed
under inversion.

Place labels are opaque strings here: this module never computes
completions; all local degrees and indices are supplied by the caller."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class EtaleProfile:
    """Degrees of the field factors of a commutative etale algebra, plus the
    local degree partition of each factor at each labeled place."""
    factor_degrees: tuple[int, ...]
    local_degrees: Mapping[str, tuple[tuple[int, ...], ...]]
    # local_degrees[place][factor] = multiset of local degrees [E_w : K_v]

    def __post_init__(self):
        object.__setattr__(self, "factor_degrees",
                           tuple(int(d) for d in self.factor_degrees))
        object.__setattr__(self, "local_degrees",
                           {str(p): tuple(tuple(int(x) for x in f) for f in fs)
                            for p, fs in self.local_degrees.items()})
        if not self.factor_degrees or any(d < 1 for d in self.factor_degrees):
            raise DomainError("factor degrees must be positive")
        for place, factors in self.local_degrees.items():
            if len(factors) != len(self.factor_degrees):
                raise DomainError(f"place {place}: one degree partition per factor")
            for deg, part in zip(self.factor_degrees, factors):
                if sum(part) != deg or any(x < 1 for x in part):
                    raise DomainError(
                        f"place {place}: local degrees {part} do not partition {deg}")

    @property
    def degree(self) -> int:
        return sum(self.factor_degrees)

    def to_json_dict(self) -> dict:
        return {"factor_degrees": list(self.factor_degrees),
                "local_degrees": {p: [list(f) for f in fs]
                                  for p, fs in sorted(self.local_degrees.items())}}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "EtaleProfile":
        return cls(tuple(doc["factor_degrees"]),
                   {p: tuple(tuple(f) for f in fs)
                    for p, fs in doc["local_degrees"].items()})


@dataclass(frozen=True)
class CSAProfile:
    """A central simple algebra of given degree through its local indices:
    m[place] > 1 at finitely many labeled places, 1 elsewhere."""
    degree: int
    local_indices: Mapping[str, int]

    def __post_init__(self):
        object.__setattr__(self, "local_indices",
                           {str(p): int(m) for p, m in self.local_indices.items()})
        if self.degree < 1:
            raise DomainError("degree must be positive")
        for place, m in self.local_indices.items():
            if m < 1 or self.degree % m != 0:
                raise DomainError(
                    f"local index {m} at {place} must divide the degree {self.degree}")

    def index_at(self, place: str) -> int:
        return self.local_indices.get(str(place), 1)

    def to_json_dict(self) -> dict:
        return {"degree": self.degree,
                "local_indices": dict(sorted(self.local_indices.items()))}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "CSAProfile":
        return cls(int(doc["degree"]), dict(doc["local_indices"]))


def embeds_in_csa_local(factor_degrees: Sequence[int], local_index: int) -> bool:
    """Local criterion: the etale algebra embeds in a matrix algebra over a
    division algebra of degree m iff every factor degree is divisible by m."""
    if local_index < 1:
        raise DomainError("local index must be positive")
    degrees = [int(d) for d in factor_degrees]
    if not degrees or any(d < 1 for d in degrees):
        raise DomainError("factor degrees must be positive")
    return all(d % local_index == 0 for d in degrees)


def embeds_in_csa_global(etale: EtaleProfile, csa: CSAProfile) -> bool:
    """Global criterion: at every labeled place, every local degree of every
    factor is divisible by the local index there."""
    if etale.degree != csa.degree:
        raise DomainError(
            f"etale degree {etale.degree} does not match algebra degree {csa.degree}")
    places = set(etale.local_degrees) | set(csa.local_indices)
    for place in places:
        m = csa.index_at(place)
        if m == 1:
            continue
        factors = etale.local_degrees.get(place)
        if factors is None:
            raise DomainError(f"no local degree data for ramified place {place}")
        for part in factors:
            if any(x % m != 0 for x in part):
                return False
    return True


def same_maximal_etale(csa1: CSAProfile, csa2: CSAProfile) -> bool:
    """Whether two algebras admit exactly the same commutative etale
    subalgebras: equality of local index profiles everywhere."""
    if csa1.degree != csa2.degree:
        raise DomainError("degrees differ")
    places = set(csa1.local_indices) | set(csa2.local_indices)
    return all(csa1.index_at(p) == csa2.index_at(p) for p in places)


# ---------------------------------------------------------------------------
# reciprocal characteristic polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReciprocalPolynomial:
    """Exact polynomial with palindromic coefficients (plus type:
    p(x) = x^deg p(1/x)), matching eigenvalue multisets closed under
    inversion.  Coefficients are leading-first."""
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 2 or coeffs[0] == 0:
            raise DomainError("need a nonconstant polynomial with nonzero lead")
        if coeffs != coeffs[::-1]:
            raise DomainError(f"coefficients {coeffs} are not palindromic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def to_json_dict(self) -> dict:
        return {"coefficients": [str(c) for c in self.coefficients]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ReciprocalPolynomial":
        return cls(tuple(Fraction(c) for c in doc["coefficients"]))


def _poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def truncate_reciprocal_charpoly(coefficients: Sequence) -> ReciprocalPolynomial:
    """Divide a degree-(2n+1) characteristic polynomial with p(1) = 0 by
    (x - 1), dropping the forced eigenvalue 1; the quotient must be
    palindromic of the plus type (minus-type inputs are rejected, not
    silently negated).  Coefficients are leading-first rationals."""
    coeffs = [Fraction(c) for c in coefficients]
    if not coeffs or coeffs[0] == 0:
        raise DomainError("leading coefficient must be nonzero")
    degree = len(coeffs) - 1
    if degree < 3 or degree % 2 == 0:
        raise DomainError(f"degree must be odd and >= 3, got {degree}")
    if _poly_eval(coeffs, Fraction(1)) != 0:
        raise DomainError("p(1) != 0: no eigenvalue 1 to truncate")
    # synthetic division by (x - 1)
    quotient = []
    carry = Fraction(0)
    for c in coeffs[:-1]:
        carry = carry + c
        quotient.append(carry)
    if quotient != quotient[::-1]:
        raise DomainError(
            f"quotient {quotient} is not plus-type palindromic; the eigenvalue "
            "multiset of the truncation would not be inversion-closed")
    return ReciprocalPolynomial(tuple(quotient))


def expand_by_x_minus_one(p: ReciprocalPolynomial) -> tuple[Fraction, ...]:
    """Multiply back by (x - 1) (inverse of the truncation, for round trips)."""
    q = list(p.coefficients) + [Fraction(0)]
    for i in range(len(q) - 1, 0, -1):
        q[i] -= p.coefficients[i - 1]
    return tuple(q)
