"""Root systems of the Killing-Cartan families in explicit integer
coordinates, Weyl-group quantities, root-value multisets of torus elements,
and the geodesic length functional sqrt(sum (log|alpha(gamma)|)^2).

Coordinate conventions (fixed so root-value multisets are reproducible
bit-for-bit):

  A_n : e_i - e_j in R^{n+1}
  B_n : +-e_i, +-e_i +- e_j in R^n
  C_n : +-2e_i, +-e_i +- e_j in R^n
  D_n : +-e_i +- e_j in R^n
  G_2 : the sum-zero realization in R^3
  F_4, E_6, E_7, E_8 : the usual realizations in R^4 / R^8 with every
      coordinate doubled, clearing half-integer entries.  Doubling rescales
      the metric only; Weyl groups, cardinalities and closure properties are
      unchanged, and root values pick up a uniform squaring that is
      documented behavior for these families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .algnum import DEFAULT_PRECISION, Interval, QuadraticElement, log_abs
from .errors import DomainError, UnsupportedError

ROOT_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

WEYL_ORDER = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2 ** n * math.factorial(n),
    "C": lambda n: 2 ** n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

# brute-force caps for conjugacy-class enumeration; beyond these the
# operation reports unsupported instead of consulting tables
CLASS_RANK_CAP = {"A": 7, "B": 6, "C": 6, "D": 6, "E": 6, "F": 4, "G": 2}


def validate_family_rank(family: str, rank: int) -> None:
    if family not in ROOT_COUNT:
        raise DomainError(f"unknown family {family!r}")
    if family == "A" and rank >= 1:
        return
    if family in ("B", "C") and rank >= 2:
        return
    if family == "D" and rank >= 3:
        return
    if family == "E" and rank in (6, 7, 8):
        return
    if family == "F" and rank == 4:
        return
    if family == "G" and rank == 2:
        return
    raise DomainError(f"invalid (family, rank) pair ({family}, {rank})")


def _unit(n: int, i: int, scale: int = 1) -> list[int]:
    v = [0] * n
    v[i] = scale
    return v


def simple_roots(family: str, rank: int) -> list[tuple[int, ...]]:
    """Simple roots in the integer coordinate realizations above."""
    validate_family_rank(family, rank)
    n = rank
    if family == "A":
        dim = n + 1
        roots = [[0] * dim for _ in range(n)]
        for i in range(n):
            roots[i][i], roots[i][i + 1] = 1, -1
    elif family in ("B", "C", "D"):
        roots = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            roots[i][i], roots[i][i + 1] = 1, -1
        if family == "B":
            roots[n - 1] = _unit(n, n - 1)
        elif family == "C":
            roots[n - 1] = _unit(n, n - 1, 2)
        else:
            roots[n - 1] = [0] * n
            roots[n - 1][n - 2] = roots[n - 1][n - 1] = 1
    elif family == "G":
        roots = [[1, -1, 0], [-2, 1, 1]]
    elif family == "F":
        # doubled: (0,2,-2,0), (0,0,2,-2), (0,0,0,2), (1,-1,-1,-1)
        roots = [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
    else:  # E6, E7, E8 (doubled Bourbaki realization in R^8)
        a1 = [1, -1, -1, -1, -1, -1, -1, 1]
        a2 = [2, 2, 0, 0, 0, 0, 0, 0]
        chain = [[0] * 8 for _ in range(6)]
        for k in range(6):  # a3..a8: 2(e_{k+1} - e_k)
            chain[k][k + 1], chain[k][k] = 2, -2
        roots = [a1, a2] + chain[: rank - 2]
    return [tuple(r) for r in roots]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def reflect(root: Sequence[int], x: Sequence[int]) -> tuple[int, ...]:
    """Reflection of x in the hyperplane orthogonal to root (exact)."""
    num = 2 * _dot(x, root)
    den = _dot(root, root)
    if num % den != 0:
        raise DomainError("reflection leaves the integer lattice")
    c = num // den
    return tuple(xi - c * ri for xi, ri in zip(x, root))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    roots: tuple[tuple[int, ...], ...]

    @property
    def ambient_dim(self) -> int:
        return len(self.roots[0])

    def to_json_dict(self) -> dict:
        return {"family": self.family, "rank": self.rank,
                "roots": [list(r) for r in self.roots]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "RootSystem":
        return cls(doc["family"], int(doc["rank"]),
                   tuple(tuple(int(x) for x in r) for r in doc["roots"]))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Closure of the simple roots under their reflections, with the type
    invariants (cardinality, negation closure, reducedness) enforced."""
    simples = simple_roots(family, rank)
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for s in simples:
            for r in frontier:
                img = reflect(s, r)
                if img not in roots:
                    roots.add(img)
                    new.append(img)
        frontier = new
    ordered = tuple(sorted(roots))
    expected = ROOT_COUNT[family](rank)
    if len(ordered) != expected:
        raise DomainError(
            f"closure produced {len(ordered)} roots for {family}{rank}, expected {expected}")
    rootset = set(ordered)
    for r in ordered:
        if tuple(-x for x in r) not in rootset:
            raise DomainError("root set not closed under negation")
        for k in (2, 3):
            if tuple(k * x for x in r) in rootset:
                raise DomainError("root system not reduced")
    return RootSystem(family, rank, ordered)


def weyl_order(family: str, rank: int) -> int:
    """|W| by the closed product formulas (cross-checked against brute-force
    generation in the test suite for low rank)."""
    validate_family_rank(family, rank)
    return WEYL_ORDER[family](rank)


def hyperbolic_weyl_order(d: int) -> int:
    """Weyl order w(d) of the isometry group of hyperbolic d-space:
    2^l * l! for even d and 2^(l-1) * l! for odd d, with l = floor((d+1)/2).
    d = 3 is rejected (the group is not absolutely simple there)."""
    if not isinstance(d, int) or d < 2:
        raise DomainError(f"d must be an integer >= 2, got {d}")
    if d == 3:
        raise DomainError("d = 3 is excluded (PSO(3,1) is not absolutely simple)")
    ell = (d + 1) // 2
    if d % 2 == 0:
        return 2 ** ell * math.factorial(ell)
    return 2 ** (ell - 1) * math.factorial(ell)


def _root_permutation(system: RootSystem, root: Sequence[int]) -> tuple[int, ...]:
    index = {r: i for i, r in enumerate(system.roots)}
    return tuple(index[reflect(root, r)] for r in system.roots)


def weyl_generators(system: RootSystem) -> list[tuple[int, ...]]:
    """Simple reflections as permutations of the (sorted) root list."""
    return [_root_permutation(system, s) for s in simple_roots(system.family, system.rank)]


def generate_permutation_group(generators: list[tuple[int, ...]],
                               cap: int | None = None) -> list[tuple[int, ...]]:
    """BFS closure of a permutation generating set; deterministic order."""
    if not generators:
        return []
    n = len(generators[0])
    ident = tuple(range(n))
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for g in generators:
                q = tuple(p[g[i]] for i in range(n))
                if q not in seen:
                    seen.add(q)
                    order.append(q)
                    new.append(q)
                    if cap is not None and len(seen) > cap:
                        raise UnsupportedError(f"group closure exceeded cap {cap}")
        frontier = new
    return order


def weyl_group_brute(family: str, rank: int) -> list[tuple[int, ...]]:
    """The full Weyl group as root permutations (brute-force closure)."""
    system = build_root_system(family, rank)
    return generate_permutation_group(weyl_generators(system))


def weyl_conjugacy_classes(family: str, rank: int) -> int:
    """Number of nontrivial conjugacy classes of W, by brute-force class
    enumeration.  Ranks beyond the documented caps are unsupported."""
    validate_family_rank(family, rank)
    if rank > CLASS_RANK_CAP[family]:
        raise UnsupportedError(
            f"conjugacy classes of {family}{rank} exceed the brute-force cap")
    elements = weyl_group_brute(family, rank)
    gens = weyl_generators(build_root_system(family, rank))
    n = len(elements[0])
    unseen = set(elements)
    classes = 0
    while unseen:
        seed = next(iter(unseen))
        orbit = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    # simple reflections are involutions: g^-1 = g
                    y = tuple(g[x[g[i]]] for i in range(n))
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        unseen -= orbit
        classes += 1
    return classes - 1


# ---------------------------------------------------------------------------
# torus elements and the length functional
# ---------------------------------------------------------------------------

_PARAM_LEN = {
    "A": lambda n: n + 1,
    "B": lambda n: n,
    "C": lambda n: n,
    "D": lambda n: n,
    "G": lambda n: 3,
    "F": lambda n: 4,
    "E": lambda n: 8,
}

_PRODUCT_ONE = {"A", "G"}  # sum-zero realizations: eigenvalues multiply to 1


@dataclass(frozen=True)
class TorusElement:
    """Eigenvalue parameters of a semisimple torus element, one value per
    ambient coordinate of the root realization."""
    family: str
    rank: int
    lambdas: tuple

    def __post_init__(self):
        validate_family_rank(self.family, self.rank)
        expected = _PARAM_LEN[self.family](self.rank)
        if len(self.lambdas) != expected:
            raise DomainError(
                f"{self.family}{self.rank} needs {expected} eigenvalue parameters, "
                f"got {len(self.lambdas)}")
        for v in self.lambdas:
            if _value_is_zero(v):
                raise DomainError("eigenvalue parameters must be nonzero")
        if self.family in _PRODUCT_ONE:
            prod = 1
            for v in self.lambdas:
                prod = prod * v
            if isinstance(prod, float):
                if abs(prod - 1.0) > 1e-9:
                    raise DomainError(f"eigenvalues must multiply to 1, got {prod}")
            elif isinstance(prod, Interval):
                if not prod.contains_fraction(1):
                    raise DomainError("eigenvalue product interval excludes 1")
            else:
                if prod != 1:
                    raise DomainError(f"eigenvalues must multiply to 1, got {prod}")


def _value_is_zero(v) -> bool:
    if isinstance(v, QuadraticElement):
        return v.is_zero()
    if isinstance(v, Interval):
        return v.contains_zero()
    return v == 0


def identity_element(family: str, rank: int) -> TorusElement:
    return TorusElement(family, rank, tuple([1] * _PARAM_LEN[family](rank)))


def _value_pow(v, e: int):
    if e == 0:
        return 1
    if isinstance(v, (int, Fraction)):
        return Fraction(v) ** e
    return v ** e


def torus_root_values(system: RootSystem, element: TorusElement) -> list:
    """The multiset {alpha(gamma) : alpha in Phi} with alpha(gamma) =
    prod_k lambda_k^{alpha_k}; exact when the eigenvalue inputs are exact."""
    if (element.family, element.rank) != (system.family, system.rank):
        raise DomainError("element does not match the root system")
    lams = element.lambdas
    if len(lams) != system.ambient_dim:
        raise DomainError("eigenvalue dimension mismatch")
    values = []
    for alpha in system.roots:
        val = 1
        for lam, e in zip(lams, alpha):
            if e:
                val = val * _value_pow(lam, e)
        values.append(val)
    return values


@dataclass(frozen=True)
class LengthValue:
    """lambda_Gamma as a certified interval, plus the log-vector it came from."""
    value: Interval
    mu_vector: tuple

    def __float__(self):
        return float(self.value)


def _value_is_unit_norm_one(v) -> bool:
    """Exactly |v| = 1?"""
    if isinstance(v, QuadraticElement):
        return v == 1 or v == -1
    if isinstance(v, (int, Fraction)):
        return abs(Fraction(v)) == 1
    if isinstance(v, float):
        return v in (1.0, -1.0)
    return False


def length_lambda(values: Sequence, precision_bits: int = DEFAULT_PRECISION) -> LengthValue:
    """sqrt(sum (log|v|)^2) over the given root values (certified interval);
    exactly 0 when every value has absolute value exactly 1."""
    if not values:
        raise DomainError("empty value multiset")
    if all(_value_is_unit_norm_one(v) for v in values):
        zero = Interval(0, 0, precision_bits)
        return LengthValue(zero, tuple(Interval(0, 0, precision_bits) for _ in values))
    logs = tuple(log_abs(v, precision_bits) for v in values)
    total = Interval(0, 0, precision_bits)
    for L in logs:
        total = total + L * L
    return LengthValue(total.clamp_nonnegative().sqrt(), logs)


def length_of_element(system: RootSystem, element: TorusElement,
                      precision_bits: int = DEFAULT_PRECISION) -> LengthValue:
    return length_lambda(torus_root_values(system, element), precision_bits)


# ---------------------------------------------------------------------------
# the B_n / C_n comparison
# ---------------------------------------------------------------------------

def length_sq_from_mu(system: RootSystem, mu: Sequence) -> Fraction:
    """Exact lambda^2 = sum_alpha (alpha . mu)^2 for rational mu (the
    mu-vector is the log-eigenvalue vector, so alpha . mu = log|alpha(gamma)|)."""
    mu = [Fraction(m) for m in mu]
    if len(mu) != system.ambient_dim:
        raise DomainError("mu dimension mismatch")
    total = Fraction(0)
    for alpha in system.roots:
        s = sum((Fraction(a) * m for a, m in zip(alpha, mu)), Fraction(0))
        total += s * s
    return total


@lru_cache(maxsize=None)
def _root_matrix(family: str, rank: int) -> np.ndarray:
    return np.array(build_root_system(family, rank).roots, dtype=np.float64)


def length_sq_from_mu_float(family: str, rank: int, mu: Sequence[float]) -> float:
    """Float evaluation of sum_alpha (alpha . mu)^2 (for sweeps)."""
    r = _root_matrix(family, rank)
    if r.shape[1] != len(mu):
        raise DomainError("mu dimension mismatch")
    s = r @ np.asarray(mu, dtype=np.float64)
    return float(s @ s)


def bc_ratio_squared(n: int) -> Fraction:
    """(2n+2)/(2n-1), the square of the B_n/C_n length-similarity constant."""
    if n < 3:
        raise DomainError("the B/C comparison requires n >= 3")
    return Fraction(2 * n + 2, 2 * n - 1)


def bn_cn_pair_lengths(n: int, mu_vector: Sequence) -> tuple[float, float, float]:
    """(lambda_1, lambda_2, lambda_2/lambda_1) for the matched B_n/C_n torus
    elements with log-eigenvalue vector mu: lambda_1^2 = (4n-2) sum mu_i^2
    and lambda_2^2 = 4(n+1) sum mu_i^2, evaluated through the actual root
    systems rather than the closed forms."""
    if n < 3:
        raise DomainError("the B/C comparison requires n >= 3")
    mu = list(mu_vector)
    if len(mu) != n:
        raise DomainError(f"mu_vector must have {n} entries")
    if all(m == 0 for m in mu):
        raise DomainError("mu_vector must not be identically zero (degenerate element)")
    if any(isinstance(m, float) for m in mu):
        l1_sq = length_sq_from_mu_float("B", n, mu)
        l2_sq = length_sq_from_mu_float("C", n, mu)
    else:
        l1_sq = length_sq_from_mu(build_root_system("B", n), mu)
        l2_sq = length_sq_from_mu(build_root_system("C", n), mu)
    lam1 = math.sqrt(l1_sq)
    lam2 = math.sqrt(l2_sq)
    return lam1, lam2, math.sqrt(l2_sq / l1_sq)
