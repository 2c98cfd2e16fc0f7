"""Integer lattices with finite-group actions standing in for character
lattices of tori: split ranks, Q-irreducibility, the constructive exponent
extracted from character orbits, linear-disjointness bookkeeping, and
Dirichlet unit-rank arithmetic."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

from . import intlinalg
from . import rootsys
from .errors import DomainError, UnsupportedError

GROUP_CAP = 10_000  # closure beyond this is an explicit error, never truncation

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n))
        for i in range(n)
    )


def _mat_vec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class GaloisModule:
    """Z^dim with a finite group of unimodular integer matrices acting."""
    dim: int
    generators: tuple[Matrix, ...]
    label: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dim must be positive")
        gens = tuple(_as_matrix(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.dim or any(len(row) != self.dim for row in g):
                raise DomainError("generator size mismatch")
            if abs(intlinalg.det([list(r) for r in g])) != 1:
                raise DomainError("generators must be invertible over the integers")

    def group_elements(self, cap: int = GROUP_CAP) -> list[Matrix]:
        """All group elements in deterministic BFS generation order; an error
        if closure exceeds the cap (non-finite generator sets)."""
        return _closure(self.generators, self.dim, cap)

    def to_json_dict(self) -> dict:
        return {"dim": self.dim,
                "generators": [[list(row) for row in g] for g in self.generators]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "GaloisModule":
        return cls(int(doc["dim"]), tuple(_as_matrix(g) for g in doc["generators"]))


@lru_cache(maxsize=128)
def _closure_cached(generators: tuple[Matrix, ...], dim: int, cap: int) -> tuple[Matrix, ...]:
    ident = _identity(dim)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for m in frontier:
            for g in generators:
                prod = _mat_mul(m, g)
                if prod not in seen:
                    if len(seen) >= cap:
                        raise UnsupportedError(
                            f"group closure exceeded the cap of {cap} elements")
                    seen.add(prod)
                    order.append(prod)
                    new.append(prod)
        frontier = new
    return tuple(order)


def _closure(generators: tuple[Matrix, ...], dim: int, cap: int) -> list[Matrix]:
    return list(_closure_cached(generators, dim, cap))


# ---------------------------------------------------------------------------
# ranks and irreducibility
# ---------------------------------------------------------------------------

def fixed_sublattice_rank(module: GaloisModule) -> int:
    """Rank of {x : gx = x for all generators} via the integer kernel of the
    stacked (g - I) matrices."""
    stacked = []
    for g in module.generators:
        for i in range(module.dim):
            row = [g[i][j] - (1 if i == j else 0) for j in range(module.dim)]
            stacked.append(row)
    if not stacked:
        return module.dim
    return intlinalg.kernel_rank(stacked)


def _orbit_span_rank(elements: list[Matrix], v: Sequence[int]) -> int:
    return intlinalg.rank([list(_mat_vec(g, v)) for g in elements])


def _commutant_basis(module: GaloisModule) -> list[list[list[Fraction]]]:
    """Basis of {X : Xg = gX for all generators} over Q."""
    d = module.dim
    rows = []
    for g in module.generators:
        for i in range(d):
            for j in range(d):
                # (gX - Xg)[i][j] = sum_k g[i][k] X[k][j] - X[i][k] g[k][j]
                row = [0] * (d * d)
                for k in range(d):
                    row[k * d + j] += g[i][k]
                    row[i * d + k] -= g[k][j]
                rows.append(row)
    # kernel basis by rational elimination
    m = [[Fraction(x) for x in row] for row in rows]
    ncols = d * d
    pivots: dict[int, list[Fraction]] = {}
    r = 0
    reduced: list[list[Fraction]] = []
    a = m
    col_of_pivot = []
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(a)):
            if a[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col] / a[r][col]
                a[i] = [a[i][j] - f * a[r][j] for j in range(ncols)]
        col_of_pivot.append(col)
        r += 1
    free_cols = [c for c in range(ncols) if c not in col_of_pivot]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for i, pc in enumerate(col_of_pivot):
            x[pc] = -a[i][fc] / a[i][pc]
        basis.append([[x[i * d + j] for j in range(d)] for i in range(d)])
    return basis


def _poly_of_matrix(coeffs: list[Fraction], x: list[list[Fraction]]) -> list[list[Fraction]]:
    """Evaluate a polynomial (leading coefficient first) at a matrix."""
    d = len(x)
    acc = [[Fraction(0)] * d for _ in range(d)]
    for c in coeffs:
        # acc = acc * x + c*I
        nxt = [[sum(acc[i][k] * x[k][j] for k in range(d)) for j in range(d)] for i in range(d)]
        for i in range(d):
            nxt[i][i] += c
        acc = nxt
    return acc


def _invariant_subspace_from_commutant(module: GaloisModule, x: list[list[Fraction]]) -> bool:
    """True if the commutant element x exposes a proper invariant subspace
    (kernel of an irreducible factor of its characteristic polynomial)."""
    d = module.dim
    sm = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in x])
    lam = sympy.Symbol("_t")
    charpoly = sm.charpoly(lam)
    factors = sympy.factor_list(charpoly.as_expr())[1]
    for fac, _mult in factors:
        poly = sympy.Poly(fac, lam)
        coeffs = [Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in poly.all_coeffs()]
        fx = _poly_of_matrix(coeffs, x)
        rk = intlinalg.rank(fx)
        if 0 < d - rk < d:
            return True
    return False


def is_q_irreducible(module: GaloisModule, trials: int = 32, seed: int = 0) -> bool:
    """Whether Q^dim has no proper nonzero invariant subspace under the group.

    Strategy: orbit spans of basis vectors and seeded random vectors catch
    cyclic-vector failures; the commutant algebra decides the rest (scalar
    commutant means absolutely irreducible; a commutant element whose
    characteristic polynomial splits exposes an invariant kernel).  Declared
    irreducible only when no invariant subspace is found and the commutant is
    consistent with a single isotypic block."""
    if module.dim == 1:
        return True
    elements = module.group_elements()
    rng = random.Random(seed)
    probes = [[1 if i == j else 0 for j in range(module.dim)] for i in range(module.dim)]
    probes += [[rng.randint(-3, 3) for _ in range(module.dim)] for _ in range(trials)]
    for v in probes:
        if not any(v):
            continue
        r = _orbit_span_rank(elements, v)
        if 0 < r < module.dim:
            return False
    basis = _commutant_basis(module)
    if len(basis) == 1:
        return True  # scalars only: absolutely irreducible
    for x in basis:
        if not _is_scalar(x) and _invariant_subspace_from_commutant(module, x):
            return False
    for _ in range(trials):
        combo = None
        for x in basis:
            c = rng.randint(-4, 4)
            if combo is None:
                combo = [[c * e for e in row] for row in x]
            else:
                combo = [[combo[i][j] + c * x[i][j] for j in range(module.dim)]
                         for i in range(module.dim)]
        if combo is not None and not _is_scalar(combo) and \
                _invariant_subspace_from_commutant(module, combo):
            return False
    return True


def _is_scalar(x: list[list[Fraction]]) -> bool:
    d = len(x)
    return all(x[i][j] == (x[0][0] if i == j else 0) for i in range(d) for j in range(d))


# ---------------------------------------------------------------------------
# Weyl weight modules
# ---------------------------------------------------------------------------

def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """C[k][i] = 2 (alpha_i, alpha_k) / (alpha_k, alpha_k)."""
    simples = rootsys.simple_roots(family, rank)
    n = len(simples)
    c = [[0] * n for _ in range(n)]
    for k in range(n):
        norm = sum(x * x for x in simples[k])
        for i in range(n):
            num = 2 * sum(a * b for a, b in zip(simples[i], simples[k]))
            if num % norm != 0:
                raise DomainError("non-integral Cartan pairing")
            c[k][i] = num // norm
    return c


def weyl_weight_module(family: str, rank: int) -> GaloisModule:
    """The weight lattice of the root system with the Weyl group acting by
    simple reflections, in the fundamental-weight basis:
    s_i(w_j) = w_j - delta_{ij} alpha_i."""
    rootsys.validate_family_rank(family, rank)
    order = rootsys.weyl_order(family, rank)
    if order > GROUP_CAP:
        raise UnsupportedError(
            f"Weyl group of {family}{rank} has order {order}, beyond the cap {GROUP_CAP}")
    c = cartan_matrix(family, rank)
    n = rank
    gens = []
    for i in range(n):
        m = [[1 if k == j else 0 for j in range(n)] for k in range(n)]
        for k in range(n):
            m[k][i] -= c[k][i]
        gens.append(_as_matrix(m))
    return GaloisModule(n, tuple(gens), label=f"W({family}{rank}) weight lattice")


# ---------------------------------------------------------------------------
# the unscrambling exponent
# ---------------------------------------------------------------------------

def unscramble_exponent(module: GaloisModule, chi: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """For a character chi of a nonsplit irreducible module, produce
    mu = sigma chi - chi for the first group element sigma moving chi, and an
    exponent d > 0 with d Z^dim contained in the Z-span of the mu-orbit.

    d is the largest elementary divisor of the orbit-vector stack; it is a
    valid exponent but not guaranteed minimal."""
    chi = tuple(int(x) for x in chi)
    if len(chi) != module.dim:
        raise DomainError("character length mismatch")
    if not any(chi):
        raise DomainError("chi must be nonzero")
    if fixed_sublattice_rank(module) != 0:
        raise DomainError("module has nonzero fixed vectors; the nonsplit "
                          "hypothesis fails")
    elements = module.group_elements()
    sigma = next((g for g in elements if _mat_vec(g, chi) != chi), None)
    if sigma is None:
        raise DomainError("no group element moves chi (unexpected for fixed rank 0)")
    mu = tuple(a - b for a, b in zip(_mat_vec(sigma, chi), chi))
    orbit = []
    seen = set()
    for g in elements:
        v = _mat_vec(g, mu)
        if v not in seen:
            seen.add(v)
            orbit.append(list(v))
    divisors = intlinalg.smith_normal_form(orbit)
    nonzero = [d for d in divisors if d != 0]
    if len(nonzero) < module.dim:
        raise DomainError("orbit of mu does not span Q^dim; module is not "
                          "irreducible")
    return mu, int(nonzero[-1])


def verify_exponent_containment(module: GaloisModule, mu: Sequence[int], d: int) -> bool:
    """Independent check that d Z^dim lies in the Z-span of the mu-orbit,
    by integer linear solves (Hermite-form membership) for each basis vector."""
    elements = module.group_elements()
    orbit = []
    seen = set()
    for g in elements:
        v = _mat_vec(g, tuple(mu))
        if v not in seen:
            seen.add(v)
            orbit.append(list(v))
    hnf = intlinalg.hermite_form(orbit)
    for i in range(module.dim):
        target = [d if j == i else 0 for j in range(module.dim)]
        if not intlinalg.in_row_lattice(hnf, target):
            return False
    return True


# ---------------------------------------------------------------------------
# degree bookkeeping
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyDecomposition:
    """Degree data of a family of tori: orders of the individual splitting
    groups and of their compositum."""
    big_group_order: int
    quotient_orders: tuple[int, ...]
    compositum_order: int

    def __post_init__(self):
        object.__setattr__(self, "quotient_orders", tuple(int(q) for q in self.quotient_orders))
        if not self.quotient_orders:
            raise DomainError("need at least one quotient order")
        if any(q <= 0 for q in self.quotient_orders) or self.compositum_order <= 0 \
                or self.big_group_order <= 0:
            raise DomainError("orders must be positive")
        prod = 1
        for q in self.quotient_orders:
            prod *= q
        if prod % self.compositum_order != 0:
            raise DomainError("compositum order must divide the product of "
                              "quotient orders")


def independence_check(decomposition: FamilyDecomposition) -> bool:
    """Linear disjointness at the degree level: the compositum degree equals
    the product of the individual degrees."""
    prod = 1
    for q in decomposition.quotient_orders:
        prod *= q
    return decomposition.compositum_order == prod


@dataclass(frozen=True)
class LocalRankProfile:
    """Split ranks of a torus at a finite set of places plus the global rank."""
    places: tuple[str, ...]
    local_fixed_ranks: tuple[int, ...]
    global_fixed_rank: int
    dim: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(str(p) for p in self.places))
        object.__setattr__(self, "local_fixed_ranks",
                           tuple(int(r) for r in self.local_fixed_ranks))
        if len(self.places) != len(self.local_fixed_ranks):
            raise DomainError("one local rank per place")
        if not self.places:
            raise DomainError("need at least one place")
        if any(r < 0 for r in self.local_fixed_ranks) or self.global_fixed_rank < 0:
            raise DomainError("ranks must be nonnegative")
        if self.global_fixed_rank > min(self.local_fixed_ranks):
            raise DomainError("global rank cannot exceed any local rank")
        if self.dim is not None:
            if any(r > self.dim for r in self.local_fixed_ranks) \
                    or self.global_fixed_rank > self.dim:
                raise DomainError("ranks cannot exceed the torus dimension")


def dirichlet_rank(profile: LocalRankProfile) -> int:
    """Free rank of the S-unit group of the torus:
    sum of local split ranks minus the global split rank."""
    return sum(profile.local_fixed_ranks) - profile.global_fixed_rank
