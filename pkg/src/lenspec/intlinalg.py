"""Exact integer/rational matrix kernels: rank, kernels, Hermite and Smith
normal forms, and integer-membership tests.

All matrices are lists of lists of Python ints (or Fractions where noted),
row-major.  Sizes here are tiny (dimension <= 8, a few hundred rows), so the
implementations favor clarity and exactness over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


def mat_vec(m: list[list[int]], v: list[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def det(m: list[list[int]]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination over Fractions."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                a[r] = [a[r][j] - factor * a[col][j] for j in range(n)]
    result = Fraction(sign)
    for i in range(n):
        result *= a[i][i]
    return result


def rank(m: list[list[int]]) -> int:
    """Rank over the rationals."""
    if not m:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(rows):
            if i != r and a[i][col] != 0:
                factor = a[i][col] / a[r][col]
                a[i] = [a[i][j] - factor * a[r][j] for j in range(cols)]
        r += 1
        if r == rows:
            break
    return r


def solve_rational(a: list[list[int]], b: list[Fraction]) -> list[Fraction] | None:
    """One rational solution x of a x = b, or None if inconsistent."""
    rows, cols = len(a), len(a[0])
    aug = [[Fraction(a[i][j]) for j in range(cols)] + [Fraction(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        for i in range(rows):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col] / aug[r][col]
                aug[i] = [aug[i][j] - factor * aug[r][j] for j in range(cols + 1)]
        pivots.append(col)
        r += 1
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        x[col] = aug[i][cols] / aug[i][col]
    return x


def kernel_rank(m: list[list[int]]) -> int:
    """Dimension of the rational kernel {x : m x = 0}."""
    if not m:
        return 0
    return len(m[0]) - rank(m)


def hermite_form(m: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form (nonzero rows only, echelon, positive pivots)."""
    a = [list(row) for row in m if any(row)]
    if not a:
        return []
    cols = len(a[0])
    result: list[list[int]] = []
    r = 0
    for col in range(cols):
        # gcd-reduce all rows below r on this column
        while True:
            live = [i for i in range(r, len(a)) if a[i][col] != 0]
            if not live:
                break
            pivot = min(live, key=lambda i: abs(a[i][col]))
            a[r], a[pivot] = a[pivot], a[r]
            if a[r][col] < 0:
                a[r] = [-x for x in a[r]]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][col] != 0:
                    q = a[i][col] // a[r][col]
                    a[i] = [a[i][j] - q * a[r][j] for j in range(cols)]
                    if a[i][col] != 0:
                        done = False
            if done:
                break
        if r < len(a) and a[r][col] != 0:
            # reduce the rows above r modulo the pivot
            for i in range(r):
                q = a[i][col] // a[r][col]
                if q:
                    a[i] = [a[i][j] - q * a[r][j] for j in range(cols)]
            r += 1
        if r == len(a):
            break
    result = [row for row in a[:r]]
    return result


def in_row_lattice(hnf: list[list[int]], v: list[int]) -> bool:
    """Whether v lies in the integer row span represented by a Hermite form."""
    w = list(v)
    cols = len(w)
    for row in hnf:
        col = next(j for j in range(cols) if row[j] != 0)
        if w[col] % row[col] == 0:
            q = w[col] // row[col]
            if q:
                w = [w[j] - q * row[j] for j in range(cols)]
    return not any(w)


def smith_normal_form(m: list[list[int]]) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... (nonnegative) of an integer matrix."""
    a = [list(row) for row in m]
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    divisors: list[int] = []
    top = 0
    while top < min(rows, cols):
        # find the smallest nonzero entry in the remaining block
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        # clear the row and column by division with remainder, repeating
        # until the pivot divides everything it meets
        while True:
            pivot = a[top][top]
            dirty = False
            for i in range(top + 1, rows):
                if a[i][top] != 0:
                    q = a[i][top] // pivot
                    a[i] = [a[i][j] - q * a[top][j] for j in range(cols)]
                    if a[i][top] != 0:
                        dirty = True
            for j in range(top + 1, cols):
                if a[top][j] != 0:
                    q = a[top][j] // pivot
                    for i in range(rows):
                        a[i][j] -= q * a[i][top]
                    if a[top][j] != 0:
                        dirty = True
            if dirty:
                # a smaller remainder appeared; move it to the pivot position
                best = None
                for i in range(top, rows):
                    for j in range(top, cols):
                        if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                            best = (i, j)
                bi, bj = best
                a[top], a[bi] = a[bi], a[top]
                for row in a:
                    row[top], row[bj] = row[bj], row[top]
                continue
            # pivot must also divide the interior block for the divisor chain
            offender = None
            for i in range(top + 1, rows):
                for j in range(top + 1, cols):
                    if a[i][j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[top] = [a[top][j] + a[offender][j] for j in range(cols)]
        divisors.append(abs(a[top][top]))
        top += 1
    return divisors
