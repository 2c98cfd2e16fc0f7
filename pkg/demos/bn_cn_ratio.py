"""The B_n/C_n length-similarity constant sqrt((2n+2)/(2n-1)).

For matched torus elements with log-eigenvalue vector mu, the squared length
through the B_n root system is (4n-2) sum mu_i^2 and through C_n it is
4(n+1) sum mu_i^2, so their ratio is a constant independent of mu."""

import math
import random
from fractions import Fraction

from lenspec.rootsys import (
    bc_ratio_squared,
    bn_cn_pair_lengths,
    build_root_system,
    length_sq_from_mu,
)


def main():
    print("exact closed forms at n = 3, mu = (1, 0, 0):")
    lam1, lam2, ratio = bn_cn_pair_lengths(3, [1, 0, 0])
    print(f"  lambda_B = {lam1:.12f}  (sqrt(10) = {math.sqrt(10):.12f})")
    print(f"  lambda_C = {lam2:.12f}")
    print(f"  ratio    = {ratio:.12f}  (sqrt(8/5) = {math.sqrt(8/5):.12f})")

    print("\nthe identity is exact in rational arithmetic:")
    for n in (3, 5, 8):
        mu = [Fraction(1, k + 2) for k in range(n)]
        ssq = sum(m * m for m in mu)
        b_sq = length_sq_from_mu(build_root_system("B", n), mu)
        c_sq = length_sq_from_mu(build_root_system("C", n), mu)
        assert b_sq == (4 * n - 2) * ssq
        assert c_sq == 4 * (n + 1) * ssq
        print(f"  n={n}: lambda_B^2 = (4n-2)*S and lambda_C^2 = 4(n+1)*S exactly; "
              f"ratio^2 = {bc_ratio_squared(n)}")

    print("\nrandom sweep (the ratio never moves):")
    rng = random.Random(0)
    for n in range(3, 11):
        expected = math.sqrt((2 * n + 2) / (2 * n - 1))
        worst = 0.0
        for _ in range(100):
            mu = [rng.uniform(-2, 2) for _ in range(n)]
            _, _, r = bn_cn_pair_lengths(n, mu)
            worst = max(worst, abs(r - expected))
        print(f"  n={n:2d}: ratio = {expected:.10f}, max |deviation| over "
              f"100 samples = {worst:.2e}")


if __name__ == "__main__":
    main()
