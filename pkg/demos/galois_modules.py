"""Character lattices with Weyl-group actions: split ranks, irreducibility,
the orbit exponent of a moved character, and unit-rank bookkeeping."""

from lenspec.galmod import (
    FamilyDecomposition,
    GaloisModule,
    LocalRankProfile,
    dirichlet_rank,
    fixed_sublattice_rank,
    independence_check,
    is_q_irreducible,
    unscramble_exponent,
    verify_exponent_containment,
    weyl_weight_module,
)


def main():
    print("small hand-rolled modules:")
    swap = GaloisModule(2, (((0, 1), (1, 0)),), label="coordinate swap")
    neg = GaloisModule(1, (((-1,),),), label="sign flip")
    for module in (swap, neg):
        print(f"  {module.label}: fixed rank {fixed_sublattice_rank(module)}, "
              f"Q-irreducible: {is_q_irreducible(module)}")

    print("\nweight lattices under their full Weyl groups:")
    for family, rank in [("A", 2), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]:
        module = weyl_weight_module(family, rank)
        order = len(module.group_elements())
        print(f"  {family}{rank}: dim {module.dim}, |W| = {order}, "
              f"fixed rank {fixed_sublattice_rank(module)}, "
              f"irreducible: {is_q_irreducible(module)}")

    print("\norbit exponents (mu = sigma chi - chi, d Z^dim inside the orbit span):")
    for family, rank, chi in [("A", 2, [1, 0]), ("B", 2, [1, 0]), ("B", 3, [1, 1, 0])]:
        module = weyl_weight_module(family, rank)
        mu, d = unscramble_exponent(module, chi)
        ok = verify_exponent_containment(module, mu, d)
        print(f"  W({family}{rank}), chi={chi}: mu={list(mu)}, d={d}, "
              f"independently verified: {ok}")

    print("\nlinear disjointness at the degree level:")
    print("  [2,2] with compositum 4:", independence_check(FamilyDecomposition(4, (2, 2), 4)))
    print("  [2,2] with compositum 2:", independence_check(FamilyDecomposition(4, (2, 2), 2)))

    print("\nfree rank of S-units of a torus (sum of local ranks minus global):")
    profile = LocalRankProfile(("infty", "p7"), (1, 1), 0)
    print("  two places, local ranks (1,1), global 0 ->", dirichlet_rank(profile))


if __name__ == "__main__":
    main()
