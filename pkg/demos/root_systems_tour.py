"""Tour of the root-system layer: explicit roots, Weyl orders, conjugacy
classes, and the hyperbolic-space Weyl order ladder."""

from lenspec.rootsys import (
    build_root_system,
    hyperbolic_weyl_order,
    weyl_conjugacy_classes,
    weyl_group_brute,
    weyl_order,
)


def main():
    print("=" * 64)
    print("Root systems in explicit integer coordinates")
    print("=" * 64)
    for family, rank in [("A", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]:
        system = build_root_system(family, rank)
        print(f"\n{family}{rank}: {len(system.roots)} roots, ambient R^{system.ambient_dim}")
        print("  first few:", system.roots[:4])

    print("\n" + "=" * 64)
    print("Weyl group orders: closed formula vs brute-force generation")
    print("=" * 64)
    for family, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("F", 4)]:
        closed = weyl_order(family, rank)
        brute = len(weyl_group_brute(family, rank))
        classes = weyl_conjugacy_classes(family, rank)
        print(f"  W({family}{rank}): |W| = {closed} (brute {brute}), "
              f"{classes} nontrivial conjugacy classes")
    print("\n  B_n and C_n always share an order:")
    for n in range(2, 7):
        print(f"    n={n}: {weyl_order('B', n)} = {weyl_order('C', n)}")

    print("\n" + "=" * 64)
    print("w(d) for isometry groups of hyperbolic d-space (d = 3 excluded)")
    print("=" * 64)
    for d in [2] + list(range(4, 13)):
        print(f"  w({d:2d}) = {hyperbolic_weyl_order(d)}")
    print("  strictly increasing, so distinct dimensions are distinguished.")


if __name__ == "__main__":
    main()
