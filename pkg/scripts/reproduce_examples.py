"""Print the double-star generating functions, counts and size profiles."""

from treegf import WeightMode, apply_mode, build_tree, pair_gf, rooted_gf, total_gf
from treegf.genfunc import pair_profile, rooted_profile, size_profile

A, C, B = 1, 2, 3


def main() -> None:
    tree = build_tree(6, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    for mode in (WeightMode.EDGE_VAR, WeightMode.VERTEX_VAR, WeightMode.UNIT):
        t = apply_mode(tree, mode)
        print(f"[{mode.value}]")
        print(f"  F(T)      = {total_gf(t)}")
        print(f"  F(T; A)   = {rooted_gf(t, A)}")
        print(f"  F(T; B,C) = {pair_gf(t, B, C)}")
    print("k  a(T;k)  a(T;A;k)  a(T;B,C;k)")
    rows = zip(size_profile(tree).a, rooted_profile(tree, A).a, pair_profile(tree, B, C).a)
    for k, (a, r, p) in enumerate(rows):
        print(f"{k}  {a:6}  {r:8}  {p:10}")


if __name__ == "__main__":
    main()
