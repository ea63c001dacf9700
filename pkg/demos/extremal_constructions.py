"""Tour of the extremal graph families and their basic invariants.

Builds each named family at small orders, prints graph6 codes, and checks
path/clique freeness with the exact detectors.
"""

from pathclique import (
    blocks,
    count_cliques,
    double_star,
    g1,
    g2,
    g3,
    g4,
    g5,
    graph6_encode,
    h_extremal,
    h_minus,
    is_free,
    longest_path_order,
    primitive,
    turan,
    turan_union,
)


def show(name, g, k=None, m=None):
    free = "" if k is None else f"  {{P_{k},K_{m}}}-free={is_free(g, k, m)}"
    print(
        f"{name:22s} n={g.n:2d} e={g.edge_count():3d} "
        f"p={longest_path_order(g):2d} g6={graph6_encode(g)}{free}"
    )


print("== Turan graphs ==")
for (n, p) in [(7, 3), (8, 4), (3, 5)]:
    show(f"T({n},{p})", turan(n, p))

print("\n== three-case extremal construction ==")
show("H_12(4,8)", h_extremal(12, 4, 8), 8, 4)   # m <= delta+2
show("H_12(5,8)", h_extremal(12, 5, 8), 8, 5)   # even k, large m
show("H_12(6,9)", h_extremal(12, 6, 9), 9, 6)   # odd k, large m
show("H_12(4,7) minus edge", h_minus(12, 4, 7), 7, 4)

print("\n== double stars and disjoint Turan unions ==")
show("S_{4,4}", double_star(4, 4), 5, 3)
show("2 T(4,2)", turan_union(8, 5, 3), 5, 3)

print("\n== block compositions ==")
f3 = g1(7, 6)
show("center + 3 K_2 blocks", f3, 6, 4)
print("   blocks:", [sorted(b) for b in blocks(f3).blocks])
show("two centers joined", g2(5, 7, 7), 7, 4)
show("with a C_4 block", g3(8, 7, primitive("cycle", 4), 0), 7, 4)
show("star composite", g4(5, 5), 7, 4)
show("star composite joined", g5(5, 5), 7, 4)

print("\n== clique counts of H_n(4,8) ==")
for r in (2, 3):
    print(f"  N_{r}:", [count_cliques(h_extremal(n, 4, 8), r) for n in range(5, 12)])
