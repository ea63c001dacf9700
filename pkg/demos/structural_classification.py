"""Exhaustive check of the structural classification.

Every connected {P_k, K_m}-free graph with minimum degree at least
floor(k/2)-1 must fall into one of four structural classes; the checker
enumerates them all and classifies each one.
"""

from pathclique import (
    classify_structure,
    disintegrate,
    g3_block_family,
    g4,
    graph6_encode,
    h_extremal,
    verify_classification,
)

print("classifying single graphs:")
for (g, k, m, label) in [
    (h_extremal(9, 4, 8), 8, 4, "H_9(4,8)"),
    (g4(5, 5), 7, 4, "star composite n=9"),
]:
    out = classify_structure(g, k, m)
    print(f"  {label}: {out.class_tag.value}  witness={out.witness}")

print("\nexhaustive classification sweeps:")
for (k, m, hi) in [(5, 3, 9), (6, 4, 9), (7, 4, 9)]:
    rep = verify_classification(k, m, range(k, hi + 1))
    print(f"  (k,m)=({k},{m}) n={k}..{hi}: total={rep['total']}  "
          f"histogram={rep['histogram']}  unclassified={len(rep['unclassified'])}")

print("\nadmissible substitution blocks (2-connected, clique-free):")
for (k, m) in [(5, 4), (7, 4), (7, 5)]:
    fam = g3_block_family(k, m)
    print(f"  k={k}, m={m}: {[graph6_encode(b) for b in fam]}")

print("\ndegree disintegration of H_12(4,8) at threshold 3 (stays intact):")
tr = disintegrate(h_extremal(12, 4, 8), 3)
print(f"  deleted={tr.deleted} core_size={tr.core_size}")
