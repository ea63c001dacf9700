"""Brute-force verification of the closed-form predictions at desk scale.

Enumerates all {P_k, K_m}-free graphs up to isomorphism, computes the
exact extremal values, and compares them to the formulas, including the
extremal graph sets themselves.
"""

from pathclique import (
    EnumerationConfig,
    TheoremParams,
    enumerate_graphs,
    ex_oracle,
    report_csv,
    verify_theorem,
)

print("isomorph-free enumeration sizes ({P_6, K_4}-free):")
for n in range(1, 9):
    gs = enumerate_graphs(EnumerationConfig(n=n, forbid_path=6, forbid_clique=4))
    print(f"  n={n}: {len(gs)} classes")

print("\nexact extremal search, connected {P_6, K_4}-free, r=2:")
for n in range(6, 10):
    res = ex_oracle(n, 6, 4, 2, connected=True)
    print(f"  n={n}: max={res.value}  extremal={list(res.extremal)}")

print("\nfull sweep against the formula (k,m,r)=(6,4,2):")
rows = verify_theorem(TheoremParams(6, 4, 2), range(6, 10), "connected")
print(report_csv(rows))
