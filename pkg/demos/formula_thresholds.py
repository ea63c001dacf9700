"""The density threshold that splits the problem into two regimes.

For each (k, m, r) the predicted extremal count is either the connected
construction value (Case1) or a per-vertex density bound attained by
disjoint Turan graphs (Case2); the comparison is exact rational.
"""

from pathclique import TheoremParams, ParameterError, h_value, predicted_ex, threshold_case

print("k  m  r   case    lhs    rhs")
for k in range(4, 11):
    for m in range(3, k):
        for r in (2, 3):
            try:
                TheoremParams(k, m, r)
            except ParameterError:
                continue
            c = threshold_case(k, m, r)
            print(f"{k:<2d} {m:<2d} {r:<2d}  {c.tag}  {c.lhs:5d}  {c.rhs}")

print("\npredictions at n = 24 (value, exact?):")
for (k, m, r) in [(8, 4, 2), (5, 3, 2), (9, 5, 2), (6, 4, 3)]:
    value, exact = predicted_ex(24, k, m, r)
    print(f"  ex(24, K_{r}, {{P_{k}, K_{m}}}) -> {value} ({'exact' if exact else 'upper bound'})"
          f"   connected: {h_value(24, m, k, r)}")
