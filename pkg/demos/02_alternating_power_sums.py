"""Alternating power sums and their Euler-number closed form.

For even n the doubled alternating sum 2 sum_{l<n} (-1)^l l^m collapses to
-sum_{l<m} C(m,l) E_l n^{m-l}.  The closed form is what makes the p-adic
expansion of alternating harmonic sums possible later on.
"""

from eulerlp import alternating_power_sum, alternating_power_sum_closed

print("m\\n |", "  ".join(f"n={n:<2}" for n in (2, 4, 6, 8, 10)))
print("-" * 46)
for m in range(7):
    row = []
    for n in (2, 4, 6, 8, 10):
        direct = alternating_power_sum(n, m)
        closed = alternating_power_sum_closed(n, m)
        assert direct == closed
        row.append(f"{direct!s:<5}")
    print(f"m={m}  |", "  ".join(row))

print()
print("every entry above was computed twice: by direct summation and by the")
print("closed form, and the two agree exactly (they are asserted equal).")

big = alternating_power_sum_closed(100, 12)
print()
print(f"a larger case, n=100, m=12: {big}")
print(f"direct summation agrees: {alternating_power_sum(100, 12) == big}")
