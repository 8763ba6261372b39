"""The main congruence: alternating harmonic sums as p-adic series.

Twice the alternating sum of 1/j^r over units j <= np equals the series
-sum_{k>=1} C(-r,k) (pn)^k l_p(r+k, w^{-k-r}) in Z_p.  The left side is an
honest rational computed by direct summation; the right side never sees it.
Their agreement digit for digit is the end-to-end check of the whole stack.
"""

from eulerlp import GridConfig, alt_harmonic_sum, run_grid, verify_main_congruence

print("anchor instance p=3, n=2, r=1:")
s = alt_harmonic_sum(3, 2, 1)
print(f"  sum over j in (1,2,4,5) of (-1)^j/j = {s}, doubled: {2 * s}")
report = verify_main_congruence(3, 2, 1, 3)
print(f"  both sides mod 27: lhs digits {report.lhs['digits']}, "
      f"rhs digits {report.rhs['digits']} (little-endian), match: {report.match}")

print()
print("residues of both sides at precision 6 over a grid:")
print(" p  r  n   lhs residue   rhs residue  match")
for p in (3, 5, 7):
    for r in (1, 2):
        for n in (2, 4):
            rep = verify_main_congruence(p, n, r, 6)
            lhs = sum(d * p**i for i, d in enumerate(rep.lhs["digits"]))
            rhs = sum(d * p**i for i, d in enumerate(rep.rhs["digits"]))
            print(f" {p}  {r}  {n}  {lhs:>12} {rhs:>13}  {rep.match}")

print()
print("the full verification grid (all check suites):")
config = GridConfig(primes=(3, 5, 7), r_values=(1, 2, 3, 4), n_values=(2, 4, 6),
                    precision=6)
reports = run_grid(config)
by_check = {}
for rep in reports:
    ok, total = by_check.get(rep.check, (0, 0))
    by_check[rep.check] = (ok + rep.match, total + 1)
for check, (ok, total) in by_check.items():
    print(f"  {check:<14} {ok}/{total} matched")
print(f"all {len(reports)} reports matched: {all(r.match for r in reports)}")
