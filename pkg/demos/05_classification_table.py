"""Cross-checking the classification table and the type solver.

The thirteen known special Cremona transformations with small base locus are
embedded as static data.  Every multidegree is re-checked against the product
and log-concavity restrictions, and the three cubic rows are recomputed from
scratch out of (degree, sectional genus) alone.  The admissible-type solver
reproduces the short lists of possible (n, delta1, delta2) for each base
locus dimension.
"""

from cremona_sieve import Multidegree, admissible_types, multidegree_admissible
from cremona_sieve.classification_table import ROWS, verify_classification_table

print("classification table:")
for row, result in zip(ROWS, verify_classification_table()):
    md = ",".join(str(x) for x in result["multidegree"])
    status = "ok" if result["admissible"] else "VIOLATION"
    extra = ""
    if result["recomputed"] is not None:
        extra = "  [recomputed from (lambda, g) = "
        extra += f"({row.lam}, {row.g}): {'match' if result['matches'] else 'MISMATCH'}]"
    print(f"  {row.row:>4s}  n={row.n}  {md:28s} {status}{extra}")

print("\nadmissible types by base locus dimension:")
for r in (1, 2, 3, 4):
    types = admissible_types(r=r)
    shown = ", ".join(f"(n={t.n}, type=({t.delta1},{t.delta2}))" for t in types)
    print(f"  r = {r}: {shown}")

print("\nmultidegree admissibility is a standalone check:")
good = (1, 3, 9, 14, 12, 5, 1)
bad = (1, 3, 9, 27, 81, 5, 1)
print(f"  {good}: {multidegree_admissible(Multidegree(good)) or 'admissible'}")
print(f"  {bad}: {multidegree_admissible(Multidegree(bad))}")
