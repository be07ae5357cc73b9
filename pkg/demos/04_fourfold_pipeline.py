"""Classification of the special Cremona transformations of P^7.

The dimension relation alone forces type (3, 3) with a fourfold base locus.
The sieve then runs on the general hyperplane section: 27 surviving pairs,
859 triples under the 4-secant bound, a unique log-general candidate that is
killed by a pluridegree proportionality argument, and finally the single
del Pezzo fibration of degree 12 and sectional genus 10.
"""

from cremona_sieve.pipeline import builtin_pipeline, run_pipeline

report = run_pipeline(builtin_pipeline("cubo-cubic-p7"))

types = report.stage("admissible-types").survivors
print("admissible types for n = 7 (n, delta1, delta2, dimB, dimB'):", types)

print("\nstage ledger:")
for stage in report.stages:
    print(f"  {stage.name:36s} {stage.mode:6s} "
          f"in = {stage.input_count:4d}  out = {stage.output_count:4d}")

print("\nthe would-be log-general candidate and its exclusion:")
stage = report.stage("log-general:filters")
print("  survivor of all pluridegree inequalities:", stage.survivors)
stage = report.stage("log-general:consistency")
for t, names in stage.exclusions:
    print(f"  {t} excluded by {names[0]}: d1^2 = d2*d0 would force d2^2 = d3*d1")

(finalist,) = report.finalists
print("\nfinalist:", tuple(finalist["tuple"]), "-", finalist["label"])
print("  pluridegrees:", tuple(finalist["pluridegrees"]))
print("  multidegree:", tuple(finalist["multidegree"]))
checks = finalist["checks"]
print(f"  base curve genus {checks['genus_base_curve']}, "
      f"polarization degree {checks['deg_HC']}, "
      f"fibre degree {checks['deg_fibre']}")
