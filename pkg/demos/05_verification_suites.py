"""Exhaustive verification: run the property suites over a genus range.

Every statement the library relies on is owned by exactly one named suite,
so a red report is attributable.  Reports are deterministic (byte-stable
JSON, wall time excluded) and the run can be partitioned across processes
without changing the content.
"""

from nslab import REGISTRY, emit_report, run_suite

print("registered suites:")
for name, fn in REGISTRY.items():
    doc = (fn.__doc__ or "").strip().splitlines()[0]
    print(f"  {name:20s} {doc}")

print("\nrunning three suites at genus <= 5:")
for name in ("theoremB", "traceCriterion", "syzygyExactness"):
    report = run_suite(name, 5)
    print(
        f"  {name:20s} {'PASS' if report.passed else 'FAIL'}   "
        f"{report.semigroups_checked} semigroups, "
        f"{report.checks_executed} checks, {report.wall_time:.2f}s"
    )

print("\nfull text report for the conductor identity suite:")
print(emit_report(run_suite("conductorStableAnn", 4), "text").decode())

print("byte-stable JSON (identical across runs and job counts):")
blob = emit_report(run_suite("wangLowerBound", 3), "json")
print(blob.decode())
