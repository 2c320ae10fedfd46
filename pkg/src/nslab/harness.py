"""Suite runner and report serialization.

Work is partitioned by semigroup: each worker builds the per-semigroup
context, runs the requested suites, and returns plain records.  A single
reducer merges results in enumeration order, so report content does not
depend on the number of jobs; the wall time is the only field outside the
determinism contract and is excluded from the JSON form.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .semigroups import NumericalSemigroup, enumerate_up_to_genus, semigroup_from_generators, parse_semigroup
from .suites import REGISTRY, Recorder, SemigroupContext, Witness


class UnknownSuite(ValueError):
    """The requested suite name is not in the registry."""


class UnsupportedFormat(ValueError):
    """The requested report format is not one of text, json, csv."""


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    genus_range: tuple[int, int]
    semigroups_checked: int
    checks_executed: int
    violations: tuple[Witness, ...]
    informational: tuple[Witness, ...]
    wall_time: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        # wall_time is deliberately not serialized: reports are byte-stable.
        return {
            "suite": self.suite,
            "genus_range": list(self.genus_range),
            "semigroups_checked": self.semigroups_checked,
            "checks_executed": self.checks_executed,
            "violations": [w.to_json_dict() for w in self.violations],
            "informational": [w.to_json_dict() for w in self.informational],
        }


def suite_names(suite: str) -> tuple[str, ...]:
    if suite == "all":
        return tuple(REGISTRY)
    if suite not in REGISTRY:
        raise UnknownSuite(
            f"unknown suite {suite!r}; known: all, {', '.join(REGISTRY)}"
        )
    return (suite,)


def run_on_semigroup(
    names: tuple[str, ...], s: NumericalSemigroup
) -> tuple[tuple[Witness, ...], tuple[Witness, ...], int]:
    """Run the named suites on one semigroup; pure and picklable output."""
    ctx = SemigroupContext(s)
    rec = Recorder(semigroup=str(s))
    for name in names:
        REGISTRY[name](ctx, rec)
    return tuple(rec.violations), tuple(rec.informational), rec.checks


def _worker(args: tuple[tuple[str, ...], tuple[int, ...]]):
    names, gens = args
    return run_on_semigroup(names, semigroup_from_generators(gens))


def run_suite(
    suite: str,
    genus_max: int,
    jobs: int = 1,
    fail_fast: bool = False,
) -> SuiteReport:
    """Execute a suite (or "all") over every semigroup of genus at most
    genus_max.  Report content is independent of ``jobs``; with fail_fast
    the run stops after the first semigroup that produces a violation."""
    names = suite_names(suite)
    start = time.monotonic()
    semigroups = list(enumerate_up_to_genus(genus_max))

    results: list[tuple[tuple[Witness, ...], tuple[Witness, ...], int]] = []
    if jobs <= 1:
        for s in semigroups:
            out = run_on_semigroup(names, s)
            results.append(out)
            if fail_fast and out[0]:
                break
    else:
        payload = [(names, s.minimal_generators) for s in semigroups]
        chunk = max(1, len(payload) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for out in pool.map(_worker, payload, chunksize=chunk):
                results.append(out)
                if fail_fast and out[0]:
                    break

    if fail_fast:
        cut = next(
            (i + 1 for i, out in enumerate(results) if out[0]), len(results)
        )
        results = results[:cut]

    violations: list[Witness] = []
    informational: list[Witness] = []
    checks = 0
    for v, i, c in results:
        violations.extend(v)
        informational.extend(i)
        checks += c

    return SuiteReport(
        suite=suite,
        genus_range=(0, genus_max),
        semigroups_checked=len(results),
        checks_executed=checks,
        violations=tuple(violations),
        informational=tuple(informational),
        wall_time=time.monotonic() - start,
    )


def replay_witness(witness: Witness) -> bool:
    """Re-run the owning suite on the witness's semigroup and confirm the
    identical finding reappears.  The suite name is the prefix of the check
    identifier."""
    suite = witness.check.split(":", 1)[0]
    if suite not in REGISTRY:
        raise UnknownSuite(f"witness check {witness.check!r} names no suite")
    s = parse_semigroup(witness.semigroup)
    violations, informational, _ = run_on_semigroup((suite,), s)
    return witness in violations or witness in informational


def emit_report(report: SuiteReport, format: str) -> bytes:
    """Serialize a report: json (byte-stable, no wall time), csv (one row
    per witness), or text (human summary ending in PASS or FAIL)."""
    if format == "json":
        text = json.dumps(
            report.to_json_dict(), sort_keys=True, ensure_ascii=False, indent=2
        )
        return (text + "\n").encode("utf-8")

    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["semigroup", "check", "status", "details"])
        for w in report.violations:
            writer.writerow([w.semigroup, w.check, "violation", w.details])
        for w in report.informational:
            writer.writerow([w.semigroup, w.check, "informational", w.details])
        return buf.getvalue().encode("utf-8")

    if format == "text":
        lines = [
            f"suite           : {report.suite}",
            f"genus range     : {report.genus_range[0]}..{report.genus_range[1]}",
            f"semigroups      : {report.semigroups_checked}",
            f"checks executed : {report.checks_executed}",
            f"violations      : {len(report.violations)}",
            f"informational   : {len(report.informational)}",
            f"wall time       : {report.wall_time:.3f}s",
        ]
        for w in report.violations:
            lines.append(f"VIOLATION <{w.semigroup}> {w.check} {w.details}")
            for ideal in w.ideals:
                lines.append(f"    ideal {ideal}")
        for w in report.informational:
            lines.append(f"INFO <{w.semigroup}> {w.check} {w.details}")
        lines.append("PASS" if report.passed else "FAIL")
        return ("\n".join(lines) + "\n").encode("utf-8")

    raise UnsupportedFormat(f"unsupported format {format!r}")
