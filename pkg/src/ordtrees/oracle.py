"""Exhaustive ground truth and end-to-end verification suites.

``tally`` walks every vertex of every tree with ``n`` edges and counts it
under each statistic it contributes to.  The ``verify_*`` functions compare
those tallies with the closed forms, and check the bijections member by member.
Failures are returned as data, each with a witness that reproduces it.
"""

from __future__ import annotations

import json
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Callable

from . import counts
from .counts import CountTable
from .level_lemma import ell_set_size, in_ell_set, phi_map, phi_map_inv
from .marked import CLASSES, FROM_D, TO_D, class_parameters, in_class
from .tree_core import MarkedTree, all_stats, enumerate_trees, enumerate_words, parse

# per-vertex statistics ignore the (k, l) coordinates they do not use
NONE = -1


@dataclass(frozen=True)
class Failure:
    check: str
    witness: str
    expected: Any
    actual: Any

    def sort_key(self) -> tuple[str, str, str, str]:
        return self.check, self.witness, str(self.expected), str(self.actual)

    def to_dict(self) -> dict:
        return {"check": self.check, "witness": self.witness,
                "expected": _jsonable(self.expected), "actual": _jsonable(self.actual)}


def _jsonable(x):
    return x if isinstance(x, (int, str, bool, type(None))) else str(x)


@dataclass
class VerificationReport:
    suite: str
    scope: dict
    failures: list[Failure] = field(default_factory=list)
    checks: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, witness: str, expected, actual) -> None:
        self.failures.append(Failure(check, witness, expected, actual))

    def expect(self, check: str, witness: str, expected, actual) -> None:
        self.checks += 1
        if expected != actual:
            self.fail(check, witness, expected, actual)

    def to_dict(self, timing: bool = False) -> dict:
        d = {"suite": self.suite, "scope": self.scope, "checks": self.checks,
             "passed": self.ok,
             "failures": [f.to_dict() for f in sorted(self.failures, key=Failure.sort_key)]}
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d

    def to_text(self, timing: bool = False) -> str:
        scope = ", ".join(f"{k}={v}" for k, v in self.scope.items())
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)} failures)"
        head = f"{self.suite}: {status}; {self.checks} checks; scope {scope}"
        if timing:
            head += f"; {self.elapsed:.2f}s"
        lines = [head]
        for f in sorted(self.failures, key=Failure.sort_key):
            lines.append(f"  {f.check} at {f.witness}: expected {f.expected}, got {f.actual}")
        return "\n".join(lines)


def reports_to_json(reports: list[VerificationReport], timing: bool = False) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=1) + "\n"


# -- tallies -----------------------------------------------------------------

def _tally_range(n: int, start: int, stop: int | None) -> CountTable:
    raw: dict = defaultdict(int)
    for word in islice(enumerate_words(n), start, stop):
        for st in all_stats(parse(word)):
            for cls, (k, l) in class_parameters(st).items():
                raw[(k, l, cls)] += 1
            raw[(st.outdegree, st.level, "outdeg-level")] += 1
            raw[(st.degree, st.level, "degree-level")] += 1
            raw[(st.degree, NONE, "degree")] += 1
            raw[(st.outdegree, NONE, "outdegree")] += 1
            raw[(NONE, st.level, "level")] += 1
            raw[(NONE, NONE, "vertices")] += 1
            raw[(NONE, NONE, "leaves" if st.is_leaf else "non-leaves")] += 1
            raw[(NONE, NONE, "first-children" if st.is_first_child else "non-first-children")] += 1
            if st.is_leaf:
                raw[(NONE, st.level, "leaves-at-level")] += 1
            if st.is_first_child:
                raw[(NONE, st.level, "first-children-at-level")] += 1
    return CountTable(n, dict(raw))


def _add_cumulative(t: CountTable) -> CountTable:
    """Fold exact outdegree/level tallies into 'at least k, at least l' tallies."""
    n = t.n
    size = n + 2
    cum = [[0] * (size + 1) for _ in range(size + 1)]
    for k in range(size - 1, -1, -1):
        for l in range(size - 1, -1, -1):
            cum[k][l] = (t[(k, l, "outdeg-level")] + cum[k + 1][l]
                         + cum[k][l + 1] - cum[k + 1][l + 1])
    for k in range(n + 1):
        for l in range(n + 1):
            t.entries[(k, l, "cumulative")] = cum[k][l]
    return t


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def tally(n: int, workers: int = 1) -> CountTable:
    """Brute-force table of every statistic over all trees with ``n`` edges."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if workers <= 1:
        table = _tally_range(n, 0, None)
    else:
        spans = _chunks(counts.catalan(n), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_range, [n] * len(spans),
                                  [a for a, _ in spans], [b for _, b in spans]))
        table = CountTable(n)
        for p in parts:
            table = table.merge(p)
    return _add_cumulative(table)


# -- count verification ------------------------------------------------------

def _w(**kw) -> str:
    return ",".join(f"{k}={v}" for k, v in kw.items())


def _check_counts_for(report: VerificationReport, t: CountTable,
                      class_formula: Callable[[int, int, int], int]) -> None:
    n = t.n
    half = counts.half_vertices(n)
    report.expect("vertices", _w(n=n), counts.binomial(2 * n, n), t[(NONE, NONE, "vertices")])
    for stat in ("first-children", "non-first-children", "leaves", "non-leaves"):
        report.expect(f"half:{stat}", _w(n=n), half, t[(NONE, NONE, stat)])

    # four classes against the closed form, including vanishing outside 1..n
    for k in range(1, n + 2):
        for l in range(1, n + 2):
            expected = class_formula(n, k, l)
            for cls in CLASSES:
                report.expect(f"class:{cls}", _w(n=n, k=k, l=l), expected, t[(k, l, cls)])
    for (k, l, stat), c in t.entries.items():
        if stat in CLASSES and not (1 <= k <= n and 1 <= l <= n) and c:
            report.fail(f"class:{stat}:range", _w(n=n, k=k, l=l), 0, c)

    for k in range(n + 1):
        for l in range(n + 1):
            w = _w(n=n, k=k, l=l)
            report.expect("cumulative", w, counts.count_cumulative(n, k, l),
                          t[(k, l, "cumulative")])
            sieve = counts.count_outdeg_level(n, k, l)
            report.expect("sieve:closed-form", w, counts.outdeg_level_closed_form(n, k, l), sieve)
            report.expect("sieve:oracle", w, sieve, t[(k, l, "outdeg-level")])

    for k in range(1, n + 2):
        w = _w(n=n, k=k)
        by_degree = counts.count_by_degree(n, k)
        report.expect("by-degree:outdegree", w, by_degree, t[(k, NONE, "outdegree")])
        for cls in CLASSES:
            report.expect(f"by-degree:{cls}", w, by_degree,
                          sum(t[(k, l, cls)] for l in range(1, n + 1)))
        report.expect("factor-two:formula", w, counts.count_degree(n, k), t[(k, NONE, "degree")])
        report.expect("factor-two:oracle", w, 2 * t[(k, NONE, "outdegree")],
                      t[(k, NONE, "degree")])
        odd = sum(t[(k, l, "degree-level")] for l in range(1, n + 1, 2))
        even = sum(t[(k, l, "degree-level")] for l in range(0, n + 1, 2))
        report.expect("parity:oracle", w, even, odd)
        report.expect("parity:formula", w,
                      sum(counts.count_degree_level(n, k, l) for l in range(0, n + 1, 2)),
                      sum(counts.count_degree_level(n, k, l) for l in range(1, n + 1, 2)))
        for l in range(0, n + 1):
            report.expect("degree-level", _w(n=n, k=k, l=l),
                          counts.count_degree_level(n, k, l), t[(k, l, "degree-level")])

    for l in range(1, n + 2):
        w = _w(n=n, l=l)
        by_level = counts.count_by_level(n, l)
        report.expect("by-level:leaves", w, by_level, t[(NONE, l, "leaves-at-level")])
        report.expect("by-level:first-children", w, by_level,
                      t[(NONE, l, "first-children-at-level")])
        for cls in CLASSES:
            report.expect(f"by-level:{cls}", w, by_level,
                          sum(t[(k, l, cls)] for k in range(1, n + 1)))


def check_identities(report: VerificationReport, n_max: int) -> None:
    """Both telescoping identities and the summation closures, exact, up to ``n_max``."""
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                w = _w(n=n, k=k, l=l)
                lhs, rhs = counts.telescope_by_level(n, k, l)
                report.expect("telescope:level", w, lhs, rhs)
                lhs, rhs = counts.telescope_by_degree(n, k, l)
                report.expect("telescope:degree", w, lhs, rhs)
        for k in range(1, n + 1):
            report.expect("closure:sum-l", _w(n=n, k=k), counts.count_by_degree(n, k),
                          sum(counts.count_class(n, k, l) for l in range(1, n + 1)))
        for l in range(1, n + 1):
            report.expect("closure:sum-k", _w(n=n, l=l), counts.count_by_level(n, l),
                          sum(counts.count_class(n, k, l) for k in range(1, n + 1)))
        report.expect("closure:sieve-total", _w(n=n), counts.binomial(2 * n, n),
                      sum(counts.count_outdeg_level(n, k, l)
                          for k in range(n + 1) for l in range(n + 1)))


def verify_counts(n_max: int, *, workers: int = 1, identity_max: int = 30,
                  class_formula: Callable[[int, int, int], int] = counts.count_class,
                  ) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(
        "counts", {"n": f"1..{n_max}", "k,l": "0..n+1", "identities_n": f"1..{identity_max}"})
    for n in range(1, n_max + 1):
        _check_counts_for(report, tally(n, workers), class_formula)
    check_identities(report, identity_max)
    report.elapsed = time.perf_counter() - start
    return report


# -- bijection verification --------------------------------------------------

def marked_trees(n: int):
    """Every marked tree with ``n`` edges, with the marked vertex's statistics."""
    for t in enumerate_trees(n):
        for v, st in enumerate(all_stats(t)):
            yield MarkedTree(t, v), st


def class_members(n: int) -> dict[tuple[str, int, int], list[MarkedTree]]:
    members: dict = defaultdict(list)
    for m, st in marked_trees(n):
        for cls, (k, l) in class_parameters(st).items():
            members[(cls, k, l)].append(m)
    return members


def _bijections_for(n: int, to_d: dict, from_d: dict) -> VerificationReport:
    report = VerificationReport("bijections", {})
    members = class_members(n)
    params = sorted({(k, l) for _, k, l in members})
    for k, l in params:
        d_set = set(members.get(("D", k, l), []))
        for cls in ("A", "B", "C"):
            source = members.get((cls, k, l), [])
            fwd, inv = to_d[cls], from_d[cls]
            label = f"{cls}<->D"
            images = set()
            for m in source:
                w = f"{m} k={k} l={l}"
                try:
                    img = fwd(m, k, l)
                except ValueError as exc:
                    report.fail(f"{label}:forward-raised", w, "image", str(exc))
                    continue
                report.checks += 1
                images.add(img)
                if img.tree.edges != n or not in_class(img.stats, "D", k, l):
                    report.fail(f"{label}:forward-class", w, "member of D", str(img))
                    continue
                try:
                    back = inv(img, k, l)
                except ValueError as exc:
                    report.fail(f"{label}:round-trip-raised", w, str(m), str(exc))
                    continue
                report.expect(f"{label}:round-trip", w, str(m), str(back))
            report.expect(f"{label}:injective", _w(n=n, k=k, l=l), len(source), len(images))
            report.expect(f"{label}:onto", _w(n=n, k=k, l=l), len(d_set), len(images & d_set))
            report.expect(f"{label}:image-in-D", _w(n=n, k=k, l=l), 0, len(images - d_set))
            source_set = set(source)
            for m in d_set:
                w = f"{m} k={k} l={l}"
                try:
                    pre = inv(m, k, l)
                    report.checks += 1
                    if pre not in source_set:
                        report.fail(f"{label}:inverse-class", w, f"member of {cls}", str(pre))
                    else:
                        report.expect(f"{label}:inverse-round-trip", w, str(m), str(fwd(pre, k, l)))
                except ValueError as exc:
                    report.fail(f"{label}:inverse-raised", w, "preimage", str(exc))
            report.expect(f"{label}:cardinality", _w(n=n, k=k, l=l),
                          counts.count_class(n, k, l), len(source))
    return report


def _phi_for(n: int) -> VerificationReport:
    report = VerificationReport("phi", {})
    trees = list(marked_trees(n))
    for k in range(n + 1):
        for l in range(n + 1):
            w_kl = _w(n=n, k=k, l=l)
            images = set()
            size = 0
            for m, st in trees:
                if st.outdegree < k or st.level < l:
                    continue
                size += 1
                w = f"{m} k={k} l={l}"
                try:
                    q = phi_map(m, k, l)
                except (ValueError, AssertionError) as exc:
                    report.fail("phi:forward-raised", w, "path", repr(exc))
                    continue
                report.checks += 1
                if not in_ell_set(q, n, k, l):
                    report.fail("phi:in-L", w, "member of L", str(q))
                images.add(q)
                try:
                    back = phi_map_inv(q, n, k, l)
                except (ValueError, AssertionError) as exc:
                    report.fail("phi:inverse-raised", w, str(m), repr(exc))
                    continue
                report.expect("phi:round-trip", w, str(m), str(back))
            expected = ell_set_size(n, k, l)
            report.expect("phi:class-size", w_kl, expected, size)
            report.expect("phi:injective", w_kl, size, len(images))
            report.expect("phi:image-size", w_kl, expected, len(images))
    return report


def _merge(suite: str, scope: dict, parts: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(suite, scope)
    for p in parts:
        out.failures.extend(p.failures)
        out.checks += p.checks
    out.failures.sort(key=Failure.sort_key)
    return out


def _run_per_n(fn, args_per_n: list[tuple], workers: int) -> list[VerificationReport]:
    if workers <= 1:
        return [fn(*a) for a in args_per_n]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*args_per_n)))


def verify_bijections(n_max: int, *, workers: int = 1,
                      to_d: dict | None = None, from_d: dict | None = None,
                      ) -> VerificationReport:
    start = time.perf_counter()
    to_d = to_d or TO_D
    from_d = from_d or FROM_D
    parts = _run_per_n(_bijections_for, [(n, to_d, from_d) for n in range(1, n_max + 1)], workers)
    report = _merge("bijections", {"n": f"1..{n_max}", "k,l": "all feasible"}, parts)
    report.elapsed = time.perf_counter() - start
    return report


def verify_phi(n_max: int, *, workers: int = 1) -> VerificationReport:
    start = time.perf_counter()
    parts = _run_per_n(_phi_for, [(n,) for n in range(1, n_max + 1)], workers)
    report = _merge("phi", {"n": f"1..{n_max}", "k,l": "0..n"}, parts)
    report.elapsed = time.perf_counter() - start
    return report
