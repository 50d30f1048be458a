"""Per-graph verdict assembly, corpus verification runs, report emission.

A run maps every corpus graph to one :class:`GraphReport` row, collects
counterexamples, and can emit the rows as JSON or CSV with a stable
field order.  Reports are deterministic: identical invocations yield
byte-identical files, and the worker count never changes row order or
content (timing lives only in the in-memory summary, never in files).
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import CorpusItem
from .cycles import SIMPLE_CYCLE_VERTEX_BUDGET, analyze_cycles
from .graphs import Graph, cyclomatic_number, is_connected, parse_graph6, to_graph6
from .inertia import graph_inertia, graph_inertia_oracle
from .matching import matching_number
from .theorems import (
    LEMMA_NAMES,
    DifferenceBounds,
    LowerClassification,
    UpperClassification,
    check_deletion_corollaries,
    check_difference_bounds,
    classify_n_lower,
    classify_n_upper,
    classify_p_lower,
    classify_p_upper,
    classify_unicyclic,
    lemma_suite,
)

ALL_CHECKS = (
    "bounds",
    "classifiers",
    "unicyclic",
    "corollaries",
    "lemmas",
    "difference",
    "generator",
)


class BudgetSkipError(RuntimeError):
    """Raised in strict mode when a budgeted check would be skipped."""


@dataclass(frozen=True)
class GraphReport:
    """Everything the harness states about one graph.

    Tri-state flags: True (verified), False (counterexample), None
    (check not requested, not applicable, or over budget; the notes say
    which).  ``conjecture_ok`` is informational only and never makes a
    row a counterexample.
    """

    graph_id: str
    graph6: str
    p: int
    n: int
    eta: int
    m: int
    c: int
    bounds_ok: bool | None
    p_upper: UpperClassification | None
    n_upper: UpperClassification | None
    p_lower: LowerClassification | None
    n_lower: LowerClassification | None
    unicyclic_prediction: tuple[int, int] | None
    unicyclic_ok: bool | None
    corollaries_ok: bool | None
    lemmas: dict[str, bool | None] | None
    difference: DifferenceBounds | None
    generator_ok: bool | None
    oracle_ok: bool
    notes: str

    @property
    def lemmas_ok(self) -> bool | None:
        if self.lemmas is None:
            return None
        verdicts = [v for v in self.lemmas.values() if v is not None]
        if not verdicts:
            return None
        return all(verdicts)

    def is_counterexample(self) -> bool:
        if not self.oracle_ok:
            return True
        if self.bounds_ok is False:
            return True
        for cls in (self.p_upper, self.n_upper):
            if cls is not None and not (
                cls.attained == cls.cond_contraction == cls.cond_frontier
            ):
                return True
        for cls in (self.p_lower, self.n_lower):
            if cls is not None and cls.attained != cls.conditions:
                return True
        if (
            self.p_lower is not None
            and self.n_lower is not None
            and self.p_lower.attained != self.n_lower.attained
        ):
            return True
        if self.unicyclic_ok is False:
            return True
        if self.corollaries_ok is False:
            return True
        if self.lemmas_ok is False:
            return True
        if self.difference is not None and not self.difference.c1_ok:
            return True
        if self.generator_ok is False:
            return True
        return False


def _normalize_checks(checks: Iterable[str] | None) -> tuple[str, ...]:
    if checks is None:
        return ALL_CHECKS
    wanted = list(checks)
    unknown = [c for c in wanted if c not in ALL_CHECKS]
    if unknown:
        raise ValueError(
            f"unknown checks {unknown}; valid checks are {', '.join(ALL_CHECKS)}"
        )
    # keep canonical order regardless of how the caller spelled the list
    return tuple(c for c in ALL_CHECKS if c in wanted)


def analyze_graph(
    g: Graph,
    graph_id: str = "graph",
    checks: Iterable[str] | None = None,
    residue: int | None = None,
    strict_budget: bool = False,
) -> GraphReport:
    """Build the full verdict row for one graph."""
    selected = _normalize_checks(checks)
    notes: list[str] = []

    inert = graph_inertia(g)
    oracle = graph_inertia_oracle(g)
    oracle_ok = inert == oracle
    if not oracle_ok:
        notes.append(
            f"oracle mismatch: congruence {tuple(inert)} vs char-poly {tuple(oracle)}"
        )
    m = matching_number(g)
    c = cyclomatic_number(g)

    bounds_ok = None
    if "bounds" in selected:
        bounds_ok = (m - c <= inert.p <= m + c) and (m - c <= inert.n <= m + c)

    p_upper = n_upper = None
    p_lower = n_lower = None
    if "classifiers" in selected:
        p_upper = classify_p_upper(g)
        n_upper = classify_n_upper(g)
        p_lower = classify_p_lower(g)
        n_lower = classify_n_lower(g)
        for name, cls in (("p_upper", p_upper), ("n_upper", n_upper)):
            if not (cls.attained == cls.cond_contraction == cls.cond_frontier):
                notes.append(f"classifier {name} mismatch: {cls}")
        for name, lcls in (("p_lower", p_lower), ("n_lower", n_lower)):
            if lcls.attained != lcls.conditions:
                notes.append(f"classifier {name} mismatch: {lcls}")

    unicyclic_prediction = None
    unicyclic_ok = None
    if "unicyclic" in selected:
        if is_connected(g) and c == 1:
            unicyclic_prediction = classify_unicyclic(g)
            unicyclic_ok = unicyclic_prediction == (inert.n, inert.p)
            if not unicyclic_ok:
                notes.append(
                    f"unicyclic prediction {unicyclic_prediction} != "
                    f"computed {(inert.n, inert.p)}"
                )
        else:
            notes.append("unicyclic: n/a (not connected unicyclic)")

    corollaries_ok = None
    if "corollaries" in selected:
        if analyze_cycles(g).cyclic_vertices and (inert.p == m + c or inert.p == m - c):
            corollaries_ok = check_deletion_corollaries(g)
            if not corollaries_ok:
                notes.append("deletion corollaries failed")
        else:
            notes.append("corollaries: n/a (no cycle or bound not attained)")

    lemmas = None
    if "lemmas" in selected:
        lemmas = lemma_suite(g)
        failed = sorted(k for k, v in lemmas.items() if v is False)
        if failed:
            notes.append("lemmas failed: " + ", ".join(failed))

    difference = None
    if "difference" in selected:
        if g.n <= SIMPLE_CYCLE_VERTEX_BUDGET:
            difference = check_difference_bounds(g)
            if not difference.c1_ok:
                notes.append(
                    f"|p-n|={abs(difference.diff)} exceeds odd cycle count {difference.c1}"
                )
            if not difference.conjecture_ok:
                notes.append(
                    f"conjecture: p-n={difference.diff} outside "
                    f"[-c3, c5]=[-{difference.c3}, {difference.c5}]"
                )
        elif strict_budget:
            raise BudgetSkipError(
                f"difference check needs n <= {SIMPLE_CYCLE_VERTEX_BUDGET}, "
                f"got n={g.n} for {graph_id}"
            )
        else:
            notes.append("difference: n/a (budget)")

    generator_ok = None
    if "generator" in selected:
        if residue is None:
            notes.append("generator: n/a (corpus not generator-produced)")
        else:
            generator_ok = _generator_identity_holds(g, inert.p, inert.n, m, c, residue)
            if not generator_ok:
                notes.append(f"generator identity failed for residue {residue}")

    return GraphReport(
        graph_id=graph_id,
        graph6=to_graph6(g),
        p=inert.p,
        n=inert.n,
        eta=inert.eta,
        m=m,
        c=c,
        bounds_ok=bounds_ok,
        p_upper=p_upper,
        n_upper=n_upper,
        p_lower=p_lower,
        n_lower=n_lower,
        unicyclic_prediction=unicyclic_prediction,
        unicyclic_ok=unicyclic_ok,
        corollaries_ok=corollaries_ok,
        lemmas=lemmas,
        difference=difference,
        generator_ok=generator_ok,
        oracle_ok=oracle_ok,
        notes="; ".join(notes),
    )


def _generator_identity_holds(
    g: Graph, p: int, n: int, m: int, c: int, residue: int
) -> bool:
    """Extremal identity plus classifier conditions for a generated graph."""
    if residue == 1:
        cls = classify_p_upper(g)
        return p == m + c and cls.attained and cls.cond_contraction and cls.cond_frontier
    if residue == 3:
        cls = classify_n_upper(g)
        return n == m + c and cls.attained and cls.cond_contraction and cls.cond_frontier
    low_p = classify_p_lower(g)
    low_n = classify_n_lower(g)
    return (
        p == m - c
        and n == m - c
        and low_p.attained
        and low_p.conditions
        and low_n.attained
        and low_n.conditions
    )


# ---------------------------------------------------------------------------
# corpus runs


@dataclass(frozen=True)
class RunReport:
    rows: tuple[GraphReport, ...]
    checks: tuple[str, ...]
    counterexamples: tuple[str, ...]  # "graph_id graph6" lines
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _row_payload(args: tuple[str, str, int | None, tuple[str, ...], bool]) -> GraphReport:
    graph_id, graph6, residue, checks, strict = args
    return analyze_graph(
        parse_graph6(graph6),
        graph_id=graph_id,
        checks=checks,
        residue=residue,
        strict_budget=strict,
    )


def run_verification(
    corpus: Iterable[CorpusItem],
    checks: Iterable[str] | None = None,
    workers: int = 1,
    strict_budget: bool = False,
) -> RunReport:
    """Evaluate the selected checks on every corpus graph, in order.

    ``workers`` > 1 fans rows out to a process pool; results are
    reassembled in corpus order, so worker count cannot change the
    report.  Budget-skipped checks produce "n/a" notes unless
    ``strict_budget`` is set, in which case skipping raises.
    """
    selected = _normalize_checks(checks)
    start = time.perf_counter()
    payloads = [
        (item.graph_id, to_graph6(item.graph), item.residue, selected, strict_budget)
        for item in corpus
    ]
    if workers > 1 and len(payloads) > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            rows = tuple(pool.imap(_row_payload, payloads, chunksize=64))
    else:
        rows = tuple(_row_payload(p) for p in payloads)
    elapsed = time.perf_counter() - start
    counterexamples = tuple(
        f"{r.graph_id} {r.graph6}" for r in rows if r.is_counterexample()
    )
    return RunReport(
        rows=rows,
        checks=selected,
        counterexamples=counterexamples,
        elapsed_seconds=elapsed,
    )


# ---------------------------------------------------------------------------
# report emission

REPORT_FIELDS = (
    "graph_id",
    "graph6",
    "p",
    "n",
    "eta",
    "m",
    "c",
    "bounds_ok",
    "p_upper_attained",
    "p_upper_cond_contraction",
    "p_upper_cond_frontier",
    "n_upper_attained",
    "n_upper_cond_contraction",
    "n_upper_cond_frontier",
    "p_lower_attained",
    "p_lower_conditions",
    "n_lower_attained",
    "n_lower_conditions",
    "unicyclic_pred_n",
    "unicyclic_pred_p",
    "unicyclic_ok",
    "corollaries_ok",
    "lemmas_ok",
    "c1_ok",
    "conjecture_ok",
    "generator_ok",
    "oracle_ok",
    "counterexample",
    "notes",
)


def report_row_dict(r: GraphReport) -> dict[str, object]:
    """Flatten one row into the documented field order (None = n/a)."""
    diff = r.difference
    return {
        "graph_id": r.graph_id,
        "graph6": r.graph6,
        "p": r.p,
        "n": r.n,
        "eta": r.eta,
        "m": r.m,
        "c": r.c,
        "bounds_ok": r.bounds_ok,
        "p_upper_attained": None if r.p_upper is None else r.p_upper.attained,
        "p_upper_cond_contraction": None if r.p_upper is None else r.p_upper.cond_contraction,
        "p_upper_cond_frontier": None if r.p_upper is None else r.p_upper.cond_frontier,
        "n_upper_attained": None if r.n_upper is None else r.n_upper.attained,
        "n_upper_cond_contraction": None if r.n_upper is None else r.n_upper.cond_contraction,
        "n_upper_cond_frontier": None if r.n_upper is None else r.n_upper.cond_frontier,
        "p_lower_attained": None if r.p_lower is None else r.p_lower.attained,
        "p_lower_conditions": None if r.p_lower is None else r.p_lower.conditions,
        "n_lower_attained": None if r.n_lower is None else r.n_lower.attained,
        "n_lower_conditions": None if r.n_lower is None else r.n_lower.conditions,
        "unicyclic_pred_n": None if r.unicyclic_prediction is None else r.unicyclic_prediction[0],
        "unicyclic_pred_p": None if r.unicyclic_prediction is None else r.unicyclic_prediction[1],
        "unicyclic_ok": r.unicyclic_ok,
        "corollaries_ok": r.corollaries_ok,
        "lemmas_ok": r.lemmas_ok,
        "c1_ok": None if diff is None else diff.c1_ok,
        "conjecture_ok": None if diff is None else diff.conjecture_ok,
        "generator_ok": r.generator_ok,
        "oracle_ok": r.oracle_ok,
        "counterexample": r.is_counterexample(),
        "notes": r.notes,
    }


def render_report(report: RunReport, fmt: str = "json") -> str:
    """Render the rows (never the timing) in the requested format."""
    rows = [report_row_dict(r) for r in report.rows]
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        for row in rows:
            writer.writerow(
                [
                    "n/a" if row[f] is None else
                    ("true" if row[f] is True else "false") if isinstance(row[f], bool)
                    else row[f]
                    for f in REPORT_FIELDS
                ]
            )
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}; use 'json' or 'csv'")


def emit_report(report: RunReport, path: str, fmt: str = "json") -> None:
    """Write the rendered report; an empty corpus still yields a valid file."""
    text = render_report(report, fmt)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def summarize(report: RunReport) -> str:
    """Human-oriented run summary (stdout material, not report content)."""
    lines = [
        f"graphs checked : {len(report.rows)}",
        f"checks         : {', '.join(report.checks)}",
        f"counterexamples: {len(report.counterexamples)}",
        f"elapsed        : {report.elapsed_seconds:.2f}s",
    ]
    difference_rows = [r for r in report.rows if r.difference is not None]
    if difference_rows:
        misses = sum(1 for r in difference_rows if not r.difference.conjecture_ok)
        lines.append(
            f"conjecture     : {misses} observed violation(s) in "
            f"{len(difference_rows)} rows (status 'conjecture', never asserted)"
        )
    for line in report.counterexamples:
        lines.append(f"COUNTEREXAMPLE {line}")
    return "\n".join(lines)
