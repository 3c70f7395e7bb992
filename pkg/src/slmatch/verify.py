"""Theorem harness: classify graphs against the spectral and edge-count
matching conditions, hunt for counterexamples, and report sharpness.

A graph is a counterexample only if its spectral radius clears the threshold
by more than the guard band EPSILON and it still has no perfect matching.
Graphs sitting within EPSILON of the threshold get the separate "boundary"
verdict: the extremal constructions attain the threshold exactly, so a strict
floating-point comparison there would be meaningless.
"""

from __future__ import annotations

import json
import multiprocessing
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .errors import HypothesisError, InputError
from .generate import all_connected, connected_graph_count
from .graph import (
    Graph,
    complete_graph,
    delete_vertices,
    empty_graph,
    extremal_h,
    is_connected,
    join,
    odd_components,
)
from .graph6 import ParseFailure, encode_graph6, read_stream, write_jsonl
from .matching import maximum_matching
from .spectral import edge_threshold, q1, q1_threshold

EPSILON = 1e-8

VERDICT_HOLDS = "conclusion-holds"
VERDICT_HYPOTHESIS = "hypothesis-not-met"
VERDICT_BOUNDARY = "boundary"
VERDICT_COUNTEREXAMPLE = "COUNTEREXAMPLE"

JSONL_FIELDS = (
    "graph6",
    "n",
    "edges",
    "q1",
    "q1_threshold",
    "edge_threshold",
    "has_pm",
    "verdict",
    "witness",
)


@dataclass(frozen=True)
class VerdictRecord:
    """Per-graph outcome of both matching conditions."""

    graph6: str
    n: int
    edges: int
    q1: float
    q1_threshold: float
    edge_threshold: int
    has_pm: bool
    verdict: str
    witness: tuple[int, ...] | None

    def to_dict(self) -> dict:
        record = {name: getattr(self, name) for name in JSONL_FIELDS}
        record["witness"] = None if self.witness is None else list(self.witness)
        return record

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @property
    def edge_condition_violated(self) -> bool:
        """True if edges exceed the edge threshold yet no matching exists."""
        return self.edges > self.edge_threshold and not self.has_pm


def check_graph(G: Graph, graph6_line: str | None = None) -> VerdictRecord:
    """Evaluate both conditions on one connected graph of even order >= 4."""
    n = G.n
    if n < 4:
        raise HypothesisError("order-too-small", f"need n >= 4, got {n}")
    if n % 2:
        raise HypothesisError("odd-order", f"need even order, got {n}")
    if not is_connected(G):
        raise HypothesisError("disconnected", "need a connected graph")

    radius = q1(G)
    threshold = q1_threshold(n)
    ethreshold = edge_threshold(n)
    matching = maximum_matching(G)
    has_pm = 2 * matching.size == n
    witness = None
    if not has_pm:
        witness = matching.witness
        deficiency = odd_components(delete_vertices(G, witness)) - len(witness)
        if deficiency < 1:
            raise RuntimeError(f"invalid deficiency witness {witness} for {G!r}")

    if abs(radius - threshold) <= EPSILON:
        verdict = VERDICT_BOUNDARY
    elif radius > threshold + EPSILON:
        verdict = VERDICT_HOLDS if has_pm else VERDICT_COUNTEREXAMPLE
    else:
        verdict = VERDICT_HYPOTHESIS

    return VerdictRecord(
        graph6=encode_graph6(G) if graph6_line is None else graph6_line,
        n=n,
        edges=G.edge_count,
        q1=radius,
        q1_threshold=threshold,
        edge_threshold=ethreshold,
        has_pm=has_pm,
        verdict=verdict,
        witness=witness,
    )


@dataclass
class CorpusSummary:
    """Aggregated verdicts over a corpus run."""

    checked: int = 0
    verdicts: Counter = field(default_factory=Counter)
    counterexamples: list[VerdictRecord] = field(default_factory=list)
    edge_violations: list[VerdictRecord] = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)
    parse_failures: list[ParseFailure] = field(default_factory=list)
    expected_count: int | None = None

    def absorb(self, record: VerdictRecord) -> None:
        self.checked += 1
        self.verdicts[record.verdict] += 1
        if record.verdict == VERDICT_COUNTEREXAMPLE:
            self.counterexamples.append(record)
        if record.edge_condition_violated:
            self.edge_violations.append(record)

    @property
    def clean(self) -> bool:
        ok = not self.counterexamples and not self.edge_violations
        if self.expected_count is not None:
            ok = ok and self.checked == self.expected_count
        return ok

    def exit_code(self) -> int:
        return 0 if self.clean else 1


def _record_for_graph(G: Graph) -> VerdictRecord:
    return check_graph(G)


def _iter_records(graphs: Iterable[Graph], jobs: int, stable: bool) -> Iterator[VerdictRecord]:
    if jobs <= 1:
        for G in graphs:
            yield check_graph(G)
        return
    with multiprocessing.Pool(jobs) as pool:
        mapper = pool.imap if stable else pool.imap_unordered
        yield from mapper(_record_for_graph, graphs, 64)


def _absorb_all(
    records: Iterator[VerdictRecord], summary: CorpusSummary, out: IO[str] | None
) -> None:
    if out is None:
        for record in records:
            summary.absorb(record)
        return

    def absorbed():
        for record in records:
            summary.absorb(record)
            yield record.to_dict()

    write_jsonl(out, absorbed())


def run_exhaustive(
    n: int, out: IO[str] | None = None, jobs: int = 1, stable: bool = True
) -> CorpusSummary:
    """Check every labelled connected graph on n vertices (n = 4 or 6 only).

    The number of graphs seen is validated against the independent
    inclusion-exclusion count.
    """
    if n not in (4, 6):
        raise InputError(f"exhaustive verification supports n in {{4, 6}}, got {n}")
    summary = CorpusSummary(expected_count=connected_graph_count(n))
    _absorb_all(_iter_records(all_connected(n), jobs, stable), summary, out)
    return summary


def run_stream(
    lines: Iterable[str],
    out: IO[str] | None = None,
    jobs: int = 1,
    stable: bool = True,
) -> CorpusSummary:
    """Check every well-formed even-order connected graph in a graph6 stream.

    Other lines are counted by skip reason and never abort the run.
    """
    summary = CorpusSummary()

    def eligible() -> Iterator[Graph]:
        for item in read_stream(lines):
            if isinstance(item, ParseFailure):
                summary.skipped["parse-error"] += 1
                summary.parse_failures.append(item)
                continue
            if item.n % 2:
                summary.skipped["odd-order"] += 1
            elif item.n < 4:
                summary.skipped["order-too-small"] += 1
            elif not is_connected(item):
                summary.skipped["disconnected"] += 1
            else:
                yield item

    _absorb_all(_iter_records(eligible(), jobs, stable), summary, out)
    return summary


def run_random(
    n: int,
    p: float,
    count: int,
    seed: int,
    out: IO[str] | None = None,
    jobs: int = 1,
    stable: bool = True,
) -> CorpusSummary:
    """Check `count` seeded random connected graphs from G(n, p)."""
    from .generate import sample_connected

    if n < 4 or n % 2:
        raise InputError(f"random verification needs even n >= 4, got {n}")
    summary = CorpusSummary(expected_count=count)
    _absorb_all(
        _iter_records(sample_connected(n, p, count, seed), jobs, stable), summary, out
    )
    return summary


# ---------------------------------------------------------------------------
# sharpness of the thresholds


def sharpness_graph(n: int) -> Graph:
    """The matching-free graph attaining the threshold for order n."""
    if n < 4 or n % 2:
        raise InputError(f"sharpness graphs exist for even n >= 4, got {n}")
    if n == 6:
        return join(complete_graph(2), empty_graph(4))
    if n == 8:
        return join(complete_graph(3), empty_graph(5))
    return extremal_h(n)


@dataclass(frozen=True)
class SharpnessRow:
    n: int
    graph6: str
    q1: float
    q1_threshold: float
    gap: float
    edges: int
    edge_threshold: int
    has_pm: bool
    witness: tuple[int, ...] | None
    witness_deficiency: int | None
    passed: bool


@dataclass
class SharpnessReport:
    rows: list[SharpnessRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def sharpness_report(ns: Iterable[int], tol: float = 1e-8) -> SharpnessReport:
    """For each order: the extremal graph attains the threshold within tol,
    has no perfect matching (with a verified witness), and for orders where
    the generic formula applies its edge count meets the edge threshold."""
    rows = []
    for n in ns:
        G = sharpness_graph(n)
        radius = q1(G)
        threshold = q1_threshold(n)
        matching = maximum_matching(G)
        has_pm = 2 * matching.size == G.n
        witness = matching.witness if not has_pm else None
        deficiency = None
        if witness is not None:
            deficiency = odd_components(delete_vertices(G, witness)) - len(witness)
        ok = (
            abs(radius - threshold) <= tol
            and not has_pm
            and deficiency is not None
            and deficiency >= 1
            and G.edge_count == edge_threshold(n)
        )
        rows.append(
            SharpnessRow(
                n=n,
                graph6=encode_graph6(G),
                q1=radius,
                q1_threshold=threshold,
                gap=radius - threshold,
                edges=G.edge_count,
                edge_threshold=edge_threshold(n),
                has_pm=has_pm,
                witness=witness,
                witness_deficiency=deficiency,
                passed=ok,
            )
        )
    return SharpnessReport(rows)
