"""Batch classification of graph corpora with a resumable JSON Lines sink."""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import Graph6Error, SkewSpecError
from .exactpoly import cospectrality_classes, holds_problem1_identity
from .graph import (
    Graph,
    is_bipartite,
    is_connected,
    is_odd_cycle_graph,
    is_tree,
    parse_graph6,
    to_graph6,
)
from .orientation import switching_class_representatives
from .spectra import TAU_GROUP, check_extremal_bounds, fmt_float, max_skew_spectral_radius

log = logging.getLogger(__name__)

CHECKS = ("cospectral", "problem1", "problem2", "bounds")

FIELDS = (
    "graph6", "n", "m", "connected", "bipartite", "odd_cycle",
    "cospectral_class_count", "problem1_witness", "radius_constant",
    "rho_adjacency", "rho_max", "violations",
)


@dataclass
class CensusRecord:
    graph6: str
    n: Optional[int] = None
    m: Optional[int] = None
    connected: Optional[bool] = None
    bipartite: Optional[bool] = None
    odd_cycle: Optional[bool] = None
    cospectral_class_count: Optional[int] = None
    problem1_witness: Optional[str] = None
    radius_constant: Optional[bool] = None
    rho_adjacency: Optional[float] = None
    rho_max: Optional[float] = None
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {name: getattr(self, name) for name in FIELDS}
        for key in ("rho_adjacency", "rho_max"):
            if d[key] is not None:
                d[key] = fmt_float(d[key])
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRecord":
        unknown = set(d) - set(FIELDS)
        if unknown:
            raise SkewSpecError(f"unknown census fields {sorted(unknown)}")
        return cls(**d)


def parse_checks(text: str) -> frozenset[str]:
    names = frozenset(x.strip() for x in text.split(",") if x.strip())
    bad = names - set(CHECKS)
    if bad:
        raise SkewSpecError(f"unknown check(s) {sorted(bad)}; choose from {', '.join(CHECKS)}")
    return names


def classify(g: Graph, checks: Iterable[str], graph6: str | None = None) -> CensusRecord:
    """Run the requested checks on ``g``.

    Guard violations and failed structural checks land in ``violations``; nothing
    here raises for a well-formed graph.
    """
    checks = frozenset(checks)
    rec = CensusRecord(graph6 if graph6 is not None else to_graph6(g))
    rec.n, rec.m = g.n, g.m
    rec.connected = is_connected(g)
    rec.bipartite = is_bipartite(g) is not None
    rec.odd_cycle = is_odd_cycle_graph(g)

    # every check is stated for connected graphs
    if checks and not rec.connected:
        rec.violations.append("guard: disconnected graph, checks skipped")
        return rec

    try:
        if "cospectral" in checks:
            rec.cospectral_class_count = len(cospectrality_classes(g))
            if (rec.cospectral_class_count == 1) != rec.odd_cycle:
                rec.violations.append("cospectral_iff_odd_cycle")

        if "problem1" in checks:
            for rep in switching_class_representatives(g):
                if holds_problem1_identity(g, rep):
                    if not rec.odd_cycle:
                        rec.problem1_witness = rep.text()
                    break
            else:
                if rec.odd_cycle:
                    rec.violations.append("problem1_identity_fails_on_odd_cycle_graph")

        if checks & {"problem2", "bounds"}:
            report = max_skew_spectral_radius(g)
            rec.rho_adjacency = report.rho_adjacency
            rec.rho_max = report.rho_max_skew
            if "problem2" in checks:
                rec.radius_constant = len(report.rho_profile) == 1
                if rec.odd_cycle and not rec.radius_constant:
                    rec.violations.append("odd_cycle_radius_not_constant")
                if rec.bipartite and rec.radius_constant and not is_tree(g):
                    rec.violations.append("bipartite_radius_constant_non_tree")
            if rec.bipartite and abs(report.rho_max_skew - report.rho_adjacency) > TAU_GROUP:
                rec.violations.append("bipartite_rho_s_ne_rho_adjacency")

        if "bounds" in checks:
            b = check_extremal_bounds(g)
            if not b.lower_ok:
                rec.violations.append("bounds_lower")
            if b.lower_tight != b.path:
                rec.violations.append("bounds_lower_tightness")
            if b.upper_ok is False:
                rec.violations.append("bounds_upper")
            if b.upper_ok is not None and b.upper_tight != b.balanced_complete_bipartite:
                rec.violations.append("bounds_upper_tightness")
    except SkewSpecError as exc:
        rec.violations.append(f"guard: {exc}")
    return rec


def _classify_line(args: tuple[str, frozenset[str]]) -> str:
    line, checks = args
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return CensusRecord(line, violations=[f"parse_error: {exc}"]).to_json()
    return classify(g, checks, graph6=line).to_json()


def default_workers() -> int:
    env = os.environ.get("SKEWSPEC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer SKEWSPEC_THREADS=%r", env)
    return os.cpu_count() or 1


def summarize(records: Iterable[dict]) -> dict:
    s = {
        "records": 0,
        "parse_errors": 0,
        "connected": 0,
        "bipartite": 0,
        "odd_cycle": 0,
        "single_cospectral_class": 0,
        "problem1_witnesses": 0,
        "radius_constant": 0,
        "radius_constant_not_odd_cycle": 0,
        "with_violations": 0,
    }
    for r in records:
        s["records"] += 1
        viol = r.get("violations") or []
        if any(v.startswith("parse_error") for v in viol):
            s["parse_errors"] += 1
            continue
        s["connected"] += bool(r.get("connected"))
        s["bipartite"] += bool(r.get("bipartite"))
        s["odd_cycle"] += bool(r.get("odd_cycle"))
        s["single_cospectral_class"] += r.get("cospectral_class_count") == 1
        s["problem1_witnesses"] += r.get("problem1_witness") is not None
        s["radius_constant"] += bool(r.get("radius_constant"))
        s["radius_constant_not_odd_cycle"] += bool(r.get("radius_constant")) and not r.get("odd_cycle")
        s["with_violations"] += bool(viol)
    return s


def _read_sink(path) -> list[dict]:
    if not os.path.exists(path):
        return []
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                out.append(json.loads(line))
    return out


def run_census(lines: Iterable[str], checks: Iterable[str], sink_path, workers: int | None = None) -> dict:
    """Classify every graph6 line and append records to ``sink_path``.

    Lines whose graph6 text already appears in the sink are skipped, so an
    interrupted run can be restarted. The summary covers the whole sink.
    """
    checks = frozenset(checks)
    done = {r["graph6"] for r in _read_sink(sink_path)}
    todo = []
    for raw in lines:
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        if line in done:
            continue
        todo.append(line)
    workers = default_workers() if workers is None else max(1, workers)
    log.info("census: %d new line(s), %d key(s) already in sink, %d worker(s)",
             len(todo), len(done), workers)

    jobs = [(line, checks) for line in todo]
    with open(sink_path, "a", encoding="utf-8", newline="\n") as sink:
        if workers == 1 or len(jobs) < 2:
            for text in map(_classify_line, jobs):
                sink.write(text + "\n")
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                # map() yields in submission order: one writer, input order
                for text in pool.map(_classify_line, jobs, chunksize=8):
                    sink.write(text + "\n")
    return summarize(_read_sink(sink_path))
