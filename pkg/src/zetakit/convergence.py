"""Convergence benchmarking: minimal terms (and wall time) each identity
needs to hit a target tolerance, with CSV/JSON/Markdown export.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import catalog
from .catalog import CatalogKey
from .summation import CompensatedSum
from .verifier import InconclusiveError, max_terms

__all__ = ["ConvergenceProfile", "profile", "compare", "export", "COMPARE_TARGETS"]

COMPARE_TARGETS = ("zeta3", "catalan-relations", "all")

CSV_HEADER = "id,paper_eq,tolerance,terms_needed,achieved_error,wall_time_ns"


@dataclass(frozen=True)
class ConvergenceProfile:
    key: CatalogKey
    tolerance: float
    terms_needed: int
    achieved_error: float
    wall_time_ns: int


def _assembly(key: CatalogKey):
    entry, param = catalog._resolve(key)
    offset = entry.offset_fn(param) if entry.offset_fn is not None else 0.0
    scale = entry.scale_fn(param) if entry.scale_fn is not None else 1.0
    return entry.start_index, entry.term_fn, param, offset, scale


def _scan_to_tolerance(key: CatalogKey, target: float, tolerance: float) -> tuple[int, float]:
    """Least summation depth N with |assembled(N) - target| <= tolerance."""
    start, term_fn, param, offset, scale = _assembly(key)
    cap = max_terms()
    acc = CompensatedSum()
    n = start
    while True:
        acc.add(term_fn(param, n))
        err = abs(offset + scale * acc.value - target)
        if err <= tolerance:
            return n, err
        n += 1
        if n - start >= cap:
            raise InconclusiveError(f"{key.label()}: tolerance {tolerance:g} not reached at the {cap}-term cap")


def profile(key: CatalogKey, tolerance: float) -> ConvergenceProfile:
    """Minimal-terms profile of one identity against its own closed form.

    The scan is incremental (series terms are cheap, depths are small), and
    minimality is asserted in-run: the depth just below the reported one must
    miss the tolerance.  Wall time is taken from a second, cache-warm
    evaluation at the found depth, so Bernoulli/zeta table population does
    not pollute the timing.
    """
    if tolerance < 1e-13:
        raise ValueError("tolerance must be >= 1e-13")
    target = catalog.closed_form(key)
    n, err = _scan_to_tolerance(key, target, tolerance)
    start, term_fn, param, offset, scale = _assembly(key)
    if n > start:
        prev = catalog.assembled_sum(key, n - 1)
        assert abs(prev.value - target) > tolerance, "scan depth was not minimal"

    t0 = time.perf_counter_ns()
    acc = CompensatedSum()
    for i in range(start, n + 1):
        acc.add(term_fn(param, i))
    value = offset + scale * acc.value
    wall = time.perf_counter_ns() - t0
    achieved = abs(value - target)
    return ConvergenceProfile(key, tolerance, n - start + 1, achieved, wall)


def compare(target: str, tolerance: float) -> list[ConvergenceProfile]:
    """Profile every scalar identity tied to the target constant.

    "zeta3" selects the nine zeta(3) representations; "catalan-relations"
    the identities whose closed form is built on G; "all" every scalar
    identity in the registry.  Rows are sorted by terms_needed, ties by
    wall time.
    """
    if target not in COMPARE_TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {COMPARE_TARGETS}")
    rows = []
    for entry in catalog.registry().values():
        if not entry.verifiable or entry.is_family:
            continue
        if target != "all" and target not in entry.targets:
            continue
        rows.append(profile(CatalogKey(entry.id), tolerance))
    rows.sort(key=lambda r: (r.terms_needed, r.wall_time_ns))
    return rows


def _g17(x: float) -> str:
    return format(x, ".17g")


def export(table: list[ConvergenceProfile], format: str) -> str:
    """Render a profile table as csv, json, or markdown.

    Floats are written with 17 significant digits so they reparse to the
    identical bit pattern.
    """
    rows = [
        {
            "id": p.key.label(),
            "paper_eq": catalog.get(p.key.id).paper_eq,
            "tolerance": p.tolerance,
            "terms_needed": p.terms_needed,
            "achieved_error": p.achieved_error,
            "wall_time_ns": p.wall_time_ns,
        }
        for p in table
    ]
    if format == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(
                f"{r['id']},{r['paper_eq']},{_g17(r['tolerance'])},{r['terms_needed']},"
                f"{_g17(r['achieved_error'])},{r['wall_time_ns']}"
            )
        return "\n".join(lines) + "\n"
    if format == "json":
        return json.dumps(rows, indent=2) + "\n"
    if format == "markdown":
        lines = [
            "| id | paper_eq | tolerance | terms_needed | achieved_error | wall_time_ns |",
            "| --- | --- | --- | --- | --- | --- |",
        ]
        for r in rows:
            lines.append(
                f"| {r['id']} | {r['paper_eq']} | {_g17(r['tolerance'])} | {r['terms_needed']} |"
                f" {_g17(r['achieved_error'])} | {r['wall_time_ns']} |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")
