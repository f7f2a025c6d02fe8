"""Verification sweeps: closed-form predictions against the Betti engine."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .betti import MAX_LATTICE, MAX_VARIABLES, ResourceCapExceeded, regularity_quotient
from .closure import is_integrally_closed_algebraic
from .formulas import AmbiguousFormula, predict
from .graphs import (
    build_cycle,
    build_path,
    cycle_canonical,
    edge_ideal,
    is_integrally_closed_combinatorial,
    path_canonical,
)
from .linalg import check_prime
from .monomials import ideal_power

log = logging.getLogger(__name__)

CSV_COLUMNS = ["shape", "n", "weights", "t", "closed", "predicted", "reg_p1", "reg_p2", "match", "ms"]


@dataclass(frozen=True)
class SweepConfig:
    shape: str = "cycle"
    n_range: tuple = (3, 4, 5)
    alphabet: tuple = (1, 2, 3)
    t_range: tuple = (1, 2)
    characteristics: tuple = (32003, 2)
    workers: int = 1
    max_lattice: int = MAX_LATTICE
    max_vars: int = MAX_VARIABLES
    dedup: bool = True
    check_algebraic: bool = True
    out: str | None = None
    fmt: str = "csv"
    timing: bool = True

    def __post_init__(self):
        for name in ("n_range", "alphabet", "t_range", "characteristics"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if self.shape not in ("cycle", "path"):
            raise ValueError(f"sweeps run over cycles or paths, not {self.shape!r}")
        if not self.n_range or not self.alphabet or not self.t_range or not self.characteristics:
            raise ValueError("n range, weight alphabet, t range and characteristics must be nonempty")
        if len(self.characteristics) > 2:
            raise ValueError("at most two characteristics per sweep")
        lo = 3 if self.shape == "cycle" else 2
        if min(self.n_range) < lo:
            raise ValueError(f"{self.shape} sweeps need n >= {lo}")
        if min(self.alphabet) < 1 or min(self.t_range) < 1:
            raise ValueError("weights and powers must be positive")
        for p in self.characteristics:
            check_prime(p)
        if self.workers < 1 or self.max_lattice < 1 or self.max_vars < 1:
            raise ValueError("workers and caps must be positive")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown report format {self.fmt!r}")


@dataclass
class Report:
    rows: list = field(default_factory=list)
    oracle_disagreements: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        rows = self.rows
        return {
            "total": len(rows),
            "matched": sum(1 for r in rows if r["match"] is True),
            "mismatched": sum(1 for r in rows if r["match"] is False),
            "skipped_not_closed": sum(1 for r in rows if not r["closed"]),
            "skipped_capped": sum(1 for r in rows if r["closed"] and r["match"] is None),
            "oracle_disagreements": len(self.oracle_disagreements),
        }

    @property
    def passed(self) -> bool:
        s = self.summary
        return s["mismatched"] == 0 and s["oracle_disagreements"] == 0

    def mismatches(self) -> list:
        return [r for r in self.rows if r["match"] is False]

    def _cells(self, row, timing):
        out = dict(row)
        out["weights"] = "-".join(str(w) for w in row["weights"])
        if not timing:
            out["ms"] = ""
        return out

    def to_csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        wr = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        wr.writeheader()
        for row in self.rows:
            cells = self._cells(row, timing)
            wr.writerow({k: ("" if cells[k] is None else cells[k]) for k in CSV_COLUMNS})
        return buf.getvalue()

    def to_json(self, timing: bool = True) -> str:
        rows = []
        for row in self.rows:
            r = dict(row)
            r["weights"] = list(r["weights"])
            if not timing:
                r.pop("ms", None)
            rows.append(r)
        return json.dumps(
            {"rows": rows, "summary": self.summary,
             "oracle_disagreements": [list(w) for w in self.oracle_disagreements]},
            indent=1,
        )


def weight_vectors(shape, n, alphabet, dedup=True):
    """Weight vectors of a cycle or path on n vertices, optionally one per symmetry class."""
    length = n if shape == "cycle" else n - 1
    canon = cycle_canonical if shape == "cycle" else path_canonical
    seen = set()
    for ws in product(sorted(alphabet), repeat=length):
        if dedup:
            c = canon(ws)
            if c in seen:
                continue
            seen.add(c)
            ws = c
        yield ws


def _instance(job):
    """Rows for one weight vector over all powers; runs in a worker."""
    shape, ws, cfg = job
    G = build_cycle(ws) if shape == "cycle" else build_path(ws)
    I = edge_ideal(G)
    closed = is_integrally_closed_combinatorial(G)
    disagree = False
    if cfg.check_algebraic:
        disagree = closed != is_integrally_closed_algebraic(I)
    rows = []
    for t in cfg.t_range:
        row = {"shape": shape, "n": G.n, "weights": tuple(ws), "t": t, "closed": closed,
               "predicted": None, "reg_p1": None, "reg_p2": None, "match": None, "ms": 0}
        if closed:
            start = time.perf_counter()
            try:
                row["predicted"] = predict(shape, ws, t)
            except AmbiguousFormula as exc:
                log.warning("%s", exc)
                row["match"] = False
            power = ideal_power(I, t)
            regs = []
            try:
                for p in cfg.characteristics:
                    regs.append(regularity_quotient(power, p, max_lattice=cfg.max_lattice,
                                                    max_vars=cfg.max_vars))
            except ResourceCapExceeded as exc:
                log.info("skipping %s %s t=%d: %s", shape, ws, t, exc)
                regs = []
            for key, val in zip(("reg_p1", "reg_p2"), regs):
                row[key] = val
            if regs and row["match"] is None:
                row["match"] = all(r == row["predicted"] for r in regs)
            row["ms"] = round(1000 * (time.perf_counter() - start))
        rows.append(row)
    return rows, disagree


def run_verification_sweep(cfg: SweepConfig) -> Report:
    jobs = [(cfg.shape, ws, cfg) for n in cfg.n_range
            for ws in weight_vectors(cfg.shape, n, cfg.alphabet, cfg.dedup)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
            results = list(ex.map(_instance, jobs, chunksize=4))
    else:
        results = [_instance(j) for j in jobs]
    report = Report()
    for (_, ws, _), (rows, disagree) in zip(jobs, results):
        report.rows.extend(rows)
        if disagree:
            report.oracle_disagreements.append(tuple(ws))
    if cfg.out:
        text = report.to_csv(cfg.timing) if cfg.fmt == "csv" else report.to_json(cfg.timing)
        with open(cfg.out, "w") as fh:
            fh.write(text)
    log.info("sweep summary: %s", report.summary)
    return report

