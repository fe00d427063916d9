"""Seeded Monte Carlo experiments with reproducible reports.

Every experiment follows the same contract:

* replicate t uses the child seed sub_seed(seed, t), so reports are a pure
  function of (parameters, seed, reps) regardless of worker count;
* per-replicate rows are plain dicts; summaries are computed from the full
  row list after the (optionally parallel) map;
* JSON serialization excludes wall-clock timing by default, so rerunning
  the same command yields byte-identical output.

The experiments:

poisson_check      law of the exact-defect subset count vs its Poisson fit
alpha_distribution law of the maximum clique-free subgraph size
hitting_times      first n where the size target / defect-set supply appear
witness_rate       how often the certificate structure can actually be built
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .census import census
from .errors import NodeLimitError
from .graphs import ExposureStream, sample_graph
from .logmath import (
    expected_defect_sets,
    poisson_pmf,
    poisson_tail,
    stein_chen_bound,
)
from .profiles import mu_xi
from .rng import sub_seed
from .solver import build_structure, max_clique_free, verify_structure
from .thresholds import level, level_threshold, predicted_interval

SCHEMA_VERSION = 1


@dataclass
class ExperimentReport:
    name: str
    config: dict
    summary: dict
    replicates: list = field(default_factory=list)
    schema: int = SCHEMA_VERSION
    wall_clock_s: float | None = None

    def to_json(self, *, include_rows: bool = False, include_timing: bool = False) -> str:
        doc = {
            "schema": self.schema,
            "name": self.name,
            "config": self.config,
            "summary": self.summary,
        }
        if include_rows:
            doc["replicates"] = self.replicates
        if include_timing:
            doc["wall_clock_s"] = self.wall_clock_s
        return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"

    def rows_csv(self) -> str:
        if not self.replicates:
            return ""
        fields = sorted({k for row in self.replicates for k in row})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields)
        w.writeheader()
        for row in self.replicates:
            w.writerow(row)
        return buf.getvalue()


def _run_replicates(fn, params: tuple, reps: int, seed: int, workers: int) -> list[dict]:
    """Map fn(rep, child_seed, *params) over replicates, optionally parallel."""
    if workers <= 1 or reps < 2 * workers:
        return [fn(t, sub_seed(seed, t), *params) for t in range(reps)]
    slices = []
    base = reps // workers
    extra = reps % workers
    start = 0
    for w in range(workers):
        size = base + (1 if w < extra else 0)
        if size:
            slices.append(range(start, start + size))
        start += size
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(
            _chunk_worker, [(fn.__name__, params, seed, list(rng)) for rng in slices]
        )
        rows: list[dict] = []
        for chunk in chunks:
            rows.extend(chunk)
    return rows


def _chunk_worker(job) -> list[dict]:
    fn_name, params, seed, reps = job
    fn = _REPLICATE_FNS[fn_name]
    return [fn(t, sub_seed(seed, t), *params) for t in reps]


def tv_to_poisson(counts: dict, reps: int, lam: float) -> float:
    """Full-L1 distance between an empirical law and Poisson(lam)."""
    if reps <= 0:
        raise ValueError("reps must be positive")
    if lam < 0:
        raise ValueError("rate must be non-negative")
    top = max(counts) if counts else 0
    s = 0.0
    cum = 0.0
    for v in range(top + 1):
        p = poisson_pmf(lam, v)
        cum += p
        s += abs(counts.get(v, 0) / reps - p)
    return s + max(0.0, 1.0 - cum)


# -- poisson_check -------------------------------------------------------------


def _poisson_rep(t: int, child_seed: int, n: int, k: int, i: int) -> dict:
    g = sample_graph(n, child_seed)
    res = census(g, k, i)
    return {"rep": t, "seed": child_seed, "value": res.count(i), "nodes": res.nodes}


def poisson_check(
    n: int, k: int, i: int, reps: int, seed: int, *, workers: int = 1
) -> ExperimentReport:
    """Empirical law of the exact-i-defect k-set count vs Poisson."""
    if reps < 1:
        raise ValueError("reps must be positive")
    t0 = time.perf_counter()
    rows = _run_replicates(_poisson_rep, (n, k, i), reps, seed, workers)
    values = [r["value"] for r in rows]
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    mean = sum(values) / reps
    var = sum((v - mean) ** 2 for v in values) / reps
    lam = expected_defect_sets(n, k, i).to_float()
    bound = stein_chen_bound(n, k, i)
    summary = {
        "reps": reps,
        "histogram": {str(v): c for v, c in sorted(counts.items())},
        "mean": mean,
        "variance": var,
        "lambda_theory": lam,
        "clt_radius_3sigma": 3.0 * math.sqrt(var / reps),
        "tv_vs_theory": tv_to_poisson(counts, reps, lam),
        "tv_vs_mean": tv_to_poisson(counts, reps, mean),
        "stein_chen_log10": bound.ln / math.log(10.0) if bound.sign else None,
    }
    report = ExperimentReport(
        name="poisson_check",
        config={"n": n, "k": k, "i": i, "reps": reps, "seed": seed},
        summary=summary,
        replicates=rows,
    )
    report.wall_clock_s = time.perf_counter() - t0
    return report


# -- alpha_distribution --------------------------------------------------------


def _alpha_rep(t: int, child_seed: int, n: int, r: int) -> dict:
    g = sample_graph(n, child_seed)
    res = max_clique_free(g, r + 1)
    return {"rep": t, "seed": child_seed, "alpha": res.size, "nodes": res.nodes}


def alpha_distribution(
    n: int, r: int, reps: int, seed: int, *, workers: int = 1
) -> ExperimentReport:
    """Empirical law of the maximum (r+1)-clique-free subgraph size."""
    if reps < 1:
        raise ValueError("reps must be positive")
    t0 = time.perf_counter()
    rows = _run_replicates(_alpha_rep, (n, r), reps, seed, workers)
    values = [r_["alpha"] for r_ in rows]
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    try:
        lo, hi = predicted_interval(n, r)
        coverage = sum(1 for v in values if lo <= v <= hi) / reps
        interval = [lo, hi]
    except ValueError:
        interval = None
        coverage = None
    summary = {
        "reps": reps,
        "histogram": {str(v): c for v, c in sorted(counts.items())},
        "mean": sum(values) / reps,
        "predicted_interval": interval,
        "interval_coverage": coverage,
        "level": level(n),
    }
    report = ExperimentReport(
        name="alpha_distribution",
        config={"n": n, "r": r, "reps": reps, "seed": seed},
        summary=summary,
        replicates=rows,
    )
    report.wall_clock_s = time.perf_counter() - t0
    return report


# -- hitting_times -------------------------------------------------------------


def _hitting_rep(t: int, child_seed: int, r: int, j: int, n_max: int) -> dict:
    mu, xi = mu_xi(r, j)
    stream = ExposureStream(child_seed)
    t_alpha = None
    t_supply = None
    start = level_threshold(3)
    for n in range(1, n_max + 1):
        g = stream.step()
        if n < start:
            continue
        k = level(n)
        target = k * r + j
        if t_alpha is None:
            res = max_clique_free(g, r + 1, at_least=target)
            if res.size >= target:
                t_alpha = n
        if t_supply is None:
            c = census(g, k + 1, mu)
            if c.count(mu) >= xi:
                t_supply = n
        if t_alpha is not None and t_supply is not None:
            break
    return {
        "rep": t,
        "seed": child_seed,
        "t_alpha": t_alpha,
        "t_supply": t_supply,
    }


def hitting_times(
    r: int, j: int, n_max: int, reps: int, seed: int, *, workers: int = 1
) -> ExperimentReport:
    """First exposure step where the size target / defect supply appear.

    t_alpha: first n with maximum clique-free size at least level(n)*r + j.
    t_supply: first n with at least xi_j subsets of size level(n)+1 carrying
    exactly mu_j defect edges.  Coincidence of the two is tallied; no
    ordering between them is asserted.
    """
    if reps < 1:
        raise ValueError("reps must be positive")
    if not 1 <= j <= r:
        raise ValueError("need 1 <= j <= r")
    t0 = time.perf_counter()
    rows = _run_replicates(_hitting_rep, (r, j, n_max), reps, seed, workers)
    both = [r_ for r_ in rows if r_["t_alpha"] is not None and r_["t_supply"] is not None]
    coincide = sum(1 for r_ in both if r_["t_alpha"] == r_["t_supply"])
    alpha_first = sum(1 for r_ in both if r_["t_alpha"] < r_["t_supply"])
    supply_first = sum(1 for r_ in both if r_["t_alpha"] > r_["t_supply"])
    summary = {
        "reps": reps,
        "completed": len(both),
        "censored_alpha": sum(1 for r_ in rows if r_["t_alpha"] is None),
        "censored_supply": sum(1 for r_ in rows if r_["t_supply"] is None),
        "coincidence_rate": coincide / len(both) if both else None,
        "alpha_first": alpha_first,
        "supply_first": supply_first,
    }
    report = ExperimentReport(
        name="hitting_times",
        config={"r": r, "j": j, "n_max": n_max, "reps": reps, "seed": seed},
        summary=summary,
        replicates=rows,
    )
    report.wall_clock_s = time.perf_counter() - t0
    return report


# -- witness_rate --------------------------------------------------------------


def _witness_rep(t: int, child_seed: int, n: int, r: int, j: int, k: int) -> dict:
    mu, xi = mu_xi(r, j)
    g = sample_graph(n, child_seed)
    c = census(g, k + 1, mu)
    supply = c.count(mu)
    row = {
        "rep": t,
        "seed": child_seed,
        "supply": supply,
        "supply_event": int(supply >= xi),
        "built": 0,
        "verified": 0,
        "alpha_reached": None,
    }
    try:
        s = build_structure(g, r, j, k)
    except NodeLimitError:
        row["built"] = -1  # search gave up; counted separately
        return row
    if s is None:
        return row
    row["built"] = 1
    row["verified"] = int(verify_structure(g, s))
    if n <= 30:
        target = k * r + j
        res = max_clique_free(g, r + 1, at_least=target)
        row["alpha_reached"] = int(res.size >= target)
    return row


def witness_rate(
    n: int,
    r: int,
    j: int,
    reps: int,
    seed: int,
    *,
    k: int | None = None,
    workers: int = 1,
) -> ExperimentReport:
    """How often the defect-structure certificate exists and builds.

    Compares the supply event (enough exact-mu defect subsets one level up)
    against actual constructibility of the full structure with covers.
    """
    if reps < 1:
        raise ValueError("reps must be positive")
    if not 1 <= j <= r:
        raise ValueError("need 1 <= j <= r")
    if k is None:
        k = level(n)
    t0 = time.perf_counter()
    rows = _run_replicates(_witness_rep, (n, r, j, k), reps, seed, workers)
    mu, xi = mu_xi(r, j)
    built = [r_ for r_ in rows if r_["built"] == 1]
    lam = expected_defect_sets(n, k + 1, mu).to_float()
    summary = {
        "reps": reps,
        "k": k,
        "mu": mu,
        "xi": xi,
        "supply_rate": sum(r_["supply_event"] for r_ in rows) / reps,
        "build_rate": len(built) / reps,
        "gave_up": sum(1 for r_ in rows if r_["built"] == -1),
        "verified_all": all(r_["verified"] == 1 for r_ in built) if built else None,
        "alpha_reached_all": (
            all(r_["alpha_reached"] == 1 for r_ in built if r_["alpha_reached"] is not None)
            if built else None
        ),
        "poisson_supply_prediction": poisson_tail(lam, xi),
    }
    report = ExperimentReport(
        name="witness_rate",
        config={"n": n, "r": r, "j": j, "k": k, "reps": reps, "seed": seed},
        summary=summary,
        replicates=rows,
    )
    report.wall_clock_s = time.perf_counter() - t0
    return report


_REPLICATE_FNS = {
    "_poisson_rep": _poisson_rep,
    "_alpha_rep": _alpha_rep,
    "_hitting_rep": _hitting_rep,
    "_witness_rep": _witness_rep,
}
