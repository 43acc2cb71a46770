"""Online Hamiltonicity strategies for the Achlioptas process.

Runs, sweeps and structural checks are implemented in C++; results come back
as plain dicts.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional

from . import _core
from ._core import (
    Graph,
    brute_force_hamiltonian,
    hamiltonicity_search,
    peel_core,
    strategy_ids,
    verify_certificate,
)

__all__ = [
    "Graph",
    "brute_force_hamiltonian",
    "collect_all",
    "hamiltonicity_search",
    "peel_core",
    "run",
    "strategy_ids",
    "sweep",
    "verify",
    "verify_certificate",
]


def _config(strategy: str, n: int, **extra: Any) -> str:
    cfg = {"strategy": strategy, "n": n}
    cfg.update({k: v for k, v in extra.items() if v is not None})
    return json.dumps(cfg)


def run(
    strategy: str,
    n: int,
    k: int,
    seed: int = 0,
    *,
    model: str = "relaxed",
    preset: str = "desk",
    params: Optional[dict] = None,
    max_rounds: int = 0,
    ledger: bool = False,
) -> dict:
    """One seeded run. The record's outcome.kind is "hamiltonian" on success."""
    cfg = _config(strategy, n, K=k, model=model, preset=preset, params=params or {},
                  max_rounds=max_rounds)
    return json.loads(_core._run(cfg, k, seed, ledger))


def sweep(
    strategy: str,
    n: int,
    ks: Iterable[int],
    seeds: Iterable[int] = range(10),
    *,
    model: str = "relaxed",
    preset: str = "desk",
    params: Optional[dict] = None,
    jobs: int = 1,
) -> tuple[str, list[dict]]:
    """Every (K, seed) pair. Returns the long-format CSV and the run records."""
    cfg = _config(strategy, n, K=list(ks), seeds=list(seeds), model=model, preset=preset,
                  params=params or {}, jobs=jobs)
    csv, runs = _core._sweep(cfg)
    return csv, json.loads(runs)


def collect_all(n: int, ledger: list[dict], *, check_every: int = 0, restarts: int = 10,
                seed: int = 0) -> dict:
    """Hitting times of the graph that keeps every offered pair."""
    text = "".join(json.dumps(entry) + "\n" for entry in ledger)
    return json.loads(_core._collect_all(n, text, check_every, restarts, seed))


def verify(graph: Graph, lemma: str, **kw: Any) -> dict:
    """Structural check by lemma id; see the CLI's verify subcommand for the ids."""
    mode = kw.get("mode", "exhaustive")
    samples = kw.get("samples", 10000)
    seed = kw.get("seed", 0)
    if lemma == "core-size":
        out = _core._verify_core_size(graph, kw.get("D", 2))
    elif lemma == "vertex-expansion":
        num, den = kw.get("factor", (2, 1))
        out = _core._verify_vertex_expansion(graph, kw.get("s_max", 3), num, den,
                                             kw.get("within"), mode, samples, seed)
    elif lemma == "avg-degree":
        out = _core._verify_avg_degree(graph, kw.get("k", 16), kw.get("s_max", 3), mode,
                                       samples, seed)
    elif lemma == "connectivity":
        out = _core._verify_connectivity(graph, kw.get("within"))
    elif lemma == "certificate":
        out = _core._certificate_report(graph, list(kw["cycle"]))
    else:
        raise ValueError(f"unsupported lemma {lemma!r}")
    return json.loads(out)
