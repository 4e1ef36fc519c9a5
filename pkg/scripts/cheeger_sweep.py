"""Exhaustive Cheeger-chain sweep over random Hermitian systems.

For each system every nonempty proper subset is scored, and the tightest
subset for each bound is reported alongside the spectral gap.

    python3 scripts/cheeger_sweep.py --systems 50 --max-vertices 9
"""
from __future__ import annotations

import argparse
from dataclasses import asdict, dataclass

import numpy as np

from speclap.bounds import cheeger_sharp, cheeger_upper, cheeger_weak, ground_data, nonempty_proper_subsets
from speclap.constructors import random_hermitian_system
from speclap.families import random_multigraph
from speclap.serialize import dumps


@dataclass
class SweepConfig:
    systems: int = 30
    seed: int = 0
    max_vertices: int = 8
    max_rank: int = 2
    extra_edges: int = 3


def sweep_one(g, ts) -> dict:
    data = ground_data(g, ts)
    best = {"sharp": np.inf, "upper": np.inf, "weak": np.inf}
    violations = 0
    for A in nonempty_proper_subsets(g):
        row = {
            "sharp": cheeger_sharp(g, ts, A, data).bound,
            "upper": cheeger_upper(g, ts, A, data).bound,
            "weak": cheeger_weak(g, ts, A, data).bound,
        }
        chain = [data.gap, row["sharp"], row["upper"], row["weak"]]
        violations += any(b < a - 1e-9 for a, b in zip(chain, chain[1:]) if np.isfinite(b))
        for k, v in row.items():
            best[k] = min(best[k], v)
    return {"vertices": len(g), "gap": data.gap, "K": data.K, "best": best, "violations": violations}


def run(cfg: SweepConfig) -> list[dict]:
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for _ in range(cfg.systems):
        n = int(rng.integers(2, cfg.max_vertices + 1))
        g = random_multigraph(rng, n, int(rng.integers(cfg.extra_edges + 1)), rank=(1, cfg.max_rank))
        rows.append(sweep_one(g, random_hermitian_system(g, rng)))
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in asdict(SweepConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    cfg = SweepConfig(**vars(p.parse_args()))
    rows = run(cfg)
    ratio = [r["best"]["upper"] / r["gap"] for r in rows if r["gap"] > 1e-9 and np.isfinite(r["best"]["upper"])]
    summary = {
        "violations": sum(r["violations"] for r in rows),
        "median_upper_over_gap": float(np.median(ratio)) if ratio else None,
    }
    print(dumps({"config": asdict(cfg), "summary": summary, "systems": rows}))


if __name__ == "__main__":
    main()
