"""Spectral range of random unitary and Hermitian transmission systems.

Draws random connected multigraphs, attaches random systems and reports the
worst-case slack of |lambda - 1| <= K and |Im lambda| <= asym/2.

    python3 scripts/unitary_range.py --trials 500 --seed 1
"""
from __future__ import annotations

import argparse
from dataclasses import asdict, dataclass

import numpy as np

from speclap.constructors import random_hermitian_system, random_system, random_unitary_system
from speclap.families import random_multigraph
from speclap.serialize import dumps
from speclap.spectra import verify_range


@dataclass
class RangeConfig:
    trials: int = 200
    seed: int = 0
    max_vertices: int = 10
    max_rank: int = 3
    extra_edges: int = 4
    loops: int = 1


KINDS = {
    "unitary": random_unitary_system,
    "hermitian": random_hermitian_system,
    "general": random_system,
}


def run(cfg: RangeConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    out = {}
    for kind, make in KINDS.items():
        center_slack = imag_slack = np.inf
        lo, hi, failures = np.inf, -np.inf, 0
        for _ in range(cfg.trials):
            n = int(rng.integers(2, cfg.max_vertices + 1))
            rank = int(rng.integers(1, cfg.max_rank + 1)) if kind == "unitary" else (1, cfg.max_rank)
            g = random_multigraph(rng, n, int(rng.integers(cfg.extra_edges + 1)), int(rng.integers(cfg.loops + 1)), rank)
            rr = verify_range(g, make(g, rng))
            center_slack = min(center_slack, rr.K - rr.max_center_dev)
            imag_slack = min(imag_slack, rr.asym_half - rr.max_imag)
            lo, hi = min(lo, rr.min_real), max(hi, rr.max_real)
            failures += not rr.passed
        out[kind] = {
            "failures": failures,
            "min_center_slack": center_slack,
            "min_imag_slack": imag_slack,
            "real_range": [lo, hi],
        }
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in asdict(RangeConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    cfg = RangeConfig(**vars(p.parse_args()))
    print(dumps({"config": asdict(cfg), "results": run(cfg)}))


if __name__ == "__main__":
    main()
