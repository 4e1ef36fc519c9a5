"""Search association systems for disjoint pairs where the cohesion
estimate drops below the second eigenvalue.

Complementary pairs (A, B covering every vertex) and pairs that leave
vertices out are tallied separately.

    python3 scripts/cohesion_search.py --instances 200
"""
from __future__ import annotations

import argparse
import itertools
from dataclasses import asdict, dataclass

import numpy as np

from speclap.constructors import association_laplacian, cohesion_estimate
from speclap.errors import ZeroMass
from speclap.families import random_multigraph
from speclap.graph import is_simple
from speclap.serialize import dumps
from speclap.spectra import spectrum


@dataclass
class SearchConfig:
    instances: int = 100
    seed: int = 0
    max_vertices: int = 6
    density: float = 0.5


def simple_graph(rng, n):
    while True:
        g = random_multigraph(rng, n, int(rng.integers(n)))
        if is_simple(g):
            return g


def random_association(rng, g, p):
    vs = g.vertex_ids
    return {v: [u for u in vs if rng.random() < p] for v in vs}


def run(cfg: SearchConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    tally = {"complementary": [0, 0], "partial": [0, 0]}
    examples = []
    for _ in range(cfg.instances):
        g = simple_graph(rng, int(rng.integers(2, cfg.max_vertices + 1)))
        assoc = random_association(rng, g, cfg.density)
        if not any(assoc.values()):
            continue
        _, L = association_laplacian(g, assoc)
        vals = spectrum(L, hermitian=True, vectors=False).values.real
        vs = g.vertex_ids
        for labels in itertools.product((0, 1, 2), repeat=len(vs)):
            A = {v for v, t in zip(vs, labels) if t == 1}
            B = {v for v, t in zip(vs, labels) if t == 2}
            if not A or not B:
                continue
            try:
                rep = cohesion_estimate(g, assoc, A, B, eigenvalues=vals)
            except ZeroMass:
                continue
            key = "complementary" if 0 not in labels else "partial"
            tally[key][0] += 1
            if not rep.passed:
                tally[key][1] += 1
                if len(examples) < 5:
                    examples.append({"assoc": assoc, "A": sorted(A), "B": sorted(B),
                                     "estimate": rep.bound, "lambda_2": rep.target})
    return {k: {"pairs": n, "below": bad} for k, (n, bad) in tally.items()} | {"examples": examples}


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in asdict(SearchConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(val), default=val)
    cfg = SearchConfig(**vars(p.parse_args()))
    print(dumps({"config": asdict(cfg), "results": run(cfg)}))


if __name__ == "__main__":
    main()
