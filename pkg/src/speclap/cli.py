"""``speclap`` command line: JSON in, JSON out.

Exit codes: 0 when every check passes, 1 when some bound or invariant
fails, 2 on unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import bounds as B
from .constructors import (
    AbelianGroup,
    association_laplacian,
    association_phi,
    cayley_spectrum,
    cayley_system,
    cohesion_estimate,
    quantum_system,
    random_hermitian_system,
    random_system,
    random_unitary_system,
    random_upq,
    walk_system,
)
from .errors import InputError, SpeclapError, TooLarge
from .families import random_multigraph
from .graph import Graph, diameter, dual, incidence, adjacency_matrix, undirected_edges, vertex_subset
from .serialize import (
    decode_matrix,
    dumps,
    encode_eigenvalues,
    read_graphspec,
    read_input,
    write_graphspec,
)
from .spectra import laplacian_spectrum, multiset_distance, spectrum, verify_range
from .surgery import VertexPartition, amalgamate, collapse, pushforward_collapse
from .transmission import DEFAULT_TOL, classify, identity_system, laplacian

# Multiplies every bound before its pass test; tests corrupt it to exercise exit code 1.
_BOUND_SCALE = 1.0


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, ok: bool, **detail) -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "overall": self.overall}


@dataclass(frozen=True)
class VerifyLimits:
    subset_sweep: bool = True
    max_sweep_vertices: int = 16
    tol: float = DEFAULT_TOL


def _scaled(report: B.BoundReport, scale: float, tol: float) -> B.BoundReport:
    if scale == 1.0 or math.isinf(report.bound):
        return report
    return B.make_report(report.name, report.bound * scale, report.target, tol, **report.context)


def verify_all(g: Graph, ts, limits: VerifyLimits = VerifyLimits(), bound_scale: float | None = None) -> VerifyReport:
    """Range theorem always; Cheeger chain and diameter bound for Hermitian systems."""
    scale = _BOUND_SCALE if bound_scale is None else bound_scale
    tol = limits.tol
    rep = VerifyReport()
    rr = verify_range(g, ts, tol)
    rep.add("range", rr.passed, **{k: v for k, v in vars(rr).items() if k != "passed"})
    c = classify(g, ts, tol)
    if not c.hermitian_symmetric:
        rep.add("bounds", True, skipped="system is not Hermitian symmetric", asym=c.asym)
        return rep
    data = B.ground_data(g, ts, tol)
    if limits.subset_sweep:
        if len(g) > limits.max_sweep_vertices:
            rep.add("cheeger_chain", True, skipped=f"TooLarge: {len(g)} > {limits.max_sweep_vertices} vertices")
        else:
            worst = math.inf
            failures = []
            count = 0
            for A in B.nonempty_proper_subsets(g):
                sharp = _scaled(B.cheeger_sharp(g, ts, A, data, tol), scale, tol)
                upper = _scaled(B.cheeger_upper(g, ts, A, data, tol), scale, tol)
                weak = _scaled(B.cheeger_weak(g, ts, A, data, tol), scale, tol)
                chain = [data.gap, sharp.bound, upper.bound, weak.bound]
                slack = min(_slack(a, b) for a, b in zip(chain, chain[1:]))
                worst = min(worst, slack)
                count += 1
                if slack < -tol and len(failures) < 5:
                    failures.append({"A": sorted(A, key=g.index.__getitem__), "chain": chain})
            rep.add("cheeger_chain", worst >= -tol, subsets=count, min_slack=worst, failures=failures)
    diam = diameter(g)
    if not math.isinf(diam) and diam >= 4:
        r = _scaled(B.diameter_bound(g, ts, data, tol), scale, tol)
        rep.add("diameter_bound", r.passed, **r.to_json())
    else:
        rep.add("diameter_bound", True, skipped=f"diameter {diam} < 4 or infinite")
    return rep


def _slack(lo: float, hi: float) -> float:
    if math.isinf(hi):
        return math.inf
    return hi - lo


# -- helpers -----------------------------------------------------------------

def _load_system(doc: dict):
    g, ts, w = read_graphspec(doc)
    return g, (identity_system(g) if ts is None else ts), w


def _element(x):
    return tuple(x) if isinstance(x, list) else (x,)


# -- verbs -------------------------------------------------------------------

def cmd_spectrum(args, doc) -> tuple[dict, bool]:
    g, ts, w = _load_system(doc)
    sp = laplacian_spectrum(g, ts, w)
    return {"eigenvalues": encode_eigenvalues(sp.values), "hermitian": sp.hermitian}, True


def cmd_verify(args, doc):
    g, ts, _ = _load_system(doc)
    limits = VerifyLimits(args.subset_sweep, args.limit, args.tol)
    rep = verify_all(g, ts, limits)
    return rep.to_json(), rep.overall


def cmd_bounds(args, doc):
    g, ts, _ = _load_system(doc)
    tol = args.tol
    data = B.ground_data(g, ts, tol)
    if args.subset is not None:
        subsets = [vertex_subset(g, args.subset)]
    elif args.subset_sweep:
        if len(g) > args.limit:
            raise TooLarge(f"{len(g)} vertices exceeds the sweep limit {args.limit}")
        subsets = list(B.nonempty_proper_subsets(g))
    else:
        subsets = []
    reports = []
    for A in subsets:
        label = sorted(A, key=g.index.__getitem__)
        for fn in (B.cheeger_sharp, B.cheeger_upper, B.cheeger_weak):
            r = _scaled(fn(g, ts, A, data, tol), _BOUND_SCALE, tol)
            reports.append({**r.to_json(), "A": label})
    diam = diameter(g)
    if not math.isinf(diam) and diam >= 4:
        reports.append(_scaled(B.diameter_bound(g, ts, data, tol), _BOUND_SCALE, tol).to_json())
    ok = all(r["pass"] for r in reports)
    return {"eigenvalues": data.eigenvalues, "gap": data.gap, "reports": reports}, ok


def cmd_cayley(args, doc):
    try:
        G = AbelianGroup(tuple(doc["moduli"]))
        S = [_element(s) for s in doc["S"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"cayley spec needs moduli and S: {exc}") from exc
    if "F" in doc:
        F = {tuple(int(t) for t in str(k).split(",")): decode_matrix(v) for k, v in doc["F"].items()}
    else:
        F = {G.normalize(s): np.eye(1) for s in S}
    formula = cayley_spectrum(G, S, F)
    g, ts = cayley_system(G, S, F)
    dense = laplacian_spectrum(g, ts, hermitian=True)
    dist = multiset_distance(formula.values.real, dense.values.real)
    ok = dist <= 1e-8
    return {
        "eigenvalues": encode_eigenvalues(formula.values),
        "dense_distance": dist,
        "pass": ok,
        "k": len(S),
    }, ok


def cmd_assoc(args, doc):
    g, _, _ = read_graphspec(doc)
    if "assoc" not in doc:
        raise InputError("document needs an 'assoc' object")
    assoc = doc["assoc"]
    h, L = association_laplacian(g, assoc)
    vals = spectrum(L, hermitian=True, vectors=False).values.real
    phi = association_phi(g, assoc).to_vector(h)
    resid = float(np.linalg.norm(L @ phi))
    tol = args.tol
    checks = VerifyReport()
    checks.add("range", bool(vals.min() >= -tol and vals.max() <= 2 + tol), min=vals.min(), max=vals.max())
    checks.add("phi_kernel", resid <= 1e-10, residual=resid)
    pairs = []
    if args.subset is not None and args.other is not None:
        pairs = [(vertex_subset(g, args.subset), vertex_subset(g, args.other))]
    elif args.subset_sweep:
        if len(g) > args.limit:
            raise TooLarge(f"{len(g)} vertices exceeds the sweep limit {args.limit}")
        pairs = list(_disjoint_pairs(g))
    reports = []
    for A, Bs in pairs:
        try:
            r = cohesion_estimate(g, assoc, A, Bs, tol, eigenvalues=vals)
        except InputError:
            continue
        r = _scaled(r, _BOUND_SCALE, tol)
        reports.append({**r.to_json(), "A": sorted(A), "B": sorted(Bs)})
    if reports:
        failed = [r for r in reports if not r["pass"]]
        checks.add("cohesion", not failed, pairs=len(reports), failures=failed[:5])
    return {"eigenvalues": vals, "report": checks.to_json()}, checks.overall


def _disjoint_pairs(g: Graph):
    vs = g.vertex_ids
    n = len(vs)
    for mask in range(1, 3**n):
        A, Bs, m = [], [], mask
        for v in vs:
            m, r = divmod(m, 3)
            if r == 1:
                A.append(v)
            elif r == 2:
                Bs.append(v)
        if A and Bs:
            yield frozenset(A), frozenset(Bs)


def cmd_quantum(args, doc):
    g, _, _ = read_graphspec(doc)
    und = undirected_edges(g)
    if "scattering" in doc:
        mats = [decode_matrix(m) for m in doc["scattering"]]
        if len(mats) != len(und):
            raise InputError(f"need {len(und)} scattering matrices, got {len(mats)}")
    else:
        spin = int(doc.get("spin", 0))
        rng = np.random.default_rng(args.seed)
        mats = [random_upq(spin + 1, spin + 1, rng) for _ in und]
    data = {lo: M for (lo, _), M in zip(und, mats)}
    F, G = quantum_system(g, data, args.tol)
    cF, cG = classify(g, F, args.tol), classify(g, G, args.tol)
    vals = laplacian_spectrum(g, G, hermitian=False).values
    imag = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    rep = VerifyReport()
    rep.add("F_invertible", cF.invertible)
    rep.add("G_hermitian", cG.hermitian_symmetric, asym=cG.asym)
    rep.add("spectrum_real", imag <= 1e-9, max_imag=imag)
    return {"eigenvalues": encode_eigenvalues(vals), "report": rep.to_json()}, rep.overall


def cmd_walk(args, doc):
    if "probs" not in doc:
        raise InputError("document needs a 'probs' matrix")
    Gam = np.asarray(doc["probs"], dtype=float)
    g, Q, w, reflexive = walk_system(Gam)
    lap = laplacian_spectrum(g, Q, w, hermitian=False).values
    mu = 1 - np.linalg.eigvals(Gam)
    dist = multiset_distance(lap, mu.astype(complex))
    rep = VerifyReport()
    rep.add("walk_correspondence", dist <= 1e-9, distance=dist)
    rep.add("reflexive_iff_hermitian", reflexive == classify(g, Q).hermitian_symmetric)
    return {
        "graph": write_graphspec(g, Q, w),
        "eigenvalues": encode_eigenvalues(lap),
        "reflexive": reflexive,
        "report": rep.to_json(),
    }, rep.overall


def _partition(args, doc) -> VertexPartition:
    src = read_input(args.partition) if args.partition else doc
    if "classes" not in src:
        raise InputError("partition needs a 'classes' object")
    return VertexPartition({str(k): str(v) for k, v in src["classes"].items()})


def cmd_collapse(args, doc):
    g, ts, _ = _load_system(doc)
    h, ts2 = collapse(g, ts, _partition(args, doc))
    lam = laplacian_spectrum(g, ts, hermitian=True).values.real
    mu = laplacian_spectrum(h, ts2, hermitian=True).values.real
    slack = float(np.min(mu - lam[: len(mu)])) if len(mu) else math.inf
    ok = slack >= -args.tol
    return {
        "graph": write_graphspec(h, ts2),
        "original": lam,
        "collapsed": mu,
        "min_slack": slack,
        "pass": ok,
    }, ok


def cmd_pushforward(args, doc):
    g, ts, w = _load_system(doc)
    h, ts2, w2 = pushforward_collapse(g, ts, _partition(args, doc))
    a = laplacian_spectrum(g, ts, w).values
    b = laplacian_spectrum(h, ts2, w2).values
    dist = multiset_distance(a, b)
    ok = dist <= 1e-10
    return {"graph": write_graphspec(h, ts2, w2), "distance": dist, "pass": ok}, ok


def cmd_amalgamate(args, doc):
    g, ts, _ = _load_system(doc)
    h, ts2, w2 = amalgamate(g, ts)
    diff = float(np.max(np.abs(laplacian(g, ts) - laplacian(h, ts2, w2)))) if g.dim else 0.0
    ok = diff <= 1e-12
    return {"graph": write_graphspec(h, ts2, w2), "max_entry_diff": diff, "pass": ok}, ok


def cmd_dual(args, doc):
    g, _, _ = read_graphspec(doc)
    d = dual(g)
    M = incidence(g)
    T = np.diag([g.degree[v] for v in g.vertex_ids])
    ok1 = np.array_equal(M @ M.T, T + adjacency_matrix(g))
    ok2 = np.array_equal(M.T @ M, 2 * np.eye(M.shape[1], dtype=np.int64) + adjacency_matrix(d))
    return {
        "graph": write_graphspec(d),
        "incidence_identity": bool(ok1),
        "dual_identity": bool(ok2),
        "pass": bool(ok1 and ok2),
    }, bool(ok1 and ok2)


def cmd_random(args, doc):
    rng = np.random.default_rng(args.seed)
    rank = args.rank if args.kind == "unitary" else (1, args.rank)
    g = random_multigraph(rng, args.n, extra_edges=args.extra, loops=args.loops, rank=rank)
    make: Callable = {
        "unitary": random_unitary_system,
        "hermitian": random_hermitian_system,
        "general": random_system,
    }[args.kind]
    return write_graphspec(g, make(g, rng)), True


VERBS = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "cayley": cmd_cayley,
    "assoc": cmd_assoc,
    "quantum": cmd_quantum,
    "walk": cmd_walk,
    "collapse": cmd_collapse,
    "pushforward": cmd_pushforward,
    "amalgamate": cmd_amalgamate,
    "dual": cmd_dual,
    "random": cmd_random,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="speclap", description="Transmission graph Laplacians: spectra and bound checks.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("--input", help="JSON document path, or - for stdin")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--subset-sweep", action="store_true", help="check every nonempty proper subset")
    p.add_argument("--limit", type=int, default=16, help="max vertices for subset sweeps")
    p.add_argument("--subset", help="comma-separated vertex ids")
    p.add_argument("--other", help="second subset (assoc cohesion)")
    p.add_argument("--partition", help="JSON file with a 'classes' object")
    p.add_argument("--kind", choices=["unitary", "hermitian", "general"], default="unitary")
    p.add_argument("--n", type=int, default=6, help="vertices for random")
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--extra", type=int, default=2, help="extra edges for random")
    p.add_argument("--loops", type=int, default=0)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "random":
            doc = {}
        elif args.input is None:
            raise InputError(f"{args.verb} needs --input")
        else:
            doc = read_input(args.input)
        out, ok = VERBS[args.verb](args, doc)
        text = dumps(out)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return 0 if ok else 1
    except SpeclapError as exc:
        print(f"speclap: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
