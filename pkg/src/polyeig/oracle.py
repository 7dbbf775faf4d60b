"""Exhaustive ground-truth harness for the feasibility checkers.

For every matrix P in a small finite-field grid, the set of eigenstructures
achievable by stacking z extra rows is computed by brute force and compared,
theorem by theorem, against the corresponding checker's verdict on every
a-priori admissible target.  Any disagreement is reported as a mismatch.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .feasibility import (
    CompletionTarget,
    check_full,
    check_hom_only,
    check_hom_plus_cols,
    check_hom_plus_rows,
    check_finite_only,
    check_infinite_only,
)
from .fields import GF, FieldTag
from .matrix import PolyMatrix, eigenstructure, stack_rows
from .poly import Poly
from .realize import BudgetExceededError, all_completion_rows, enumerate_targets

THEOREMS = ("full", "hom+cols", "hom+rows", "hom", "finite", "infinite")


@dataclass(frozen=True)
class GridSpec:
    field: FieldTag
    m: int
    n: int
    z: int
    d: int

    @staticmethod
    def parse(text: str) -> "GridSpec":
        """Parse e.g. "gf2 n=1 m=1 z=1 d=1"."""
        parts = text.split()
        if not parts:
            raise ValueError("empty grid spec")
        fname = parts[0].lower()
        if not fname.startswith("gf"):
            raise ValueError(f"oracle grids need a finite field, got {parts[0]!r}")
        field = GF(int(fname[2:]))
        vals = {}
        for item in parts[1:]:
            key, _, val = item.partition("=")
            if key not in ("m", "n", "z", "d") or not val:
                raise ValueError(f"bad grid item {item!r}")
            vals[key] = int(val)
        missing = {"m", "n", "z", "d"} - set(vals)
        if missing:
            raise ValueError(f"grid spec missing {sorted(missing)}")
        return GridSpec(field, vals["m"], vals["n"], vals["z"], vals["d"])


def all_matrices(m: int, n: int, d: int, field: FieldTag):
    """All m x n matrices over GF(p) of degree exactly d, lexicographic."""
    polys = [Poly.make(cs, field) for cs in itertools.product(field.elements(), repeat=d + 1)]
    for flat in itertools.product(polys, repeat=m * n):
        if max((p.degree for p in flat), default=-1) != d:
            continue
        yield PolyMatrix.make([flat[i * n : (i + 1) * n] for i in range(m)], field)


def achieved_set(P: PolyMatrix, z: int, dmax: int):
    """Eigenstructures of all completions [P; W] with deg W <= dmax."""
    out = set()
    for W in all_completion_rows(P.field, z, P.cols, dmax):
        out.add(eigenstructure(stack_rows(P, W)))
    return out


def project(es, theorem: str):
    """The part of an eigenstructure each theorem prescribes."""
    if theorem == "full":
        return (es.rank, es.hom_factors, es.col_indices, es.row_indices)
    if theorem == "hom+cols":
        return (es.rank, es.hom_factors, es.col_indices)
    if theorem == "hom+rows":
        return (es.rank, es.hom_factors, es.row_indices)
    if theorem == "hom":
        return (es.rank, es.hom_factors)
    if theorem == "finite":
        return (es.rank, es.alphas)
    if theorem == "infinite":
        return (es.rank, es.inf_mults)
    raise ValueError(f"unknown theorem {theorem!r}")


def target_from_eigenstructure(es, z: int, theorem: str) -> CompletionTarget:
    kw = {"z": z, "rank": es.rank}
    if theorem in ("full", "hom+cols", "hom+rows", "hom"):
        kw["hom_factors"] = es.hom_factors
    if theorem in ("full", "hom+cols"):
        kw["col_indices"] = es.col_indices
    if theorem in ("full", "hom+rows"):
        kw["row_indices"] = es.row_indices
    if theorem == "finite":
        kw["finite_factors"] = es.alphas
    if theorem == "infinite":
        kw["inf_mults"] = es.inf_mults
    return CompletionTarget(**kw)


CHECKERS = {
    "full": check_full,
    "hom+cols": check_hom_plus_cols,
    "hom+rows": check_hom_plus_rows,
    "hom": check_hom_only,
    "finite": check_finite_only,
    "infinite": check_infinite_only,
}


def check_instance(P: PolyMatrix, z: int, theorems=THEOREMS):
    """Compare every checker against brute force for one matrix.

    Returns mismatch records (theorem, target eigenstructure, checker
    verdict, search verdict).
    """
    pinv = eigenstructure(P)
    d = pinv.degree
    achieved = achieved_set(P, z, d)
    r, n = pinv.rank, P.cols
    mismatches = []
    for theorem in theorems:
        truth = {project(es, theorem) for es in achieved}
        seen = set()
        for cand in enumerate_targets(P.rows, n, z, d, P.field):
            x = cand.rank - r
            if not 0 <= x <= min(z, n - r):
                continue
            key = project(cand, theorem)
            if key in seen:
                continue
            seen.add(key)
            target = target_from_eigenstructure(cand, z, theorem)
            verdict = CHECKERS[theorem](pinv, target).feasible
            if verdict != (key in truth):
                mismatches.append(
                    {
                        "matrix": P,
                        "theorem": theorem,
                        "target": cand,
                        "checker": verdict,
                        "search": key in truth,
                    }
                )
    return mismatches


def grid_size(spec: GridSpec) -> int:
    """Completions examined: (#P) x (#W per P)."""
    p = spec.field.p
    n_mats = p ** (spec.m * spec.n * (spec.d + 1))
    n_rows = p ** (spec.z * spec.n * (spec.d + 1))
    return n_mats * n_rows


def _worker(args):
    P, z, theorems = args
    return check_instance(P, z, theorems)


def run_grid(spec: GridSpec, theorems=THEOREMS, budget: int | None = None, jobs: int = 1):
    """All mismatches over the grid; empty list means checkers and
    exhaustive search agree everywhere."""
    if budget is not None and grid_size(spec) > budget:
        raise BudgetExceededError(grid_size(spec), budget)
    mats = list(all_matrices(spec.m, spec.n, spec.d, spec.field))
    work = [(P, spec.z, tuple(theorems)) for P in mats]
    mismatches = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for found in pool.map(_worker, work, chunksize=8):
                mismatches.extend(found)
    else:
        for item in work:
            mismatches.extend(_worker(item))
    return mismatches
