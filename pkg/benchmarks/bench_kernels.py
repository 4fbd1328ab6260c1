#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels.

Times lexicographic good-pair dismantling on random chordal graphs and GF(2)
rank on random boundary-like matrices, best of ``--repeats`` runs.
"""

from __future__ import annotations

import argparse
import json
import random
import time

from chordcore.chordal import random_chordal
from chordcore.kernels import available_backends


def best_of(func, arg, repeats: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = func(arg)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_dismantle(backends: dict, sizes: list[int], fill: float, repeats: int) -> list[dict]:
    rows = []
    for n in sizes:
        G, _ = random_chordal(n, fill, seed=n)
        masks = list(G.masks)
        row = {"kernel": "dismantle_lex", "n": n, "edges": G.m}
        results = {}
        for name, mod in backends.items():
            row[name], results[name] = best_of(mod.dismantle_lex, masks, repeats)
        row["agree"] = len({repr(r) for r in results.values()}) == 1
        rows.append(row)
    return rows


def bench_rank(backends: dict, sizes: list[int], repeats: int) -> list[dict]:
    rng = random.Random(0)
    rows = []
    for n in sizes:
        # sparse rows with three ones each, like a boundary matrix of triangles
        matrix = [sum(1 << c for c in rng.sample(range(n), 3)) for _ in range(n)]
        row = {"kernel": "gf2_rank", "n": n}
        results = {}
        for name, mod in backends.items():
            row[name], results[name] = best_of(mod.gf2_rank, matrix, repeats)
        row["agree"] = len(set(results.values())) == 1
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[125, 250, 500, 1000])
    ap.add_argument("--rank-sizes", type=int, nargs="+", default=[250, 500, 1000, 2000])
    ap.add_argument("--fill", type=float, default=0.7)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    backends = available_backends()
    rows = bench_dismantle(backends, args.sizes, args.fill, args.repeats)
    rows += bench_rank(backends, args.rank_sizes, args.repeats)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    names = sorted(backends)
    header = f"{'kernel':<14}{'n':>6}" + "".join(f"{name + ' [s]':>14}" for name in names)
    if "cython" in backends:
        header += f"{'speedup':>10}"
    print(header)
    for row in rows:
        line = f"{row['kernel']:<14}{row['n']:>6}" + "".join(f"{row[name]:>14.5f}" for name in names)
        if "cython" in backends:
            line += f"{row['python'] / max(row['cython'], 1e-9):>9.1f}x"
        if not row["agree"]:
            line += "  MISMATCH"
        print(line)


if __name__ == "__main__":
    main()
