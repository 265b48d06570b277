"""Construction/enumeration benchmark, comparing the available backends."""

from __future__ import annotations

import random
import string
from time import perf_counter

from .alphabet import intern_collection
from .bitsets import full_mask
from .dawg import BACKEND, build_dawg, get_kernel
from .maws import MergeStats, enumerate_maws


def available_backends():
    names = ["pure"]
    if BACKEND == "cython":
        names.append("cython")
    return names


def random_collection(n, sigma, k, rng):
    """k documents of total regular length n over the first sigma letters."""
    alphabet = string.ascii_lowercase[:sigma]
    per = max(1, n // k)
    docs = ["".join(rng.choice(alphabet) for _ in range(per)) for _ in range(k)]
    _, collection = intern_collection(docs, alphabet)
    return docs, collection


def run_case(n, sigma=4, k=2, seed=0, backends=None):
    """Build + count-only full-mask enumeration at size n, per backend."""
    rng = random.Random(seed)
    _, collection = random_collection(n, sigma, k, rng)
    mask = full_mask(k)
    rows = []
    for name in backends or available_backends():
        kernel = get_kernel(name)
        t0 = perf_counter()
        dawg = build_dawg(collection, kernel=kernel)
        t1 = perf_counter()
        stats = MergeStats()
        count = enumerate_maws(dawg, mask, stats=stats)
        t2 = perf_counter()
        rows.append(
            {
                "n": collection.n,
                "k": k,
                "sigma": sigma,
                "backend": name,
                "build_s": t1 - t0,
                "enum_s": t2 - t1,
                "total_s": t2 - t0,
                "ns_per_symbol": (t2 - t0) / collection.n * 1e9,
                "nodes": dawg.node_count(),
                "edges": dawg.edge_count(),
                "comparisons": stats.comparisons,
                "maws": count,
            }
        )
    return rows


def format_row(row) -> str:
    return (
        f"n={row['n']} backend={row['backend']} "
        f"build={row['build_s']:.3f}s enum={row['enum_s']:.3f}s "
        f"per-symbol={row['ns_per_symbol']:.0f}ns "
        f"nodes={row['nodes']} edges={row['edges']} "
        f"comparisons={row['comparisons']} maws={row['maws']}"
    )


def main(sizes=(200_000, 400_000, 800_000), sigma=4, k=2, seed=0, backends=None, out=print):
    all_rows = []
    for n in sizes:
        rows = run_case(n, sigma=sigma, k=k, seed=seed, backends=backends)
        for row in rows:
            out(format_row(row))
        all_rows.extend(rows)
    return all_rows


if __name__ == "__main__":
    main()
