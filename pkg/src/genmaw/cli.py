"""Command-line front end.

Subcommands: build, maw, prime, specific, oracle-check, bench.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .alphabet import InternError, intern_collection
from .bitsets import MaskError, full_mask, mask_from_string
from .dawg import DawgError, build_dawg
from .maws import (
    CountingSink,
    MergeStats,
    collect_maws,
    decode_maw,
    enumerate_maw_prime,
    enumerate_maws,
    enumerate_specific,
)
from .oracle import oracle_maw_prime, oracle_maws, oracle_specific
from . import bench as bench_mod


class UsageError(Exception):
    pass


def esc_symbol(s: int) -> str:
    if 32 <= s <= 126:
        return chr(s)
    return f"\\x{s:02x}"


def esc_bytes(bs: bytes) -> str:
    return "".join(esc_symbol(b) for b in bs)


def read_plain(path: str) -> bytes:
    with open(path, "rb") as fh:
        data = fh.read()
    if data.endswith(b"\n"):
        data = data[:-1]
    return data


def read_fasta(path: str):
    """Yield (name, sequence-bytes) per record; case-preserved bytes."""
    records = []
    name = None
    chunks = []
    with open(path, "rb") as fh:
        for line in fh:
            line = line.rstrip(b"\r\n")
            if line.startswith(b">"):
                if name is not None:
                    records.append((name, b"".join(chunks)))
                name = line[1:].decode("latin-1").strip()
                chunks = []
            elif line:
                if name is None:
                    raise UsageError(f"{path}: sequence data before FASTA header")
                chunks.append(line)
    if name is not None:
        records.append((name, b"".join(chunks)))
    if not records:
        raise UsageError(f"{path}: no FASTA records")
    return records


def parse_inputs(paths, fasta: bool, alphabet: str | None):
    docs = []
    names = []
    for path in paths:
        if fasta:
            for name, seq in read_fasta(path):
                docs.append(list(seq))
                names.append(name)
        else:
            docs.append(list(read_plain(path)))
            names.append(path)
    if not docs:
        raise UsageError("no documents")
    extra = list(alphabet.encode("latin-1")) if alphabet else None
    table, collection = intern_collection(docs, extra)
    collection.names = names
    return table, collection


def add_input_args(p):
    p.add_argument("files", nargs="+", help="input files, one document each")
    p.add_argument("--fasta", action="store_true", help="parse inputs as FASTA, one document per record")
    p.add_argument("--alphabet", help="extra alphabet symbols that must receive ranks")


def add_output_args(p):
    p.add_argument("--format", choices=("surface", "tuples"), default="surface")
    p.add_argument("--count", action="store_true", help="print only the number of results")
    p.add_argument("--histogram", action="store_true", help="with --count, also print a length histogram")
    p.add_argument("--min-len", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--output", help="write results to this path instead of stdout")
    p.add_argument("--threads", type=int, default=1, help="partition the node scan across threads")


def in_length_range(length, args) -> bool:
    if args.min_len is not None and length < args.min_len:
        return False
    if args.max_len is not None and length > args.max_len:
        return False
    return True


def write_refs(refs, collection, args, out):
    if args.count:
        total = 0
        hist = {}
        for ref in refs:
            length = ref.length()
            if in_length_range(length, args):
                total += 1
                hist[length] = hist.get(length, 0) + 1
        out.write(f"{total}\n")
        if args.histogram:
            for length in sorted(hist):
                out.write(f"{length}\t{hist[length]}\n")
        return
    items = []
    for ref in refs:
        decoded = decode_maw(ref, collection)
        if in_length_range(len(decoded), args):
            items.append((len(decoded), decoded, ref))
    items.sort(key=lambda t: (t[0], t[1]))
    if args.format == "surface":
        for _, decoded, _ in items:
            out.write(esc_bytes(decoded) + "\n")
    else:
        table = collection.table
        for _, _, ref in items:
            a = esc_symbol(table.backward[ref.first_symbol])
            out.write(f"{a}\t{ref.doc}\t{ref.start}\t{ref.end}\n")


def open_output(args):
    if getattr(args, "output", None):
        return open(args.output, "w")
    return None


def with_output(args, fn) -> int:
    fh = open_output(args)
    try:
        return fn(fh or sys.stdout)
    finally:
        if fh is not None:
            fh.close()


def cmd_build(args) -> int:
    table, collection = parse_inputs(args.files, args.fasta, args.alphabet)
    dawg = build_dawg(collection)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dawg.to_dot() + "\n")
    stats = MergeStats()
    enumerate_maws(dawg, full_mask(collection.k), stats=stats)
    if args.stats_json:
        print(
            json.dumps(
                {
                    "k": collection.k,
                    "n": collection.n,
                    "sigma": table.sigma,
                    "nodes": dawg.node_count(),
                    "edges": dawg.edge_count(),
                    "comparisons": stats.comparisons,
                }
            )
        )
        return 0
    print(f"documents        {collection.k}")
    print(f"total length n   {collection.n} (sentinels included)")
    print(f"alphabet sigma   {table.sigma}")
    print(f"nodes            {dawg.node_count()}")
    print(f"edges            {dawg.edge_count()}")
    print(f"sinks            {len(dawg.sinks)}")
    print(f"merge comparisons (full mask) {stats.comparisons}")
    if collection.k <= 8:
        hist = {}
        for lab in dawg.labels:
            hist[lab] = hist.get(lab, 0) + 1
        for lab in sorted(hist):
            bits = "".join("1" if lab >> i & 1 else "0" for i in range(collection.k))
            print(f"label {bits}       {hist[lab]} nodes")
    return 0


def cmd_maw(args) -> int:
    table, collection = parse_inputs(args.files, args.fasta, args.alphabet)
    dawg = build_dawg(collection)
    if args.preset:
        if collection.k != 2:
            raise UsageError(f"preset {args.preset} requires exactly 2 documents, got {collection.k}")
        masks = {
            "intersection": (0b11,),
            "sym-diff": (0b01, 0b10),
            "union": (0b01, 0b10, 0b11),
        }[args.preset]
    else:
        masks = (mask_from_string(args.mask, collection.k),)
        if masks[0] == 0:
            raise UsageError(
                "the all-zero mask selects the complement of every MAW set: there are no MAWs to output"
            )
    refs = []
    for mask in masks:
        refs.extend(collect_maws(dawg, mask, threads=args.threads))
    return with_output(args, lambda out: (write_refs(refs, collection, args, out), 0)[1])


def cmd_prime(args) -> int:
    _, collection = parse_inputs(args.files, args.fasta, args.alphabet)
    dawg = build_dawg(collection)
    refs = []
    enumerate_maw_prime(dawg, emit=refs.append)
    return with_output(args, lambda out: (write_refs(refs, collection, args, out), 0)[1])


def parse_doc_ids(spec: str, k: int):
    try:
        ids = [int(part) for part in spec.split(",") if part]
    except ValueError:
        raise UsageError(f"bad document id list {spec!r}") from None
    if not ids or any(not 1 <= d <= k for d in ids):
        raise UsageError(f"document ids in {spec!r} must be in 1..{k}")
    return ids


def cmd_specific(args) -> int:
    _, collection = parse_inputs(args.files, args.fasta, args.alphabet)
    k = collection.k
    target = parse_doc_ids(args.target, k)
    ref = parse_doc_ids(args.ref, k)
    if set(target) & set(ref):
        raise UsageError("--target and --ref must be disjoint")
    if set(target) | set(ref) != set(range(1, k + 1)):
        raise UsageError("--target and --ref together must cover all documents")
    dawg = build_dawg(collection)
    refs = []
    enumerate_specific(dawg, target, ref, emit=refs.append)
    return with_output(args, lambda out: (write_refs(refs, collection, args, out), 0)[1])


def cmd_oracle_check(args) -> int:
    rng = random.Random(args.seed)
    alphabet = "abcd"
    for trial in range(args.trials):
        k = rng.randint(1, 4)
        sigma = rng.randint(1, 4)
        sub = alphabet[:sigma]
        docs = [
            "".join(rng.choice(sub) for _ in range(rng.randint(0, 12)))
            for _ in range(k)
        ]
        _, collection = intern_collection(docs, alphabet)
        dawg = build_dawg(collection)

        def fail(what, detail):
            print(f"oracle-check FAILED at trial {trial} ({what})")
            print(f"  documents: {docs!r}")
            print(f"  alphabet:  {alphabet!r}")
            print(f"  detail:    {detail}")
            return 1

        for mask in range(1, 1 << k):
            got = {decode_maw(r, collection) for r in collect_maws(dawg, mask)}
            want = oracle_maws(docs, alphabet, mask)
            if got != want:
                return fail(f"mask {mask:0{k}b}", f"got {sorted(got)} want {sorted(want)}")
        refs = []
        enumerate_maw_prime(dawg, emit=refs.append)
        got = {decode_maw(r, collection) for r in refs}
        want = oracle_maw_prime(docs, alphabet)
        if got != want:
            return fail("prime", f"got {sorted(got)} want {sorted(want)}")
        if k >= 2:
            ids = list(range(1, k + 1))
            rng.shuffle(ids)
            cut = rng.randint(1, k - 1)
            tset, rset = ids[:cut], ids[cut:]
            refs = []
            enumerate_specific(dawg, tset, rset, emit=refs.append)
            got = {decode_maw(r, collection) for r in refs}
            want = oracle_specific(docs, alphabet, tset, rset)
            if got != want:
                return fail(f"specific T={tset} R={rset}", f"got {sorted(got)} want {sorted(want)}")
    print(f"oracle-check: {args.trials} trials passed (seed={args.seed})")
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    backends = [args.backend] if args.backend else None
    bench_mod.main(sizes=sizes, sigma=args.sigma, k=args.k, seed=args.seed, backends=backends)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="genmaw",
        description="Generalized minimal absent words over multiple strings.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="build the DAWG and report size/label statistics")
    add_input_args(p)
    p.add_argument("--stats-json", action="store_true")
    p.add_argument("--dot", help="write a DOT dump of the automaton to this path")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("maw", help="enumerate MAW(S_B) for a mask or a k=2 preset")
    add_input_args(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--mask", help="bit string of length k; leftmost bit is document 1")
    g.add_argument("--preset", choices=("intersection", "union", "sym-diff"))
    add_output_args(p)
    p.set_defaults(fn=cmd_maw)

    p = sub.add_parser("prime", help="MAW' variant: absent everywhere, flanks present somewhere")
    add_input_args(p)
    add_output_args(p)
    p.set_defaults(fn=cmd_prime)

    p = sub.add_parser("specific", help="target-specific strings w.r.t. reference documents")
    add_input_args(p)
    p.add_argument("--target", required=True, help="comma-separated 1-based document ids")
    p.add_argument("--ref", required=True, help="comma-separated 1-based document ids")
    add_output_args(p)
    p.set_defaults(fn=cmd_specific)

    p = sub.add_parser("oracle-check", help="randomized equivalence trials against brute force")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_oracle_check)

    p = sub.add_parser("bench", help="time construction and count-only enumeration per backend")
    p.add_argument("--sizes", default="200000,400000,800000")
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=("pure", "cython"))
    p.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, MaskError, InternError, DawgError, OSError, ValueError) as exc:
        print(f"genmaw: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
