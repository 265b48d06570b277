"""Generalized minimal-absent-word enumeration over a labeled DAWG.

For every node x with shortest string ``au`` the scan merges the sorted
out-edges of x against a mask-filtered sublist of the out-edges of its
suffix-link target (the class of ``u``), keeping the merge cursors ordered.
A matched edge means ``aub`` occurs somewhere and is judged by the
present-candidate predicate; a skip-list symbol the node lacks means ``aub``
is absent everywhere and is judged by the absent-candidate predicate.  Both
predicates are single word-parallel bitset tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alphabet import DocumentCollection, externalize
from .bitsets import check_query_mask, full_mask, mask_from_docs
from .dawg import Dawg


class CorruptMawRef(RuntimeError):
    """A MawRef points outside its document: internal corruption."""


@dataclass(frozen=True)
class MawRef:
    """Constant-space MAW encoding: first symbol plus one occurrence of ub.

    ``doc[start..end]`` (1-based, inclusive) spells ``ub``; ``start == end + 1``
    encodes an empty ``ub`` for length-1 MAWs.
    """

    first_symbol: int
    doc: int
    start: int
    end: int

    def length(self) -> int:
        return 1 + self.end - self.start + 1


@dataclass
class MergeStats:
    """Instrumentation for the output-sensitivity checks."""

    comparisons: int = 0
    predicate_evals: int = 0


@dataclass
class CountingSink:
    """Counts emitted refs, optionally with a per-length histogram."""

    count: int = 0
    histogram: dict = field(default_factory=dict)

    def __call__(self, ref: MawRef) -> None:
        self.count += 1
        length = ref.length()
        self.histogram[length] = self.histogram.get(length, 0) + 1


def candidate_present(label_au: int, label_ub: int, label_aub: int, mask: int) -> bool:
    """Is aub a MAW for exactly the mask pattern, given the edge au->aub exists?

    Per document i: aub is a MAW of S_i iff aub is absent from S_i while both
    au and ub occur in it.
    """
    return label_au & label_ub & ~label_aub == mask


def candidate_absent(label_au: int, label_ub: int, mask: int) -> bool:
    """Same judgement when aub occurs in no document at all."""
    return label_au & label_ub == mask


def build_skip_index(dawg: Dawg, mask: int):
    """Per-node positions of the out-edges whose child label covers the mask.

    Sentinel edges are excluded; positions index the node's sorted adjacency,
    so each sublist is itself sorted by symbol rank.
    """
    sigma = dawg.sigma
    labels = dawg.labels
    index = []
    for syms, dsts in zip(dawg.edge_syms, dawg.edge_dst):
        sub = []
        for j, c in enumerate(syms):
            if c >= sigma:
                break
            if labels[dsts[j]] & mask == mask:
                sub.append(j)
        index.append(sub)
    return index


def skip_symbols(dawg: Dawg, index, node: int):
    """Symbol ranks selected by a skip index at ``node`` (test helper)."""
    return [dawg.edge_syms[node][j] for j in index[node]]


def _first_symbol(dawg: Dawg, x: int, au_len: int) -> int:
    """First symbol of the shortest string of node x, read off its sample."""
    d = dawg.sample_doc[x]
    e = dawg.sample_end[x]
    return dawg.collection.docs[d - 1][e - au_len + 1]


def _emit_single(emit, c: int) -> None:
    if emit is not None:
        emit(MawRef(first_symbol=c, doc=1, start=1, end=0))


def _source_occurrence(dawg: Dawg):
    """Label of the source's child per regular symbol (0 when absent)."""
    occ = {}
    for c, t in zip(dawg.edge_syms[0], dawg.edge_dst[0]):
        if c < dawg.sigma:
            occ[c] = dawg.labels[t]
    return occ


def enumerate_maws(dawg: Dawg, mask: int, emit=None, stats=None) -> int:
    """Emit MAW(S_B) for query mask ``mask``; returns the number emitted.

    Length-1 MAWs come from a dedicated alphabet scan; longer ones from the
    per-node merge scan.  Raises :class:`genmaw.bitsets.MaskError` on a zero
    or oversized mask.
    """
    check_query_mask(mask, dawg.k)
    if stats is None:
        stats = MergeStats()
    count = 0

    want = full_mask(dawg.k) ^ mask
    occ = _source_occurrence(dawg)
    for c in range(dawg.sigma):
        if occ.get(c, 0) == want:
            count += 1
            _emit_single(emit, c)

    skip = build_skip_index(dawg, mask)
    count += _scan_nodes(
        dawg, mask, skip, range(dawg.node_count()), emit, stats
    )
    return count


def _scan_nodes(dawg: Dawg, mask: int, skip, node_range, emit, stats) -> int:
    """Merge scan over ``node_range``; per-node work is independent."""
    labels = dawg.labels
    links = dawg.links
    lens = dawg.lens
    edge_syms = dawg.edge_syms
    edge_dst = dawg.edge_dst
    sample_doc = dawg.sample_doc
    sample_end = dawg.sample_end
    sink_set = set(dawg.sinks)
    count = 0
    comparisons = stats.comparisons
    evals = stats.predicate_evals
    for x in node_range:
        if x == dawg.source or x in sink_set:
            continue
        lab = labels[x]
        if lab & mask != mask:
            evals += 1
            continue
        evals += 1
        y = links[x]
        sk = skip[y]
        if not sk:
            continue
        ysyms = edge_syms[y]
        ydst = edge_dst[y]
        xsyms = edge_syms[x]
        xdst = edge_dst[x]
        nx = len(xsyms)
        ub_len = lens[y] + 1
        a = _first_symbol(dawg, x, ub_len)  # |au| == lens[y] + 1 too
        i = 0
        for j in sk:
            b = ysyms[j]
            while i < nx and xsyms[i] < b:
                i += 1
                comparisons += 1
            comparisons += 1
            child_y = ydst[j]
            lab_ub = labels[child_y]
            if i < nx and xsyms[i] == b:
                evals += 1
                if lab & lab_ub & ~labels[xdst[i]] == mask:
                    count += 1
                    if emit is not None:
                        e = sample_end[child_y]
                        emit(MawRef(a, sample_doc[child_y], e - ub_len + 2, e + 1))
                i += 1
            else:
                evals += 1
                if lab & lab_ub == mask:
                    count += 1
                    if emit is not None:
                        e = sample_end[child_y]
                        emit(MawRef(a, sample_doc[child_y], e - ub_len + 2, e + 1))
    stats.comparisons = comparisons
    stats.predicate_evals = evals
    return count


def enumerate_maw_prime(dawg: Dawg, emit=None, stats=None) -> int:
    """Strings aub absent from every document with au and ub each present
    somewhere (possibly in different documents); length >= 2 only.

    The merge scan runs against the full sentinel-free adjacency of u and
    emits on every absent-edge event.
    """
    if stats is None:
        stats = MergeStats()
    sigma = dawg.sigma
    links = dawg.links
    lens = dawg.lens
    edge_syms = dawg.edge_syms
    edge_dst = dawg.edge_dst
    sink_set = set(dawg.sinks)
    count = 0
    for x in range(dawg.node_count()):
        if x == dawg.source or x in sink_set:
            continue
        y = links[x]
        ysyms = edge_syms[y]
        ydst = edge_dst[y]
        xsyms = edge_syms[x]
        nx = len(xsyms)
        ub_len = lens[y] + 1
        a = _first_symbol(dawg, x, ub_len)
        i = 0
        for j, b in enumerate(ysyms):
            if b >= sigma:
                break
            while i < nx and xsyms[i] < b:
                i += 1
                stats.comparisons += 1
            stats.comparisons += 1
            if i < nx and xsyms[i] == b:
                i += 1
            else:
                count += 1
                if emit is not None:
                    child_y = ydst[j]
                    e = dawg.sample_end[child_y]
                    emit(MawRef(a, dawg.sample_doc[child_y], e - ub_len + 2, e + 1))
    return count


def enumerate_specific(dawg: Dawg, target_docs, ref_docs, emit=None) -> int:
    """Strings present in some target document, absent from every reference
    document, with all proper substrings present in the references.
    """
    target_docs = set(target_docs)
    ref_docs = set(ref_docs)
    if not target_docs or not ref_docs:
        raise ValueError("target and reference document sets must be nonempty")
    if target_docs & ref_docs:
        raise ValueError("target and reference document sets must be disjoint")
    if target_docs | ref_docs != set(range(1, dawg.k + 1)):
        raise ValueError("target and reference sets must partition the documents")
    tmask = mask_from_docs(target_docs, dawg.k)
    rmask = mask_from_docs(ref_docs, dawg.k)

    count = 0
    occ = _source_occurrence(dawg)
    for c in range(dawg.sigma):
        lab = occ.get(c, 0)
        if lab & tmask and not lab & rmask:
            count += 1
            _emit_single(emit, c)

    labels = dawg.labels
    sigma = dawg.sigma
    sink_set = set(dawg.sinks)
    for x in range(dawg.node_count()):
        if x == dawg.source or x in sink_set:
            continue
        if not labels[x] & rmask:
            continue
        y = dawg.links[x]
        ysyms = dawg.edge_syms[y]
        ydst = dawg.edge_dst[y]
        ub_len = dawg.lens[y] + 1
        a = _first_symbol(dawg, x, ub_len)
        i = 0
        for b, cx in zip(dawg.edge_syms[x], dawg.edge_dst[x]):
            if b >= sigma:
                break
            lab_aub = labels[cx]
            # every edge of x has a matching edge of y
            while ysyms[i] < b:
                i += 1
            child_y = ydst[i]
            if not lab_aub & rmask and lab_aub & tmask and labels[child_y] & rmask:
                count += 1
                if emit is not None:
                    e = dawg.sample_end[child_y]
                    emit(MawRef(a, dawg.sample_doc[child_y], e - ub_len + 2, e + 1))
    return count


def collect_maws(dawg: Dawg, mask: int, threads: int = 1, stats=None):
    """Materialize enumerate_maws output as a list of refs.

    With ``threads > 1`` the node range is partitioned across a thread pool;
    per-node work is independent, so only the emission order changes.
    """
    refs = []
    if threads <= 1:
        enumerate_maws(dawg, mask, emit=refs.append, stats=stats)
        return refs

    from concurrent.futures import ThreadPoolExecutor

    check_query_mask(mask, dawg.k)
    want = full_mask(dawg.k) ^ mask
    occ = _source_occurrence(dawg)
    for c in range(dawg.sigma):
        if occ.get(c, 0) == want:
            refs.append(MawRef(first_symbol=c, doc=1, start=1, end=0))

    skip = build_skip_index(dawg, mask)
    count = dawg.node_count()
    chunk = max(1, (count + threads - 1) // threads)
    ranges = [range(lo, min(lo + chunk, count)) for lo in range(0, count, chunk)]

    def work(rng):
        local = []
        local_stats = MergeStats()
        _scan_nodes(dawg, mask, skip, rng, local.append, local_stats)
        return local, local_stats

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for local, local_stats in pool.map(work, ranges):
            refs.extend(local)
            if stats is not None:
                stats.comparisons += local_stats.comparisons
                stats.predicate_evals += local_stats.predicate_evals
    return refs


SET_OPS = ("intersection", "union", "symdiff")


def set_ops(dawg: Dawg, op: str, emit=None, stats=None) -> int:
    """Corollary-style set operations on MAW(S_1) and MAW(S_2); k = 2 only.

    The underlying mask enumerations have pairwise disjoint outputs, so the
    streams concatenate without deduplication.
    """
    if dawg.k != 2:
        raise ValueError("set operations are defined for exactly two documents")
    if op == "intersection":
        masks = (0b11,)
    elif op == "symdiff":
        masks = (0b01, 0b10)
    elif op == "union":
        masks = (0b01, 0b10, 0b11)
    else:
        raise ValueError(f"unknown set operation {op!r}")
    return sum(enumerate_maws(dawg, m, emit=emit, stats=stats) for m in masks)


def decode_maw(ref: MawRef, collection: DocumentCollection):
    """Decode a MawRef to its external string form."""
    if not 1 <= ref.doc <= collection.k:
        raise CorruptMawRef(f"document id {ref.doc} out of range")
    doc = collection.docs[ref.doc - 1]
    if not (1 <= ref.start <= ref.end + 1 and ref.end <= len(doc)):
        raise CorruptMawRef(f"positions {ref.start}..{ref.end} out of range")
    ranks = [ref.first_symbol]
    ranks.extend(doc[ref.start - 1 : ref.end])
    if any(r >= collection.table.sigma for r in ranks):
        raise CorruptMawRef("decoded string contains a sentinel rank")
    return externalize(collection.table, ranks)
