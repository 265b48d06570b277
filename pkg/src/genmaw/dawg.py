"""Edge-sorted DAWG (suffix automaton) over a document collection.

Construction pipeline: concatenate the sentinel-terminated documents, build
the suffix automaton of the concatenation online, prune the spine nodes whose
strings straddle a sentinel, then propagate document-membership labels in
reverse topological order.

The online construction kernel is the hot loop; a compiled extension is
preferred when available and a pure-Python twin is the fallback.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

from . import _pure
from .alphabet import DocumentCollection
from .bitsets import doc_bit

try:
    from . import _fastdawg as _default_kernel
except ImportError:  # extension not built
    _default_kernel = _pure

BACKEND = _default_kernel.BACKEND


def get_kernel(name=None):
    """Return a construction kernel module by backend name.

    ``None`` selects the best available backend.
    """
    if name is None:
        return _default_kernel
    if name == "pure":
        return _pure
    if name == "cython":
        if _default_kernel.BACKEND != "cython":
            raise ValueError("compiled backend is not available")
        return _default_kernel
    raise ValueError(f"unknown backend {name!r}")


class DawgError(ValueError):
    """Raised for invalid construction inputs."""


@dataclass
class ConcatDawg:
    """Suffix automaton of one string, before spine pruning."""

    text: list
    lens: list
    links: list
    adj: list  # per-node transition dict {rank: target}, unordered
    samples: list  # 0-based ending position in text of the node's longest
    spine: list  # spine[p] = node of the length-p prefix


@dataclass
class Dawg:
    """Pruned, labeled, edge-sorted DAWG of a collection."""

    collection: DocumentCollection
    lens: list
    links: list
    edge_syms: list  # per node, ranks sorted ascending
    edge_dst: list
    sample_doc: list  # 1-based document id
    sample_end: list  # 0-based end index within the document
    sinks: list  # k node ids; sinks[i-1] recognizes the suffixes of doc i
    labels: list = field(default_factory=list)
    source: int = 0

    @property
    def k(self) -> int:
        return self.collection.k

    @property
    def sigma(self) -> int:
        return self.collection.table.sigma

    def node_count(self) -> int:
        return len(self.lens)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.edge_syms)

    def walk(self, ranks):
        """Follow ``ranks`` from the source; None when the walk fails."""
        v = self.source
        for c in ranks:
            syms = self.edge_syms[v]
            lo, hi = 0, len(syms)
            while lo < hi:
                mid = (lo + hi) // 2
                if syms[mid] < c:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == len(syms) or syms[lo] != c:
                return None
            v = self.edge_dst[v][lo]
        return v

    def to_dot(self) -> str:
        """DOT dump for debugging: node id, longest length, label bits."""
        table = self.collection.table
        k = self.k
        lines = ["digraph dawg {", "  rankdir=LR;"]
        for v in range(self.node_count()):
            bits = ""
            if self.labels:
                bits = "/" + "".join(
                    "1" if self.labels[v] >> i & 1 else "0" for i in range(k)
                )
            shape = "doublecircle" if v in self.sinks else "circle"
            lines.append(f'  n{v} [label="{v}:{self.lens[v]}{bits}", shape={shape}];')
        for v in range(self.node_count()):
            for c, t in zip(self.edge_syms[v], self.edge_dst[v]):
                if c < self.sigma:
                    sym = str(table.backward[c])
                else:
                    sym = f"#{c - self.sigma + 1}"
                lines.append(f'  n{v} -> n{t} [label="{sym}"];')
        lines.append("}")
        return "\n".join(lines)


def build_concat_dawg(text, kernel=None) -> ConcatDawg:
    """Build the suffix automaton of a single rank-sequence."""
    if len(text) == 0:
        raise DawgError("cannot build the automaton of an empty text")
    kernel = kernel or _default_kernel
    text = list(text)
    lens, links, adj, samples, spine = kernel.build_online(text)
    # Classical size ceilings, as sanity checks.
    assert len(lens) <= 2 * len(text)
    assert sum(len(d) for d in adj) <= 3 * len(text)
    return ConcatDawg(
        text=text, lens=lens, links=links, adj=adj, samples=samples, spine=spine
    )


def prune_to_multi(concat: ConcatDawg, boundaries, collection) -> Dawg:
    """Cut the spine of the concatenation automaton into the multi-string DAWG.

    ``boundaries`` are the prefix lengths ``L_1 < ... < L_k`` of the
    sentinel-terminated concatenation.  A spine node of the length-``p``
    prefix (``p > L_1``) keeps only its members that carry no sentinel at a
    non-final position, i.e. those of length at most ``p - q`` where ``q`` is
    the nearest earlier boundary; when even its shortest member is longer,
    the node disappears entirely.
    """
    text = concat.text
    n = len(text)
    boundaries = list(boundaries)
    if not boundaries or boundaries != sorted(set(boundaries)) or boundaries[-1] != n:
        raise DawgError("boundaries must be strictly increasing prefix lengths up to n")
    seps = {}
    for j, L in enumerate(boundaries, start=1):
        seps[text[L - 1]] = L - 1
    if len(seps) != len(boundaries):
        raise DawgError("boundary sentinels are not pairwise distinct")
    for pos, c in enumerate(text):
        if c in seps and seps[c] != pos:
            raise DawgError(f"sentinel at boundary reoccurs at position {pos}")

    lens = list(concat.lens)
    links = concat.links
    spine = concat.spine
    count = len(lens)
    deleted = [False] * count

    # Process the spine segments of documents 2..k in decreasing order.
    for i in range(len(boundaries) - 1, 0, -1):
        q = boundaries[i - 1]
        for p in range(q + 1, boundaries[i] + 1):
            v = spine[p]
            good_max = p - q
            if good_max < lens[links[v]] + 1:
                deleted[v] = True
            else:
                lens[v] = good_max

    sinks_old = [spine[L] for L in boundaries]

    # Compact surviving nodes; sort adjacency; drop edges into deleted nodes
    # and every out-edge of the sinks (their strings end with a sentinel).
    remap = [-1] * count
    new_id = 0
    for v in range(count):
        if not deleted[v]:
            remap[v] = new_id
            new_id += 1
    sink_set = set(sinks_old)
    new_lens = []
    new_links = []
    edge_syms = []
    edge_dst = []
    sample_doc = []
    sample_end = []
    for v in range(count):
        if deleted[v]:
            continue
        new_lens.append(lens[v])
        lk = links[v]
        assert lk == -1 or not deleted[lk]
        new_links.append(-1 if lk == -1 else remap[lk])
        if v in sink_set:
            items = []
        else:
            items = sorted(
                (c, remap[t]) for c, t in concat.adj[v].items() if not deleted[t]
            )
        edge_syms.append([c for c, _ in items])
        edge_dst.append([t for _, t in items])
        e = concat.samples[v]
        if v == 0:
            sample_doc.append(1)
            sample_end.append(-1)
        else:
            d = bisect_right(boundaries, e) + 1
            start_of_doc = 0 if d == 1 else boundaries[d - 2]
            sample_doc.append(d)
            sample_end.append(e - start_of_doc)
    sinks = [remap[v] for v in sinks_old]
    assert len(set(sinks)) == len(sinks)
    return Dawg(
        collection=collection,
        lens=new_lens,
        links=new_links,
        edge_syms=edge_syms,
        edge_dst=edge_dst,
        sample_doc=sample_doc,
        sample_end=sample_end,
        sinks=sinks,
    )


def compute_labels(dawg: Dawg) -> Dawg:
    """Fill document-membership labels in one reverse-topological pass.

    Edge targets always have strictly larger ``lens``, so decreasing
    ``lens`` order is a reverse topological order.
    """
    count = dawg.node_count()
    labels = [0] * count
    for i, s in enumerate(dawg.sinks, start=1):
        labels[s] = doc_bit(i)
    order = sorted(range(count), key=dawg.lens.__getitem__, reverse=True)
    for v in order:
        acc = labels[v]
        for t in dawg.edge_dst[v]:
            acc |= labels[t]
        labels[v] = acc
    dawg.labels = labels
    return dawg


def build_dawg(collection: DocumentCollection, kernel=None) -> Dawg:
    """Concatenate, build, prune, and label: the full construction."""
    text = []
    boundaries = []
    for doc in collection.docs:
        text.extend(doc)
        boundaries.append(len(text))
    kernel = kernel or _default_kernel
    if hasattr(kernel, "build_labeled") and collection.k <= 64:
        # Compiled fast path: the whole pipeline fused in one call.  It is
        # bit-identical to the staged construction below (asserted by tests).
        (lens, links, edge_syms, edge_dst, sample_doc, sample_end, sinks,
         labels) = kernel.build_labeled(text, boundaries, collection.k)
        return Dawg(
            collection=collection,
            lens=lens,
            links=links,
            edge_syms=edge_syms,
            edge_dst=edge_dst,
            sample_doc=sample_doc,
            sample_end=sample_end,
            sinks=sinks,
            labels=labels,
        )
    concat = build_concat_dawg(text, kernel=kernel)
    dawg = prune_to_multi(concat, boundaries, collection)
    return compute_labels(dawg)
