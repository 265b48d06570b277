"""Symbol interning: external documents to dense integer rank sequences.

Ranks are assigned in sorted order of the external symbols, so rank order
equals lexicographic order.  Each document i (1-based) is terminated by a
unique sentinel rank ``sigma + i - 1``; sentinels therefore sort above every
regular symbol.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class InternError(ValueError):
    """Raised for invalid documents or alphabet declarations."""


@dataclass
class SymbolTable:
    forward: dict  # external symbol -> rank in 0..sigma-1
    backward: list  # rank -> external symbol
    sigma: int

    def sentinel_rank(self, doc_id: int) -> int:
        """Rank of the sentinel of document ``doc_id`` (1-based)."""
        return self.sigma + doc_id - 1

    def is_sentinel(self, rank: int) -> bool:
        return rank >= self.sigma


@dataclass
class DocumentCollection:
    docs: list  # k rank-sequences, each ending with its own sentinel rank
    k: int
    n: int  # total length including sentinels
    table: SymbolTable
    names: list = field(default_factory=list)

    def doc_length(self, doc_id: int) -> int:
        """Length of document ``doc_id`` (1-based), sentinel included."""
        return len(self.docs[doc_id - 1])


def intern_collection(raw_docs, extra_alphabet=None):
    """Intern ``raw_docs`` into a :class:`DocumentCollection`.

    ``raw_docs`` is a list of symbol sequences (strings, bytes, or any
    sequence of mutually comparable hashable symbols).  ``extra_alphabet``
    declares symbols that must receive ranks even when absent from every
    document (needed for length-1 MAWs of declared-but-unused symbols).

    Returns ``(SymbolTable, DocumentCollection)``.
    """
    if len(raw_docs) == 0:
        raise InternError("a collection needs at least one document")
    symbols = set()
    for doc in raw_docs:
        symbols.update(doc)
    if extra_alphabet is not None:
        extras = list(extra_alphabet)
        if len(extras) != len(set(extras)):
            raise InternError("duplicate symbols in declared alphabet")
        symbols.update(extras)
    ordered = sorted(symbols)
    forward = {sym: rank for rank, sym in enumerate(ordered)}
    sigma = len(ordered)
    table = SymbolTable(forward=forward, backward=ordered, sigma=sigma)

    docs = []
    for i, doc in enumerate(raw_docs, start=1):
        ranks = [forward[sym] for sym in doc]
        ranks.append(table.sentinel_rank(i))
        docs.append(ranks)
    n = sum(len(d) for d in docs)
    collection = DocumentCollection(docs=docs, k=len(docs), n=n, table=table)
    return table, collection


def externalize(table: SymbolTable, ranks) -> object:
    """Map a rank sequence back to external form.

    Returns a ``str`` when all symbols are 1-character strings, ``bytes``
    when all are ints in 0..255, and a tuple otherwise.
    """
    syms = [table.backward[r] for r in ranks]
    if all(isinstance(s, str) and len(s) == 1 for s in syms):
        return "".join(syms)
    if all(isinstance(s, int) and 0 <= s < 256 for s in syms):
        return bytes(syms)
    return tuple(syms)
