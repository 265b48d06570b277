"""Brute-force reference implementations, from first principles.

Everything here works on plain string sets and scanning, never on the
automaton, so the oracles stay independent of the enumeration paths they
verify.  Costs are quadratic and only meant for small instances.
"""

from __future__ import annotations

from .bitsets import check_query_mask


def substr_set(doc):
    """All substrings of ``doc`` including the empty string."""
    out = {doc[0:0]}
    for i in range(len(doc)):
        for j in range(i + 1, len(doc) + 1):
            out.add(doc[i:j])
    return out


def single_maws(doc, alphabet):
    """MAW(S) for one document over an explicit alphabet."""
    subs = substr_set(doc)
    maws = set()
    for a in alphabet:
        if a not in subs:
            maws.add(a)
    for au in subs:
        if not au:
            continue
        for b in alphabet:
            aub = au + b
            if aub not in subs and aub[1:] in subs:
                maws.add(aub)
    return maws


def oracle_maws(docs, alphabet, mask):
    """MAW(S_B): intersection of MAW(S_i) over set bits minus the union over
    clear bits."""
    check_query_mask(mask, len(docs))
    per_doc = [single_maws(doc, alphabet) for doc in docs]
    result = None
    for i, maws in enumerate(per_doc):
        if mask >> i & 1:
            result = set(maws) if result is None else result & maws
    for i, maws in enumerate(per_doc):
        if not mask >> i & 1:
            result -= maws
    return result


def oracle_endpos_partition(collection):
    """Group the nonempty sentinel-terminated substrings by their EndPos sets.

    Substrings considered are those of each S_i#_i carrying no sentinel at a
    non-final position.  Returns a set of frozensets of rank tuples.
    """
    sigma = collection.table.sigma
    candidates = set()
    for doc in collection.docs:
        m = len(doc)
        for i in range(m):
            for j in range(i + 1, m + 1):
                piece = tuple(doc[i:j])
                if all(r < sigma for r in piece[:-1]):
                    candidates.add(piece)
    groups = {}
    for w in candidates:
        endpos = []
        lw = len(w)
        for d, doc in enumerate(collection.docs, start=1):
            for j in range(lw, len(doc) + 1):
                if tuple(doc[j - lw : j]) == w:
                    endpos.append((d, j))
        groups.setdefault(frozenset(endpos), set()).add(w)
    return {frozenset(ws) for ws in groups.values()}


def oracle_maw_prime(docs, alphabet):
    """aub absent from every document, au present somewhere, ub present
    somewhere; length >= 2."""
    subs = [substr_set(doc) for doc in docs]
    union = set().union(*subs)
    out = set()
    for au in union:
        if not au:
            continue
        for b in alphabet:
            aub = au + b
            if aub[1:] in union and all(aub not in s for s in subs):
                out.add(aub)
    return out


def oracle_specific(docs, alphabet, target_ids, ref_ids):
    """Target-specific strings: present in some target document, absent from
    all references, with every proper substring present in the references."""
    target_ids = set(target_ids)
    ref_ids = set(ref_ids)
    if not target_ids or not ref_ids or target_ids & ref_ids:
        raise ValueError("target and reference sets must be disjoint and nonempty")
    tsub = set().union(*(substr_set(docs[i - 1]) for i in target_ids))
    rsub = set().union(*(substr_set(docs[i - 1]) for i in ref_ids))
    out = set()
    for a in alphabet:
        if a in tsub and a not in rsub:
            out.add(a)
    for au in rsub:
        if not au:
            continue
        for b in alphabet:
            aub = au + b
            if aub in tsub and aub not in rsub and aub[1:] in rsub:
                out.add(aub)
    return out
