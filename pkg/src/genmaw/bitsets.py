"""k-bit label sets and query masks packed into Python ints.

Bit ``i - 1`` corresponds to document ``i`` (1-based).  A Python int is the
natural machine-word-packed bitset; AND/AND-NOT/equality/subset all cost
one word operation per 30-bit digit.
"""

from __future__ import annotations


class MaskError(ValueError):
    """Raised for malformed query masks."""


def full_mask(k: int) -> int:
    return (1 << k) - 1


def doc_bit(doc_id: int) -> int:
    """Bit for document ``doc_id`` (1-based)."""
    return 1 << (doc_id - 1)


def mask_from_string(bits: str, k: int) -> int:
    """Parse a mask written as in the literature: leftmost char is B[1]."""
    if len(bits) != k:
        raise MaskError(f"mask {bits!r} has length {len(bits)}, expected {k}")
    if set(bits) - {"0", "1"}:
        raise MaskError(f"mask {bits!r} contains characters other than 0/1")
    value = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            value |= 1 << i
    return value


def mask_to_string(mask: int, k: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(k))


def mask_from_docs(doc_ids, k: int) -> int:
    value = 0
    for d in doc_ids:
        if not 1 <= d <= k:
            raise MaskError(f"document id {d} out of range 1..{k}")
        value |= 1 << (d - 1)
    return value


def check_query_mask(mask: int, k: int) -> None:
    """Reject the all-zero mask and out-of-range bits."""
    if mask == 0:
        raise MaskError("the all-zero mask selects nothing: no MAWs to output")
    if mask >> k:
        raise MaskError(f"mask has bits beyond the {k} documents")
