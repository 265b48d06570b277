import random

import pytest

from genmaw import (
    decode_maw,
    enumerate_maw_prime,
    enumerate_maws,
    enumerate_specific,
    oracle_maw_prime,
    oracle_maws,
    oracle_specific,
    set_ops,
    single_maws,
)

from conftest import ALPHABET, build, random_docs


def collected(fn, dawg, coll, *args, **kwargs):
    refs = []
    fn(dawg, *args, emit=refs.append, **kwargs)
    return {decode_maw(r, coll) for r in refs}


def test_prime_example1_contains_aaa():
    coll, dawg = build(["abaab", "aacbba"], "abcd")
    prime = collected(enumerate_maw_prime, dawg, coll)
    assert "aaa" in prime
    # superset of the length>=2 part of MAW(S_11)
    both = {
        decode_maw(r, coll)
        for r in _refs(enumerate_maws, dawg, 0b11)
        if r.length() >= 2
    }
    assert both <= prime


def _refs(fn, dawg, *args):
    refs = []
    fn(dawg, *args, emit=refs.append)
    return refs


def test_prime_single_doc_collapses_to_maws():
    docs = ["bbacccbaa"]
    coll, dawg = build(docs, "abcd")
    prime = collected(enumerate_maw_prime, dawg, coll)
    maws = {w for w in single_maws(docs[0], "abcd") if len(w) >= 2}
    assert prime == maws


def test_prime_random(rng):
    for _ in range(80):
        docs = random_docs(rng)
        coll, dawg = build(docs, ALPHABET)
        got = collected(enumerate_maw_prime, dawg, coll)
        assert got == oracle_maw_prime(docs, ALPHABET), docs


def test_specific_example1():
    docs = ["abaab", "aacbba"]
    coll, dawg = build(docs, "abcd")
    got = collected(enumerate_specific, dawg, coll, [1], [2])
    assert got == {"ab", "baa"}
    assert got == oracle_specific(docs, "abcd", [1], [2])


def test_specific_equal_documents_empty():
    docs = ["abab", "abab"]
    coll, dawg = build(docs, "ab")
    assert collected(enumerate_specific, dawg, coll, [1], [2]) == set()


def test_specific_random(rng):
    for _ in range(80):
        docs = random_docs(rng, max_k=4)
        if len(docs) < 2:
            docs.append("ab")
        coll, dawg = build(docs, ALPHABET)
        ids = list(range(1, coll.k + 1))
        rng.shuffle(ids)
        cut = rng.randint(1, coll.k - 1)
        tset, rset = ids[:cut], ids[cut:]
        got = collected(enumerate_specific, dawg, coll, tset, rset)
        assert got == oracle_specific(docs, ALPHABET, tset, rset), (docs, tset, rset)


def test_specific_rejects_bad_doc_sets():
    coll, dawg = build(["ab", "ba"])
    with pytest.raises(ValueError):
        enumerate_specific(dawg, [], [1, 2])
    with pytest.raises(ValueError):
        enumerate_specific(dawg, [1], [1, 2])
    with pytest.raises(ValueError):
        enumerate_specific(dawg, [1], [])


def test_set_ops_example1():
    coll, dawg = build(["abaab", "aacbba"], "abcd")
    symdiff = collected(set_ops, dawg, coll, "symdiff")
    assert len(symdiff) == 12
    inter = collected(set_ops, dawg, coll, "intersection")
    union = collected(set_ops, dawg, coll, "union")
    assert inter == {"aaa", "d"}
    assert union == symdiff | inter


def test_set_ops_identical_documents():
    coll, dawg = build(["abcab", "abcab"], "abc")
    assert collected(set_ops, dawg, coll, "symdiff") == set()


def test_set_ops_random_pairs(rng):
    for _ in range(60):
        docs = [
            "".join(rng.choice("abc") for _ in range(rng.randint(0, 14)))
            for _ in range(2)
        ]
        coll, dawg = build(docs, ALPHABET)
        m1 = single_maws(docs[0], ALPHABET)
        m2 = single_maws(docs[1], ALPHABET)
        assert collected(set_ops, dawg, coll, "symdiff") == m1 ^ m2
        assert collected(set_ops, dawg, coll, "intersection") == m1 & m2
        assert collected(set_ops, dawg, coll, "union") == m1 | m2


def test_set_ops_requires_two_docs():
    coll, dawg = build(["abc"])
    with pytest.raises(ValueError):
        set_ops(dawg, "union")
    coll, dawg = build(["a", "b", "c"])
    with pytest.raises(ValueError):
        set_ops(dawg, "symdiff")


def test_set_ops_unknown_op():
    _, dawg = build(["ab", "ba"])
    with pytest.raises(ValueError):
        set_ops(dawg, "xor")
