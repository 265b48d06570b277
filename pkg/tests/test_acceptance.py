"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Criterion 7 builds inputs up to 8*10^5 symbols and takes the longest.
"""

import random
import time
from contextlib import contextmanager

from genmaw import (
    build_dawg,
    candidate_absent,
    candidate_present,
    collect_maws,
    decode_maw,
    enumerate_maw_prime,
    enumerate_maws,
    enumerate_specific,
    intern_collection,
    mask_from_string,
    oracle_endpos_partition,
    oracle_maw_prime,
    oracle_maws,
    oracle_specific,
    set_ops,
    single_maws,
)
from genmaw.maws import MergeStats

from conftest import ALPHABET, build, decoded_maws, random_docs
from test_dawg import assert_structure, dawg_partition
from test_predicates import CASE_TABLE, maw_pattern_from_definition


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} ({name}): FAIL")
        raise
    print(f"ACCEPTANCE {num} ({name}): PASS")


def collected_set(fn, dawg, coll, *args):
    refs = []
    fn(dawg, *args, emit=refs.append)
    return {decode_maw(r, coll) for r in refs}


def test_criterion_1_example1_exact():
    with criterion(1, "paper Example 1 reproduced exactly"):
        t0 = time.perf_counter()
        coll, dawg = build(["abaab", "aacbba"], "abcd")
        got10 = decoded_maws(dawg, coll, mask_from_string("10", 2))
        got01 = decoded_maws(dawg, coll, mask_from_string("01", 2))
        got11 = decoded_maws(dawg, coll, mask_from_string("11", 2))
        assert got10 == {"aaba", "bab", "bb", "c"} and len(got10) == 4
        assert got01 == {"ab", "baa", "bac", "bbb", "bc", "ca", "cba", "cc"}
        assert len(got01) == 8
        assert got11 == {"aaa", "d"} and len(got11) == 2
        assert time.perf_counter() - t0 < 1.0


def test_criterion_2_single_string_example_exact():
    with criterion(2, "single-string example reproduced exactly"):
        t0 = time.perf_counter()
        coll, dawg = build(["bbacccbaa"], "abcd")
        got = decoded_maws(dawg, coll, 1)
        assert got == {
            "aaa", "bbb", "cccc", "d", "ab", "ca", "bc",
            "aac", "acb", "cbb", "accb", "cbac", "bbaa",
        }
        assert time.perf_counter() - t0 < 1.0


def test_criterion_3_oracle_equivalence_1000_instances():
    with criterion(3, "oracle equivalence on >=1000 seeded instances"):
        t0 = time.perf_counter()
        rng = random.Random(20230815)
        for _ in range(1000):
            docs = random_docs(rng, max_k=4, max_len=20, max_sigma=4)
            coll, dawg = build(docs, ALPHABET)
            k = coll.k
            per_doc = [single_maws(d, ALPHABET) for d in docs]
            union = set().union(*per_doc)
            seen = set()
            for mask in range(1, 1 << k):
                got = decoded_maws(dawg, coll, mask)
                want = oracle_maws(docs, ALPHABET, mask)
                assert got == want, (docs, mask)
                assert not got & seen, (docs, mask)  # disjointness
                seen |= got
            assert seen == union, docs  # partition of the union
        assert time.perf_counter() - t0 < 120.0


def test_criterion_4_dawg_structural_correctness():
    with criterion(4, "DAWG structure and EndPos partition on >=300 instances"):
        rng = random.Random(4242)
        cases = [["abc", "bbac", "abca"]]
        while len(cases) < 301:
            docs = random_docs(rng, max_k=4, max_len=12, max_sigma=4)
            if sum(len(d) + 1 for d in docs) <= 60:
                cases.append(docs)
        for docs in cases:
            coll, dawg = build(docs, ALPHABET)
            assert dawg_partition(coll, dawg) == oracle_endpos_partition(coll)
            assert_structure(coll, dawg)  # suffix acceptance, sentinel rejection


def test_criterion_5_corollary_set_operations():
    with criterion(5, "set-operation presets match oracle set algebra"):
        rng = random.Random(515151)
        for _ in range(150):
            docs = [
                "".join(rng.choice(ALPHABET[: rng.randint(1, 4)]) for _ in range(rng.randint(0, 20)))
                for _ in range(2)
            ]
            coll, dawg = build(docs, ALPHABET)
            m1 = single_maws(docs[0], ALPHABET)
            m2 = single_maws(docs[1], ALPHABET)
            assert collected_set(set_ops, dawg, coll, "intersection") == m1 & m2
            assert collected_set(set_ops, dawg, coll, "symdiff") == m1 ^ m2
            assert collected_set(set_ops, dawg, coll, "union") == m1 | m2


def test_criterion_6_variants_match_oracles():
    with criterion(6, "MAW' and target-specific variants on >=300 instances"):
        rng = random.Random(606060)
        for trial in range(300):
            docs = random_docs(rng, max_k=4, max_len=12, max_sigma=4)
            coll, dawg = build(docs, ALPHABET)
            got = collected_set(enumerate_maw_prime, dawg, coll)
            assert got == oracle_maw_prime(docs, ALPHABET), docs
            if coll.k >= 2:
                ids = list(range(1, coll.k + 1))
                rng.shuffle(ids)
                cut = rng.randint(1, coll.k - 1)
                tset, rset = ids[:cut], ids[cut:]
                got = collected_set(enumerate_specific, dawg, coll, tset, rset)
                assert got == oracle_specific(docs, ALPHABET, tset, rset), (docs, tset, rset)


def _comparison_bound_holds(dawg, coll, mask, comparisons, slack=8):
    superset_total = 0
    for other in range(1, 1 << coll.k):
        if other & mask == mask:
            superset_total += enumerate_maws(dawg, other)
    return comparisons <= slack * (coll.n + superset_total)


def test_criterion_7_empirical_linearity():
    with criterion(7, "empirical linearity and charged comparison bound"):
        rng = random.Random(70707)
        mask = 0b01  # pattern "10": MAWs of document 1 only
        per_symbol = []
        for n in (200_000, 400_000, 800_000):
            half = n // 2
            docs = [
                "".join(rng.choice("abcd") for _ in range(half)) for _ in range(2)
            ]
            t0 = time.perf_counter()
            _, coll = intern_collection(docs, "abcd")
            dawg = build_dawg(coll)
            stats = MergeStats()
            enumerate_maws(dawg, mask, stats=stats)
            elapsed = time.perf_counter() - t0
            assert elapsed < 30.0, (n, elapsed)
            per_symbol.append(elapsed / coll.n)
            assert _comparison_bound_holds(dawg, coll, mask, stats.comparisons)
        assert max(per_symbol) / min(per_symbol) <= 2.5, per_symbol
        # the charged-comparison bound also holds across small instances,
        # for every mask
        for _ in range(60):
            docs = random_docs(rng, max_k=4, max_len=20, max_sigma=4)
            coll, dawg = build(docs, ALPHABET)
            for m in range(1, 1 << coll.k):
                stats = MergeStats()
                enumerate_maws(dawg, m, stats=stats)
                assert _comparison_bound_holds(dawg, coll, m, stats.comparisons)


def test_criterion_8_case_table_agreement():
    with criterion(8, "predicates reproduce the full k=2 case table"):
        for (lau, laub, lub), expected in CASE_TABLE.items():
            assert maw_pattern_from_definition(lau, laub, lub) == expected
            for mask in (0b01, 0b10, 0b11):
                if laub is None:
                    got = candidate_absent(lau, lub, mask)
                else:
                    got = candidate_present(lau, lub, laub, mask)
                assert got == (mask == expected)
