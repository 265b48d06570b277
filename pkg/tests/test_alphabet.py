import pytest

from genmaw import InternError, externalize, intern_collection


def test_example_collection_ranks():
    table, coll = intern_collection(["abaab", "aacbba"], "abcd")
    assert table.sigma == 4
    assert coll.k == 2
    assert coll.docs[0][-1] == 4
    assert coll.docs[1][-1] == 5
    assert coll.n == 5 + 6 + 2
    # rank order equals lexicographic order
    assert [table.backward[r] for r in range(4)] == ["a", "b", "c", "d"]


def test_single_symbol_doc():
    table, coll = intern_collection(["a"])
    assert table.sigma == 1
    assert coll.docs == [[0, 1]]


def test_three_docs_three_sentinels():
    table, coll = intern_collection(["abc", "bbac", "abca"])
    assert table.sigma == 3
    assert [doc[-1] for doc in coll.docs] == [3, 4, 5]


def test_forward_backward_inverse():
    table, _ = intern_collection(["cab"], "abcde")
    for rank, sym in enumerate(table.backward):
        assert table.forward[sym] == rank
    assert table.sentinel_rank(1) == table.sigma
    assert not table.is_sentinel(table.sigma - 1)
    assert table.is_sentinel(table.sigma)


def test_extra_alphabet_gets_ranks_even_if_unused():
    table, _ = intern_collection(["aa"], "abcd")
    assert table.sigma == 4
    assert "d" in table.forward


def test_duplicate_extra_alphabet_rejected():
    with pytest.raises(InternError):
        intern_collection(["a"], "aab")


def test_empty_collection_rejected():
    with pytest.raises(InternError):
        intern_collection([])


def test_empty_document_allowed():
    table, coll = intern_collection([""], "ab")
    assert coll.docs == [[2]]


def test_externalize_str_and_bytes():
    table, _ = intern_collection(["ba"])
    assert externalize(table, [0, 1]) == "ab"
    btable, _ = intern_collection([b"ba"])
    assert externalize(btable, [0, 1]) == bytes([ord("a"), ord("b")])
