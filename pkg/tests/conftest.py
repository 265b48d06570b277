import random

import pytest

from genmaw import build_dawg, collect_maws, decode_maw, intern_collection

ALPHABET = "abcd"


def build(docs, alphabet=None):
    _, coll = intern_collection(docs, alphabet)
    return coll, build_dawg(coll)


def decoded_maws(dawg, coll, mask):
    return {decode_maw(r, coll) for r in collect_maws(dawg, mask)}


def random_docs(rng: random.Random, max_k=4, max_len=12, max_sigma=4):
    k = rng.randint(1, max_k)
    sigma = rng.randint(1, max_sigma)
    sub = ALPHABET[:sigma]
    return [
        "".join(rng.choice(sub) for _ in range(rng.randint(0, max_len)))
        for _ in range(k)
    ]


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
