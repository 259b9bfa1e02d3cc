import random

from optbwtr.oracle import (
    check_tables,
    oracle_build,
    oracle_occurrences,
    oracle_prefix,
    oracle_rank,
    oracle_sa_interval,
    oracle_select,
)
from conftest import SAMPLE, SAMPLE_TEXT, random_text


def test_sample_tables():
    t = oracle_build(SAMPLE_TEXT)
    check_tables(t)
    assert t.L == b"bbbbbbaaaaaa\x00aa"
    assert [t.lf[i] for i in (1, 7, 13, 14)] == [10, 2, 1, 8]
    assert [t.phi_inv[u] for u in (1, 4, 5, 9)] == [12, 15, 8, 1]
    assert t.lf[3] == 12 and t.lf[8] == 3
    assert t.phi_inv[3] == 14 and t.phi_inv[8] == 11


def test_sample_sa_intervals():
    t = oracle_build(SAMPLE_TEXT)
    assert oracle_sa_interval(t, b"ab") == (5, 9)
    assert oracle_sa_interval(t, b"bab") == (14, 15)
    assert oracle_sa_interval(t, b"zz") is None
    assert sorted(t.sa[14:16]) == oracle_occurrences(SAMPLE, b"bab") == [4, 12]


def test_occurrences_edge_cases():
    assert len(oracle_occurrences(SAMPLE, b"ab")) == 5
    assert oracle_occurrences(SAMPLE_TEXT, b"") == list(range(1, 16))
    assert oracle_occurrences(SAMPLE, SAMPLE) == [1]


def test_single_symbol():
    t = oracle_build(b"\x00")
    check_tables(t)
    assert t.sa[1:] == [1] and t.lf[1:] == [1] and t.phi_inv[1:] == [1]


def test_rank_select_and_prefix():
    s = b"bba\x00a"
    assert [oracle_rank(s, ord("a"), i) for i in range(6)] == [0, 0, 0, 1, 1, 2]
    assert oracle_select(s, ord("a"), 2) == 5
    assert oracle_select(s, ord("a"), 3) is None
    assert oracle_prefix([b"ab", b"ac", b"b"], b"a") == [1, 2]
    assert oracle_prefix([b"ab", b"ac"], b"") == [1, 2]


def test_identities_on_random_texts():
    rng = random.Random(5)
    for _ in range(500):
        raw = random_text(rng, rng.randint(0, 60), rng.choice((2, 4, 26)))
        t = oracle_build(raw + b"\x00")
        check_tables(t)
        for pat in (raw[:2], raw[-3:], b"ab"):
            iv = oracle_sa_interval(t, pat)
            occ = oracle_occurrences(raw, pat) if pat else list(range(1, t.n + 1))
            got = [] if iv is None else sorted(t.sa[iv[0]:iv[1] + 1])
            assert got == occ
