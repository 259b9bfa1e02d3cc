import random

import pytest
from hypothesis import given, strategies as st

from optbwtr.lfphi import build_i_fl, build_i_lf, build_i_sa, build_tables, run_order
from optbwtr.move import is_out_balanced, validate
from optbwtr.oracle import oracle_build
from optbwtr.rlbwt import Text, rlbwt_of_text
from conftest import SAMPLE, random_text

texts = st.binary(min_size=0, max_size=150).map(lambda b: bytes(97 + x % 3 for x in b))


def test_sample_lf_pairs():
    rl = rlbwt_of_text(SAMPLE)
    i_lf = build_i_lf(rl)
    assert list(i_lf.pairs) == [(1, 10), (7, 2), (13, 1), (14, 8)]
    assert run_order(rl) == [3, 2, 4, 1]
    t = build_tables(rl)
    assert t.move_lf(3) == 12
    assert t.move_lf(8) == 3


def test_sample_phi_pairs():
    rl = rlbwt_of_text(SAMPLE)
    t = build_tables(rl)
    i_sa = build_i_sa(rl, t.move_lf)
    assert list(i_sa.pairs) == [(1, 12), (4, 15), (5, 8), (9, 1)]
    assert t.u == [1, 4, 5, 9]
    assert t.move_sa(3) == 14
    assert t.move_sa(8) == 11


def test_sample_fl_pairs():
    i_fl = build_i_fl(build_i_lf(rlbwt_of_text(SAMPLE)))
    assert list(i_fl.pairs) == [(1, 13), (2, 7), (8, 14), (10, 1)]


def test_predecessor_interval():
    t = build_tables(rlbwt_of_text(SAMPLE))
    ms = t.move_sa
    for s in range(2, 16):
        v = ms.interval_of(s)
        assert t.predecessor_interval(s, v) == ms.interval_of(s - 1)
    with pytest.raises(ValueError):
        t.predecessor_interval(1, 1)


def test_single_symbol_text():
    t = build_tables(rlbwt_of_text(b""))
    assert t.move_lf.pairs == [(1, 1)]
    assert t.move_sa.pairs == [(1, 1)]
    assert t.move_fl.pairs == [(1, 1)]


@given(texts)
def test_tables_match_oracle(raw):
    text = Text.from_raw(raw)
    ref = oracle_build(text.data)
    rl = rlbwt_of_text(text)
    t = build_tables(rl)
    n = text.n
    for ms in (t.move_lf, t.move_sa, t.move_fl):
        seq = ms.sequence()
        assert validate(seq) is None
        assert is_out_balanced(seq)
        assert len(ms) <= 2 * rl.r
    for i in range(1, n + 1):
        assert t.move_lf(i) == ref.lf[i]
        assert t.move_fl(i) == ref.fl[i]
        assert t.move_sa(i) == ref.phi_inv[i]


def test_walks_with_move_queries():
    rng = random.Random(11)
    for _ in range(40):
        raw = random_text(rng, rng.randint(1, 400), rng.choice((2, 4, 26)))
        text = Text.from_raw(raw)
        ref = oracle_build(text.data)
        t = build_tables(rlbwt_of_text(text))
        # LF walk from the sentinel row enumerates the text backwards
        i, x = 1, 1
        for step in range(1, text.n):
            i, x = t.lf(i, x)
            assert ref.sa[i] == text.n - step
        # inverse phi walk from sa-value n visits suffixes in order
        s, v = text.n, t.move_sa.interval_of(text.n)
        for row in range(2, text.n + 1):
            s, v = t.phi_inv(s, v)
            assert s == ref.sa[row]
