"""Backward search over the run-length BWT: count and locate."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .lfphi import LfPhiTables, build_tables
from .move import MoveStructure
from .rlbwt import SENTINEL, Rlbwt, Text, rlbwt_of_text


class BalancedSaInterval(NamedTuple):
    """The sa-interval ``[b, e]`` of a pattern plus its pre-resolved indexes.

    ``i``/``j`` are the B(I_LF) intervals holding ``b``/``e`` and ``v`` is
    the B(I_SA) interval holding ``sa_b = SA[b]``.
    """

    b: int
    e: int
    sa_b: int
    i: int
    j: int
    v: int

    @property
    def size(self) -> int:
        return self.e - self.b + 1


class Toehold(NamedTuple):
    i_hat: int
    j_hat: int
    b_hat: int
    e_hat: int


class RankSelect:
    """Rank and select over a short byte string.

    Occurrence lists are per distinct symbol; a 256-entry table maps a
    symbol to its list (or -1 when the symbol is absent).
    """

    def __init__(self, s: bytes, occurrences: Optional[list] = None):
        self.s = bytes(s)
        self.gamma = [-1] * 256
        symbols = sorted(set(self.s))
        for rank, c in enumerate(symbols):
            self.gamma[c] = rank
        if occurrences is None:
            occurrences = [[] for _ in symbols]
            for t, c in enumerate(self.s, start=1):
                occurrences[self.gamma[c]].append(t)
        elif len(occurrences) != len(symbols):
            raise ValueError("one occurrence list per distinct symbol is required")
        self.occ = occurrences

    def __len__(self):
        return len(self.s)

    def rank(self, c: int, i: int) -> int:
        """Occurrences of ``c`` in ``s[1..i]``."""
        g = self.gamma[c]
        if g < 0:
            return 0
        return bisect.bisect_right(self.occ[g], i)

    def select(self, c: int, i: int) -> Optional[int]:
        """Position of the ``i``-th ``c``, or ``None`` if there is none."""
        g = self.gamma[c]
        if g < 0 or i < 1 or i > len(self.occ[g]):
            return None
        return self.occ[g][i - 1]


def compute_l_first(rlbwt: Rlbwt, starts) -> bytes:
    """``L[p_t]`` for each interval start ``p_t``, by a merge with the runs."""
    out = bytearray()
    runs = rlbwt.starts
    s = 0
    for p in starts:
        while s + 1 < len(runs) and runs[s + 1] <= p:
            s += 1
        out.append(rlbwt.chars[s])
    return bytes(out)


def toehold(rs: RankSelect, move_lf: MoveStructure, bsi, c: int) -> Optional[Toehold]:
    """Steps 1-3 of a backward-search step: locate ``c`` inside ``L[b..e]``.

    Returns ``None`` when ``c`` does not occur in ``L[b..e]``.
    """
    b, e, _, i, j, _ = bsi
    before = rs.rank(c, i - 1)
    upto = rs.rank(c, j)
    if upto - before == 0:
        return None
    i_hat = rs.select(c, before + 1)
    j_hat = rs.select(c, upto)
    b_hat = b if i_hat == i else move_lf.start(i_hat)
    e_hat = e if j_hat == j else move_lf.end(j_hat)
    return Toehold(i_hat, j_hat, b_hat, e_hat)


def _as_pattern(pattern) -> bytes:
    if isinstance(pattern, str):
        pattern = pattern.encode()
    pattern = bytes(pattern)
    if SENTINEL in pattern:
        raise ValueError("pattern must not contain the sentinel byte 0")
    return pattern


@dataclass
class OptBwtrIndex:
    """Count/locate index of O(r) words over an RLBWT."""

    rlbwt: Rlbwt
    tables: LfPhiTables
    l_first: bytes
    rank_select: RankSelect
    sa_plus: list
    sa_plus_index: list

    @property
    def n(self) -> int:
        return self.rlbwt.n

    @property
    def r(self) -> int:
        return self.rlbwt.r

    def empty_pattern_interval(self) -> BalancedSaInterval:
        n = self.n
        return BalancedSaInterval(1, n, n, 1, len(self.tables.move_lf), len(self.tables.move_sa))

    def toehold(self, bsi: BalancedSaInterval, c: int) -> Optional[Toehold]:
        return toehold(self.rank_select, self.tables.move_lf, bsi, c)

    def bsr_query(self, bsi: BalancedSaInterval, c: int) -> Optional[BalancedSaInterval]:
        """Balanced sa-interval of ``cP`` from that of ``P``; ``None`` if absent."""
        if c == SENTINEL:
            raise ValueError("cannot extend a pattern by the sentinel")
        th = toehold(self.rank_select, self.tables.move_lf, bsi, c)
        if th is None:
            return None
        if th.i_hat == bsi.i:
            sa_hat, v_hat = bsi.sa_b, bsi.v
        else:
            sa_hat = self.sa_plus[th.i_hat - 1]
            v_hat = self.sa_plus_index[th.i_hat - 1]
        move_lf = self.tables.move_lf
        b2, i2 = move_lf.move(th.b_hat, th.i_hat)
        e2, j2 = move_lf.move(th.e_hat, th.j_hat)
        v2 = self.tables.predecessor_interval(sa_hat, v_hat)
        return BalancedSaInterval(b2, e2, sa_hat - 1, i2, j2, v2)

    def search(self, pattern) -> Optional[BalancedSaInterval]:
        """Balanced sa-interval of ``pattern`` (``None`` if it does not occur)."""
        pattern = _as_pattern(pattern)
        bsi = self.empty_pattern_interval()
        for c in reversed(pattern):
            bsi = self.bsr_query(bsi, c)
            if bsi is None:
                return None
        return bsi

    def count(self, pattern) -> int:
        bsi = self.search(pattern)
        return 0 if bsi is None else bsi.e - bsi.b + 1

    def locate(self, pattern) -> list:
        """Occurrence positions of ``pattern`` in suffix-array order."""
        bsi = self.search(pattern)
        if bsi is None:
            return []
        s, v = bsi.sa_b, bsi.v
        out = [s]
        move_sa = self.tables.move_sa
        for _ in range(bsi.e - bsi.b):
            s, v = move_sa.move(s, v)
            out.append(s)
        return out

    def stats(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "lf_intervals": len(self.tables.move_lf),
            "sa_intervals": len(self.tables.move_sa),
        }


def build_sa_plus(tables: LfPhiTables) -> tuple:
    """Sa-values at every B(I_LF) interval start, plus their B(I_SA) intervals.

    Walks LF from position 1: after ``t`` steps the current position holds
    sa-value ``n - t``.
    """
    n = tables.n
    move_lf, move_sa = tables.move_lf, tables.move_sa
    sa_plus = [0] * len(move_lf)
    pos, x = 1, 1
    for step in range(n):
        if pos == move_lf.start(x):
            sa_plus[x - 1] = n - step
        if step + 1 < n:
            pos, x = move_lf.move(pos, x)
    sa_plus_index = [move_sa.interval_of(s) for s in sa_plus]
    return sa_plus, sa_plus_index


def build_index_from_rlbwt(rlbwt: Rlbwt, tables: Optional[LfPhiTables] = None) -> OptBwtrIndex:
    if tables is None:
        tables = build_tables(rlbwt, fl=False)
    l_first = compute_l_first(rlbwt, tables.move_lf.starts)
    sa_plus, sa_plus_index = build_sa_plus(tables)
    return OptBwtrIndex(rlbwt, tables, l_first, RankSelect(l_first), sa_plus, sa_plus_index)


def build_index(text: Text | bytes | str) -> OptBwtrIndex:
    """Build the count/locate index for ``text`` (raw bytes get a sentinel)."""
    return build_index_from_rlbwt(rlbwt_of_text(text))
