"""LF, inverse phi and FL as move structures built from an RLBWT."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Optional

from .move import IntervalSequence, MoveResult, MoveStructure
from .rlbwt import Rlbwt


def build_i_lf(rlbwt: Rlbwt) -> IntervalSequence:
    """Pairs ``(l_x, LF(l_x))`` computed from run characters and lengths only."""
    lengths = rlbwt.lengths
    delta = run_order(rlbwt)
    lf_start = [0] * rlbwt.r
    acc = 1
    for x in delta:
        lf_start[x - 1] = acc
        acc += lengths[x - 1]
    return IntervalSequence(list(zip(rlbwt.starts, lf_start)), rlbwt.n)


def run_order(rlbwt: Rlbwt) -> list:
    """Permutation ``delta`` of run indexes sorted by ``(run char, run index)``."""
    chars = rlbwt.chars
    return sorted(range(1, rlbwt.r + 1), key=lambda x: (chars[x - 1], x))


def build_i_fl(i_lf: IntervalSequence) -> IntervalSequence:
    """Swap every pair of ``i_lf`` and re-sort by the new first coordinate."""
    return IntervalSequence(sorted((q, p) for p, q in i_lf.pairs), i_lf.n)


def build_i_sa(rlbwt: Rlbwt, move_lf: MoveStructure) -> IntervalSequence:
    """Pairs ``(u, phi^-1(u))`` for the sa-values at run ends.

    Walks LF from position 1 (whose sa-value is n) for n steps.  Step ``t``
    visits the position with sa-value ``n - t``; steps landing on run ends
    form ``U`` and steps landing on run starts form ``U'``.
    """
    n = rlbwt.n
    bounds = list(rlbwt.starts) + [n + 1]
    run_ends = {bounds[x + 1] - 1 for x in range(rlbwt.r)}
    run_starts = set(rlbwt.starts)

    ends, begins = [], []                    # U and U' as (step, position)
    pos, x = 1, 1
    for step in range(n):
        if pos in run_ends:
            ends.append((step, pos))
        if pos in run_starts:
            begins.append((step, pos))
        if step + 1 < n:
            pos, x = move_lf.move(pos, x)

    begins.sort(key=lambda sp: sp[1])
    begin_pos = [p for _, p in begins]
    pairs = []
    for step, pos in ends:
        right = pos + 1 if pos != n else 1
        partner_step = begins[bisect.bisect_left(begin_pos, right)][0]
        pairs.append((n - step, n - partner_step))
    pairs.sort()
    return IntervalSequence(pairs, n)


@dataclass
class LfPhiTables:
    """Move structures for LF, inverse phi and FL.

    ``move_sa`` or ``move_fl`` may be ``None`` when only part of the
    machinery was built or loaded.
    """

    n: int
    move_lf: MoveStructure
    move_sa: Optional[MoveStructure] = None
    move_fl: Optional[MoveStructure] = None
    delta: Optional[list] = None
    u: Optional[list] = None

    def lf(self, i: int, x: int) -> MoveResult:
        """``(LF(i), interval of LF(i))`` given the B(I_LF) interval ``x`` of ``i``."""
        return self.move_lf.move(i, x)

    def phi_inv(self, s: int, v: int) -> MoveResult:
        return self.move_sa.move(s, v)

    def predecessor_interval(self, s: int, v: int) -> int:
        """B(I_SA) interval holding ``s - 1`` given interval ``v`` holds ``s``."""
        if s < 2:
            raise ValueError("sa-value 1 has no predecessor")
        return v - 1 if self.move_sa.start(v) == s else v

    def fl(self, i: int, y: int) -> MoveResult:
        return self.move_fl.move(i, y)


def build_tables(rlbwt: Rlbwt, *, phi: bool = True, fl: bool = True) -> LfPhiTables:
    i_lf = build_i_lf(rlbwt)
    tables = LfPhiTables(rlbwt.n, MoveStructure.build(i_lf), delta=run_order(rlbwt))
    if phi:
        i_sa = build_i_sa(rlbwt, tables.move_lf)
        tables.u = i_sa.starts
        tables.move_sa = MoveStructure.build(i_sa)
    if fl:
        tables.move_fl = MoveStructure.build(build_i_fl(i_lf))
    return tables
