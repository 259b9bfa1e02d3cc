"""Bookmarked extraction and RLBWT decompression through the FL function."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .lfphi import LfPhiTables, build_tables
from .move import MoveStructure
from .rlbwt import Rlbwt, Text


class ExtractRangeError(ValueError):
    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


@dataclass
class ExtractIndex:
    """Streams ``T[i_j..]`` from any of ``b`` marked positions in O(1) per character.

    ``l_fl[y - 1]`` is the character of the ``y``-th F block (input interval
    ``y`` of I_FL); ``v_map[z - 1]`` is the I_FL interval enclosing the
    ``z``-th B(I_FL) interval; ``g[j - 1] = (h_j, v'(h_j))`` with
    ``SA[h_j] = marks[j - 1]``.
    """

    n: int
    l_fl: bytes
    move_fl: MoveStructure
    v_map: list
    g: list
    marks: list

    def __post_init__(self):
        # per B(I_FL) interval character, so one lookup per emitted byte
        self._block_char = [0] + [self.l_fl[v - 1] for v in self.v_map]

    @property
    def b(self) -> int:
        return len(self.marks)

    def max_length(self, j: int) -> int:
        return self.n - self.marks[j - 1] + 1

    def mark_index(self, position: int) -> int:
        """1-based mark index of a marked text position."""
        t = bisect.bisect_left(self.marks, position)
        if t == len(self.marks) or self.marks[t] != position:
            raise KeyError(f"position {position} is not a marked position")
        return t + 1

    def extract(self, j: int, d: int) -> bytes:
        """``T[i_j .. i_j + d - 1]``."""
        if not 1 <= j <= len(self.marks):
            raise ExtractRangeError(f"mark index {j} outside [1, {len(self.marks)}]", len(self.marks))
        limit = self.max_length(j)
        if not 1 <= d <= limit:
            raise ExtractRangeError(f"length {d} outside [1, {limit}] for mark {j}", limit)
        h, v = self.g[j - 1]
        chars = self._block_char
        out = bytearray(d)
        out[0] = chars[v]
        move = self.move_fl.move
        for t in range(1, d):
            h, v = move(h, v)
            out[t] = chars[v]
        return bytes(out)

    def iter_extract(self, j: int):
        """Characters of ``T[i_j..n]`` one at a time."""
        h, v = self.g[j - 1]
        chars = self._block_char
        yield chars[v]
        for _ in range(self.max_length(j) - 1):
            h, v = self.move_fl.move(h, v)
            yield chars[v]


def build_extract_index(rlbwt: Rlbwt, tables: LfPhiTables, marks) -> ExtractIndex:
    n = rlbwt.n
    marks = [int(m) for m in marks]
    for a, b in zip(marks, marks[1:]):
        if b <= a:
            raise ValueError("marks must be strictly increasing")
    if marks and not (1 <= marks[0] and marks[-1] <= n):
        raise ValueError(f"marks must lie in [1, {n}]")
    if tables.move_fl is None:
        raise ValueError("tables were built without the FL structure")

    delta = tables.delta
    l_fl = bytes(rlbwt.chars[x - 1] for x in delta)
    # I_FL input starts: LF images of run starts, i.e. prefix sums in delta order
    lengths = rlbwt.lengths
    lf_starts, acc = [], 1
    for x in delta:
        lf_starts.append(acc)
        acc += lengths[x - 1]
    move_fl = tables.move_fl
    v_map = [bisect.bisect_right(lf_starts, p) for p in move_fl.starts]

    # FL_t(1) holds sa-value t for t >= 1, and FL_n(1) = 1
    g = []
    pos, y = 1, 1
    t = 0
    for step in range(1, n + 1):
        if t == len(marks):
            break
        pos, y = move_fl.move(pos, y)
        if marks[t] == step:
            g.append((pos, y))
            t += 1
    return ExtractIndex(n, l_fl, move_fl, v_map, g, marks)


def decompress(rlbwt: Rlbwt) -> Text:
    """Recover the text left to right from its RLBWT."""
    tables = build_tables(rlbwt, phi=False)
    ei = build_extract_index(rlbwt, tables, [1])
    return Text(ei.extract(1, rlbwt.n))
