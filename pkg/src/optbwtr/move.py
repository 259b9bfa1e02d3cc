"""Disjoint interval sequences and the move data structure.

A disjoint interval sequence ``(p_1, q_1), ..., (p_k, q_k)`` over ``[1, n]``
maps the input interval ``[p_i, p_{i+1} - 1]`` onto the output interval
``[q_i, q_i + d_i - 1]`` by a shift.  Balancing splits input intervals until
no output interval contains more than three input starts, which bounds the
linear scan of a move query by four intervals.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import NamedTuple, Optional

MAX_FAN_IN = 3


class MoveResult(NamedTuple):
    image: int
    interval: int


class Violation(NamedTuple):
    """First broken condition of a disjoint interval sequence (1, 2 or 3)."""

    condition: int
    message: str


@dataclass(frozen=True)
class IntervalSequence:
    """A sequence of ``(p, q)`` pairs over the domain ``[1, n]``."""

    pairs: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(p), int(q)) for p, q in self.pairs))

    def __len__(self):
        return len(self.pairs)

    @property
    def starts(self) -> list:
        return [p for p, _ in self.pairs]

    def lengths(self) -> list:
        p = self.starts + [self.n + 1]
        return [p[i + 1] - p[i] for i in range(len(self.pairs))]

    def interval_of(self, i: int) -> int:
        """1-based index of the input interval containing ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return bisect.bisect_right(self.starts, i)

    def __call__(self, i: int) -> int:
        x = self.interval_of(i)
        p, q = self.pairs[x - 1]
        return q + (i - p)


def validate(seq: IntervalSequence) -> Optional[Violation]:
    """Return ``None`` when ``seq`` is a disjoint interval sequence."""
    pairs, n = seq.pairs, seq.n
    if not pairs:
        return Violation(1, "sequence is empty")
    if pairs[0][0] != 1:
        return Violation(1, f"p_1 = {pairs[0][0]}, expected 1")
    for t in range(1, len(pairs)):
        if pairs[t][0] <= pairs[t - 1][0]:
            return Violation(1, f"p_{t + 1} = {pairs[t][0]} does not exceed p_{t} = {pairs[t - 1][0]}")
    if pairs[-1][0] > n:
        return Violation(1, f"p_k = {pairs[-1][0]} exceeds n = {n}")
    d = seq.lengths()
    order = sorted(range(len(pairs)), key=lambda t: pairs[t][1])
    if pairs[order[0]][1] != 1:
        return Violation(2, f"smallest output start is {pairs[order[0]][1]}, expected 1")
    for a, b in zip(order, order[1:]):
        expected = pairs[a][1] + d[a]
        if pairs[b][1] != expected:
            return Violation(
                3, f"output interval {b + 1} starts at {pairs[b][1]}, expected {expected}"
            )
    return None


def fan_in(seq: IntervalSequence, j: int) -> int:
    """Number of input starts inside the ``j``-th output interval."""
    if not 1 <= j <= len(seq):
        raise IndexError(f"output interval {j} outside [1, {len(seq)}]")
    starts = seq.starts
    q = seq.pairs[j - 1][1]
    d = seq.lengths()[j - 1]
    return bisect.bisect_right(starts, q + d - 1) - bisect.bisect_left(starts, q)


def max_fan_in(seq: IntervalSequence) -> int:
    """Largest fan-in over all output intervals."""
    starts = seq.starts
    worst = 0
    for (_, q), d in zip(seq.pairs, seq.lengths()):
        c = bisect.bisect_right(starts, q + d - 1) - bisect.bisect_left(starts, q)
        if c > worst:
            worst = c
    return worst


def is_out_balanced(seq: IntervalSequence) -> bool:
    return max_fan_in(seq) <= MAX_FAN_IN


def split_once(seq: IntervalSequence) -> Optional[IntervalSequence]:
    """One splitting step by direct definition, or ``None`` if already balanced.

    Quadratic; kept as a reference for :func:`balance`.
    """
    starts = seq.starts
    d = seq.lengths()
    for j, (p, q) in enumerate(seq.pairs):
        lo = bisect.bisect_left(starts, q)
        hi = bisect.bisect_right(starts, q + d[j] - 1)
        if hi - lo > MAX_FAN_IN:
            # largest width whose window holds exactly two input starts
            width = starts[lo + 2] - q
            pairs = list(seq.pairs)
            pairs.insert(j + 1, (p + width, q + width))
            return IntervalSequence(pairs, seq.n)
    return None


def balance(seq: IntervalSequence, trace: Optional[list] = None) -> IntervalSequence:
    """Split ``seq`` until it is out-balanced.

    Always splits the leftmost (by input order) pair whose output interval
    has at least four incoming edges.  If ``trace`` is given, one
    ``(p_j, width)`` tuple is appended per split.
    """
    n = seq.n
    starts = [p for p, _ in seq.pairs]       # sorted input starts
    target = dict(seq.pairs)                 # p -> q
    by_out = sorted((q, p) for p, q in seq.pairs)
    out_starts = [q for q, _ in by_out]      # sorted output starts
    out_owner = [p for _, p in by_out]

    def length(p):
        t = bisect.bisect_right(starts, p)
        nxt = starts[t] if t < len(starts) else n + 1
        return nxt - p

    def incoming(p):
        q = target[p]
        return bisect.bisect_right(starts, q + length(p) - 1) - bisect.bisect_left(starts, q)

    heavy = sorted(p for p in starts if incoming(p) > MAX_FAN_IN)
    while heavy:
        p = heavy.pop(0)
        q = target[p]
        lo = bisect.bisect_left(starts, q)
        width = starts[lo + 2] - q
        new_p, new_q = p + width, q + width

        bisect.insort(starts, new_p)
        target[new_p] = new_q
        t = bisect.bisect_left(out_starts, new_q)
        out_starts.insert(t, new_q)
        out_owner.insert(t, new_p)
        if trace is not None:
            trace.append((p, width))

        # the new input start is one more incoming edge for its output interval
        y = out_owner[bisect.bisect_right(out_starts, new_p) - 1]
        for cand in {p, new_p, y}:
            if incoming(cand) > MAX_FAN_IN:
                t = bisect.bisect_left(heavy, cand)
                if t == len(heavy) or heavy[t] != cand:
                    heavy.insert(t, cand)
    return IntervalSequence([(p, target[p]) for p in starts], n)


@dataclass
class MoveStats:
    """Counters filled by :meth:`MoveStructure.move` when attached."""

    queries: int = 0
    scanned: int = 0
    max_scan: int = 0

    def record(self, scan: int):
        self.queries += 1
        self.scanned += scan
        if scan > self.max_scan:
            self.max_scan = scan


class MoveStructure:
    """Constant-time move queries over a balanced interval sequence.

    Internally ``_p``, ``_q`` and ``_idx`` are padded so that interval ``x``
    lives at slot ``x``; ``_p[k + 1] == n + 1`` closes the last interval.
    """

    __slots__ = ("n", "_p", "_q", "_idx", "stats")

    def __init__(self, pairs, n: int, d_index=None):
        pairs = list(pairs)
        self.n = n
        self._p = [0] + [p for p, _ in pairs] + [n + 1]
        self._q = [0] + [q for _, q in pairs]
        if d_index is None:
            p = self._p
            d_index = [bisect.bisect_right(p, q) - 1 for _, q in pairs]
        self._idx = [0] + list(d_index)
        self.stats: Optional[MoveStats] = None

    @classmethod
    def build(cls, seq: IntervalSequence) -> "MoveStructure":
        """Balance ``seq`` and index the result."""
        return cls(balance(seq).pairs, seq.n)

    def __len__(self):
        return len(self._q) - 1

    @property
    def k(self) -> int:
        return len(self._q) - 1

    @property
    def pairs(self) -> list:
        return list(zip(self._p[1:-1], self._q[1:]))

    @property
    def d_index(self) -> list:
        return self._idx[1:]

    @property
    def starts(self) -> list:
        return self._p[1:-1]

    def sequence(self) -> IntervalSequence:
        return IntervalSequence(self.pairs, self.n)

    def start(self, x: int) -> int:
        return self._p[x]

    def end(self, x: int) -> int:
        return self._p[x + 1] - 1

    def interval_of(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return bisect.bisect_right(self._p, i) - 1

    def move(self, i: int, x: int) -> MoveResult:
        """Image of ``i`` and the interval holding it; ``x`` must contain ``i``."""
        p = self._p
        assert p[x] <= i < p[x + 1], f"interval {x} does not contain position {i}"
        image = self._q[x] + (i - p[x])
        b = y = self._idx[x]
        while p[y + 1] <= image:
            y += 1
        if self.stats is not None:
            self.stats.record(y - b + 1)
        return MoveResult(image, y)

    def __call__(self, i: int) -> int:
        x = self.interval_of(i)
        return self._q[x] + (i - self._p[x])

    def __eq__(self, other):
        if not isinstance(other, MoveStructure):
            return NotImplemented
        return (self.n, self._p, self._q, self._idx) == (other.n, other._p, other._q, other._idx)

    def __repr__(self):
        return f"MoveStructure(k={self.k}, n={self.n})"


def build_move_structure(seq: IntervalSequence) -> MoveStructure:
    return MoveStructure.build(seq)


def evaluate_bijection(f, i: int) -> int:
    """``f(i)`` for an interval sequence or move structure, via binary search."""
    return f(i)
