"""Text ingestion, suffix array, BWT and run-length BWT.

Every position handed across a public boundary is 1-based.  Arrays that are
returned as Python or numpy sequences are still 0-indexed containers, so
``sa[0]`` holds ``SA[1]``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

import numpy as np

SENTINEL = 0


class ReservedByteError(ValueError):
    """Raised when raw input contains a byte reserved by the index."""

    def __init__(self, offset: int, byte: int):
        super().__init__(f"reserved byte 0x{byte:02x} at offset {offset}")
        self.offset = offset
        self.byte = byte


@dataclass(frozen=True)
class Text:
    """A byte string terminated by a unique sentinel byte 0.

    ``data`` includes the sentinel; ``n`` counts it.
    """

    data: bytes

    def __post_init__(self):
        data = bytes(self.data)
        object.__setattr__(self, "data", data)
        if not data or data[-1] != SENTINEL:
            raise ValueError("text must end with the sentinel byte 0")
        first = data.find(SENTINEL)
        if first != len(data) - 1:
            raise ReservedByteError(first, SENTINEL)

    @classmethod
    def from_raw(cls, raw: bytes | str) -> "Text":
        """Append the sentinel to ``raw``; a 0 byte inside ``raw`` is an error."""
        if isinstance(raw, str):
            raw = raw.encode()
        raw = bytes(raw)
        pos = raw.find(SENTINEL)
        if pos >= 0:
            raise ReservedByteError(pos, SENTINEL)
        return cls(raw + bytes([SENTINEL]))

    @property
    def n(self) -> int:
        return len(self.data)

    @property
    def sigma(self) -> int:
        return len(set(self.data))

    @property
    def raw(self) -> bytes:
        """The text without its sentinel."""
        return self.data[:-1]

    def __len__(self):
        return len(self.data)


def _as_text(text) -> Text:
    if isinstance(text, Text):
        return text
    return Text.from_raw(text)


def build_suffix_array(text: Text | bytes | str) -> np.ndarray:
    """Suffix array by prefix doubling.

    Returns an int64 array ``sa`` of length n with 1-based sa-values, so that
    ``sa[0] == n`` (the sentinel suffix is always smallest).
    """
    text = _as_text(text)
    n = text.n
    rank = np.frombuffer(text.data, dtype=np.uint8).astype(np.int64)
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1 = rank[sa]
        r2 = second[sa]
        changed = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([0], np.cumsum(changed)))
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            return sa + 1
        k *= 2


def bwt_from_sa(text: Text | bytes | str, sa) -> bytes:
    """L[i] = T[SA[i] - 1], wrapping to T[n] when SA[i] = 1."""
    text = _as_text(text)
    data = np.frombuffer(text.data, dtype=np.uint8)
    sa = np.asarray(sa, dtype=np.int64)
    if len(sa) != text.n:
        raise ValueError("suffix array length does not match text")
    # sa - 2 == -1 for the first suffix and numpy wraps it to T[n]
    return data[sa - 2].tobytes()


def bwt(text: Text | bytes | str) -> bytes:
    text = _as_text(text)
    return bwt_from_sa(text, build_suffix_array(text))


@dataclass(frozen=True)
class Rlbwt:
    """Run-length encoded BWT: ``r`` maximal runs ``(char, start)``.

    ``chars[x - 1]`` and ``starts[x - 1]`` describe run ``x``.
    """

    chars: bytes
    starts: tuple
    n: int
    _bounds: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "chars", bytes(self.chars))
        object.__setattr__(self, "starts", tuple(int(s) for s in self.starts))
        chars, starts, n = self.chars, self.starts, self.n
        if len(chars) != len(starts) or not chars:
            raise ValueError("runs must be non-empty with one start per character")
        if starts[0] != 1:
            raise ValueError("the first run must start at position 1")
        for a, b in zip(starts, starts[1:]):
            if b <= a:
                raise ValueError("run starts must strictly increase")
        if starts[-1] > n:
            raise ValueError("run start beyond the BWT length")
        for a, b in zip(chars, chars[1:]):
            if a == b:
                raise ValueError("adjacent runs must have distinct characters")
        sentinel_runs = [x for x, c in enumerate(chars) if c == SENTINEL]
        if len(sentinel_runs) != 1:
            raise ValueError("exactly one sentinel run is required")
        x = sentinel_runs[0]
        end = starts[x + 1] if x + 1 < len(starts) else n + 1
        if end - starts[x] != 1:
            raise ValueError("the sentinel run must have length 1")
        object.__setattr__(self, "_bounds", list(starts) + [n + 1])

    @classmethod
    def from_runs(cls, runs, n: int) -> "Rlbwt":
        chars = bytes(c for c, _ in runs)
        return cls(chars, tuple(s for _, s in runs), n)

    @property
    def r(self) -> int:
        return len(self.chars)

    @property
    def runs(self) -> list:
        return list(zip(self.chars, self.starts))

    def run_length(self, x: int) -> int:
        """Length of run ``x`` (1-based)."""
        return self._bounds[x] - self._bounds[x - 1]

    @property
    def lengths(self) -> list:
        b = self._bounds
        return [b[x + 1] - b[x] for x in range(self.r)]

    def run_end(self, x: int) -> int:
        return self._bounds[x] - 1

    def decode(self) -> bytes:
        return b"".join(bytes([c]) * ln for c, ln in zip(self.chars, self.lengths))

    def char_at(self, i: int) -> int:
        return self.chars[run_of_position(self, i) - 1]


def rlbwt_encode(L: bytes) -> Rlbwt:
    """Partition ``L`` into maximal runs."""
    L = bytes(L)
    if not L:
        raise ValueError("cannot encode an empty BWT")
    arr = np.frombuffer(L, dtype=np.uint8)
    cut = np.flatnonzero(arr[1:] != arr[:-1]) + 1
    starts = np.concatenate(([0], cut))
    return Rlbwt(arr[starts].tobytes(), tuple((starts + 1).tolist()), len(L))


def rlbwt_of_text(text: Text | bytes | str) -> Rlbwt:
    return rlbwt_encode(bwt(text))


def run_of_position(rlbwt: Rlbwt, i: int) -> int:
    """Index ``x`` of the run with ``l_x <= i < l_{x+1}``."""
    if not 1 <= i <= rlbwt.n:
        raise IndexError(f"position {i} outside [1, {rlbwt.n}]")
    return bisect.bisect_right(rlbwt.starts, i)
