"""Brute-force reference implementations used as ground truth in tests.

Nothing here imports from the rest of the package: suffixes are compared
as plain byte slices and every table comes straight from its definition.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OracleTables:
    """Full tables of a text; every list is padded so ``sa[i]`` is SA[i]."""

    text: bytes
    sa: list
    isa: list
    L: bytes
    F: bytes
    C: dict
    lf: list
    fl: list
    phi_inv: list

    @property
    def n(self) -> int:
        return len(self.text)


def oracle_suffix_array(text: bytes) -> list:
    """1-based sa-values in suffix order (unpadded)."""
    n = len(text)
    return sorted(range(1, n + 1), key=lambda i: text[i - 1:])


def oracle_build(text: bytes) -> OracleTables:
    """Tables for ``text``, which must already end with the 0 sentinel."""
    text = bytes(text)
    assert text and text[-1] == 0 and text.count(0) == 1
    n = len(text)
    sa = [0] + oracle_suffix_array(text)
    isa = [0] * (n + 1)
    for i in range(1, n + 1):
        isa[sa[i]] = i
    L = bytes(text[sa[i] - 2] if sa[i] > 1 else text[n - 1] for i in range(1, n + 1))
    F = bytes(text[sa[i] - 1] for i in range(1, n + 1))
    C = {}
    for c in sorted(set(text)):
        C[c] = sum(1 for x in text if x < c)
    # LF(i) = C[L[i]] + rank(L, L[i], i)
    lf = [0] * (n + 1)
    seen = {}
    for i in range(1, n + 1):
        c = L[i - 1]
        seen[c] = seen.get(c, 0) + 1
        lf[i] = C[c] + seen[c]
    fl = [0] * (n + 1)
    for i in range(1, n + 1):
        fl[lf[i]] = i
    phi_inv = [0] * (n + 1)
    for i in range(1, n):
        phi_inv[sa[i]] = sa[i + 1]
    phi_inv[sa[n]] = sa[1]
    return OracleTables(text, sa, isa, L, F, C, lf, fl, phi_inv)


def check_tables(t: OracleTables) -> None:
    """Assert the definitional identities between the oracle tables."""
    n = t.n
    for i in range(1, n + 1):
        prev = t.sa[i] - 1 if t.sa[i] > 1 else n
        assert t.sa[t.lf[i]] == prev
        assert t.fl[t.lf[i]] == i
    for i in range(1, n):
        assert t.phi_inv[t.sa[i]] == t.sa[i + 1]
        assert t.text[t.sa[i] - 1:] < t.text[t.sa[i + 1] - 1:]
    assert t.phi_inv[t.sa[n]] == t.sa[1]
    assert sorted(t.sa[1:]) == list(range(1, n + 1))


def oracle_occurrences(text: bytes, pattern: bytes) -> list:
    """Sorted 1-based starts of ``pattern`` in ``text`` by a naive scan.

    The empty pattern occurs at every position ``1..len(text)``.
    """
    text, pattern = bytes(text), bytes(pattern)
    m = len(pattern)
    if m == 0:
        return list(range(1, len(text) + 1))
    return [i + 1 for i in range(len(text) - m + 1) if text[i:i + m] == pattern]


def oracle_sa_interval(tables: OracleTables, pattern: bytes):
    """``(b, e)`` such that SA[b..e] are the suffixes prefixed by ``pattern``."""
    pattern = bytes(pattern)
    text, sa, n = tables.text, tables.sa, tables.n
    m = len(pattern)

    def head(i):
        return text[sa[i] - 1:sa[i] - 1 + m]

    lo, hi = 1, n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if head(mid) < pattern:
            lo = mid + 1
        else:
            hi = mid
    b = lo
    lo, hi = b, n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if head(mid) <= pattern:
            lo = mid + 1
        else:
            hi = mid
    e = lo - 1
    return (b, e) if b <= e else None


def oracle_rank(s: bytes, c: int, i: int) -> int:
    return sum(1 for x in s[:i] if x == c)


def oracle_select(s: bytes, c: int, i: int):
    seen = 0
    for t, x in enumerate(s, start=1):
        if x == c:
            seen += 1
            if seen == i:
                return t
    return None


def oracle_prefix(strings, pattern: bytes) -> list:
    """1-based indexes of the strings that start with ``pattern``."""
    pattern = bytes(pattern)
    return [k for k, s in enumerate(strings, start=1) if bytes(s)[:len(pattern)] == pattern]
