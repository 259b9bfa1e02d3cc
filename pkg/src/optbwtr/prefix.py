"""Prefix search over a string dictionary with a compact trie.

Edge labels are not stored: every edge keeps a bookmark into the
concatenation ``T_1 \\x01 T_2 \\x01 ... T_d \\x01 \\x00`` and its length, and
labels are streamed through an :class:`ExtractIndex` during traversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .extract import ExtractIndex, build_extract_index
from .lfphi import build_tables
from .rlbwt import ReservedByteError, Rlbwt, Text, rlbwt_of_text

TERMINATOR = 1


@dataclass(frozen=True)
class Dictionary:
    strings: tuple

    def __post_init__(self):
        strings = tuple(bytes(s.encode() if isinstance(s, str) else s) for s in self.strings)
        object.__setattr__(self, "strings", strings)
        if not strings:
            raise ValueError("dictionary must hold at least one string")
        offset = 0
        for k, s in enumerate(strings, start=1):
            if not s:
                raise ValueError(f"dictionary string {k} is empty")
            for pos, c in enumerate(s):
                if c <= TERMINATOR:
                    raise ReservedByteError(offset + pos, c)
            offset += len(s) + 1

    @classmethod
    def from_lines(cls, data: bytes) -> "Dictionary":
        """One string per ``\\n``-terminated line; a final newline is optional."""
        lines = bytes(data).split(b"\n")
        if lines and lines[-1] == b"":
            lines.pop()
        return cls(tuple(lines))

    @property
    def d(self) -> int:
        return len(self.strings)

    def __len__(self):
        return len(self.strings)

    def concatenated(self) -> bytes:
        return b"".join(s + bytes([TERMINATOR]) for s in self.strings)


class TrieNode:
    __slots__ = ("first", "mark", "length", "children", "ids",
                 "leaf_count", "leftmost", "rightmost", "next_leaf")

    def __init__(self, first=0, mark=0, length=0):
        self.first = first          # first byte of the incoming edge label
        self.mark = mark            # bookmark index of the label start
        self.length = length        # label length
        self.children = {}
        self.ids = []               # dictionary indexes ending here (leaves only)
        self.leaf_count = 0
        self.leftmost = None
        self.rightmost = None
        self.next_leaf = None

    @property
    def is_leaf(self) -> bool:
        return not self.children


class CompactTrie:
    """Compact trie plus the bookmark structure holding its edge labels."""

    def __init__(self, root: TrieNode, extract_index: ExtractIndex, rlbwt: Rlbwt, d: int):
        self.root = root
        self.extract_index = extract_index
        self.rlbwt = rlbwt
        self.d = d
        _link(root)

    def nodes(self):
        """Nodes in preorder, children by ascending first byte."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(list(node.children.values())))

    def edge_label(self, node: TrieNode) -> bytes:
        return self.extract_index.extract(node.mark, node.length)

    def _descend(self, pattern: bytes) -> Optional[TrieNode]:
        ei = self.extract_index
        node, k, m = self.root, 0, len(pattern)
        while k < m:
            child = node.children.get(pattern[k])
            if child is None:
                return None
            take = min(child.length, m - k)
            if ei.extract(child.mark, take) != pattern[k:k + take]:
                return None
            k += take
            node = child
        return node

    def prefix_locate(self, pattern) -> list:
        """Ascending 1-based indexes of the strings starting with ``pattern``."""
        node = self._descend(_as_query(pattern))
        if node is None:
            return []
        out = []
        leaf = node.leftmost
        while True:
            out.extend(leaf.ids)
            if leaf is node.rightmost:
                break
            leaf = leaf.next_leaf
        return sorted(out)

    def prefix_count(self, pattern) -> int:
        node = self._descend(_as_query(pattern))
        return 0 if node is None else node.leaf_count


def _as_query(pattern) -> bytes:
    if isinstance(pattern, str):
        pattern = pattern.encode()
    pattern = bytes(pattern)
    for pos, c in enumerate(pattern):
        if c <= TERMINATOR:
            raise ReservedByteError(pos, c)
    return pattern


def _link(root: TrieNode):
    """Fill leaf counts, leftmost/rightmost leaves and the leaf chain."""
    order = []
    stack = [root]
    while stack:
        node = stack.pop()
        order.append(node)
        stack.extend(reversed(list(node.children.values())))
    prev = None
    for node in order:
        if node.is_leaf:
            if prev is not None:
                prev.next_leaf = node
            prev = node
    for node in reversed(order):
        if node.is_leaf:
            node.leaf_count = len(node.ids)
            node.leftmost = node.rightmost = node
        else:
            kids = list(node.children.values())
            node.leaf_count = sum(c.leaf_count for c in kids)
            node.leftmost = kids[0].leftmost
            node.rightmost = kids[-1].rightmost


def build_prefix_index(dictionary: Dictionary) -> CompactTrie:
    if not isinstance(dictionary, Dictionary):
        dictionary = Dictionary(tuple(dictionary))
    terminated = [s + bytes([TERMINATOR]) for s in dictionary.strings]
    begin = []
    pos = 1
    for s in terminated:
        begin.append(pos)
        pos += len(s)

    root = TrieNode()
    edges = []                                # (node, label start position)
    order = sorted(range(len(terminated)), key=terminated.__getitem__)
    stack = [(root, order, 0)]
    while stack:
        node, ids, depth = stack.pop()
        t = 0
        while t < len(ids):
            c = terminated[ids[t]][depth]
            u = t
            while u < len(ids) and terminated[ids[u]][depth] == c:
                u += 1
            group = ids[t:u]
            t = u
            first, last = terminated[group[0]], terminated[group[-1]]
            stop = depth
            while stop < len(first) and stop < len(last) and first[stop] == last[stop]:
                stop += 1
            child = TrieNode(c, 0, stop - depth)
            node.children[c] = child
            edges.append((child, begin[group[0]] + depth))
            if stop == len(first):
                # the terminator makes equal strings the only way to run out
                child.ids = [k + 1 for k in group]
            else:
                stack.append((child, group, stop))

    text = Text.from_raw(dictionary.concatenated())
    rlbwt = rlbwt_of_text(text)
    marks = sorted({p for _, p in edges})
    mark_of = {p: j for j, p in enumerate(marks, start=1)}
    for child, p in edges:
        child.mark = mark_of[p]
    tables = build_tables(rlbwt, phi=False)
    ei = build_extract_index(rlbwt, tables, marks)
    return CompactTrie(root, ei, rlbwt, dictionary.d)
