"""Versioned, checksummed little-endian index files.

The byte layout is documented in ``docs/FORMAT.md``.
"""

from __future__ import annotations

import os
import struct
import zlib

import numpy as np

from .bundle import IndexBundle
from .extract import ExtractIndex
from .index import OptBwtrIndex, RankSelect
from .lfphi import LfPhiTables
from .move import MoveStructure
from .prefix import CompactTrie, TrieNode
from .rlbwt import Rlbwt

MAGIC = b"OBTR"
VERSION = 1

FLAG_SEARCH = 1
FLAG_EXTRACT = 2
FLAG_PREFIX = 4

TAG_RLBWT = 1
TAG_LF = 2
TAG_SA = 3
TAG_SEARCH = 4
TAG_EXTRACT = 5
TAG_TRIE = 6

_HEADER = struct.Struct("<4sIIQQ")
_SECTION = struct.Struct("<IQ")
_U64 = struct.Struct("<Q")


class IndexFormatError(ValueError):
    """Base class for unreadable index files."""


class BadMagic(IndexFormatError):
    pass


class UnsupportedVersion(IndexFormatError):
    pass


class TruncatedSection(IndexFormatError):
    pass


class ChecksumMismatch(IndexFormatError):
    pass


# -- encoding -----------------------------------------------------------------

class _Writer:
    def __init__(self):
        self.buf = bytearray()

    def u64(self, x: int):
        self.buf += _U64.pack(x)

    def vector(self, values):
        values = np.asarray(values, dtype="<u8")
        self.u64(len(values))
        self.buf += values.tobytes()

    def blob(self, data: bytes):
        self.u64(len(data))
        self.buf += data


def _move(w: _Writer, ms: MoveStructure):
    pairs = ms.pairs
    w.vector([p for p, _ in pairs])
    w.vector([q for _, q in pairs])
    w.vector(ms.d_index)


def _trie_nodes(trie: CompactTrie) -> list:
    flat = []
    for node in trie.nodes():
        flat += [node.first, node.mark, node.length, len(node.children), len(node.ids)]
        flat += node.ids
    return flat


def _sections(bundle: IndexBundle):
    rl = bundle.rlbwt
    w = _Writer()
    w.blob(rl.chars)
    w.vector(rl.starts)
    yield TAG_RLBWT, w.buf

    if bundle.search is not None:
        idx = bundle.search
        t = idx.tables
        w = _Writer()
        _move(w, t.move_lf)
        w.vector(t.delta or [])
        yield TAG_LF, w.buf
        w = _Writer()
        _move(w, t.move_sa)
        w.vector(t.u or [])
        yield TAG_SA, w.buf
        w = _Writer()
        w.blob(idx.l_first)
        w.u64(len(idx.rank_select.occ))
        for occ in idx.rank_select.occ:
            w.vector(occ)
        w.vector(idx.sa_plus)
        w.vector(idx.sa_plus_index)
        yield TAG_SEARCH, w.buf

    if bundle.extract is not None:
        ei = bundle.extract
        w = _Writer()
        _move(w, ei.move_fl)
        w.blob(ei.l_fl)
        w.vector(ei.v_map)
        w.vector(ei.marks)
        w.vector([h for h, _ in ei.g])
        w.vector([v for _, v in ei.g])
        yield TAG_EXTRACT, w.buf

    if bundle.trie is not None:
        w = _Writer()
        w.u64(bundle.trie.d)
        w.vector(_trie_nodes(bundle.trie))
        yield TAG_TRIE, w.buf


def _as_bundle(obj) -> IndexBundle:
    if isinstance(obj, IndexBundle):
        return obj
    if isinstance(obj, OptBwtrIndex):
        return IndexBundle(obj.rlbwt, search=obj)
    if isinstance(obj, CompactTrie):
        return IndexBundle(obj.rlbwt, extract=obj.extract_index, trie=obj)
    if isinstance(obj, Rlbwt):
        return IndexBundle(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_bytes(obj) -> bytes:
    bundle = _as_bundle(obj)
    if bundle.trie is not None and bundle.extract is not bundle.trie.extract_index:
        raise ValueError("a dictionary bundle must use the trie's extract index")
    flags = 0
    if bundle.search is not None:
        flags |= FLAG_SEARCH
    if bundle.extract is not None:
        flags |= FLAG_EXTRACT
    if bundle.trie is not None:
        flags |= FLAG_PREFIX
    out = bytearray(_HEADER.pack(MAGIC, VERSION, flags, bundle.n, bundle.r))
    for tag, payload in _sections(bundle):
        out += _SECTION.pack(tag, len(payload))
        out += payload
    out += struct.pack("<I", zlib.crc32(out))
    return bytes(out)


def save(obj, sink) -> int:
    """Write ``obj`` to a binary stream or path; returns the byte count."""
    data = to_bytes(obj)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "wb") as fh:
            fh.write(data)
    else:
        sink.write(data)
    return len(data)


# -- decoding -----------------------------------------------------------------

class _Reader:
    def __init__(self, data: memoryview, name: str):
        self.data = data
        self.pos = 0
        self.name = name

    def take(self, size: int) -> memoryview:
        if size > len(self.data) - self.pos:
            raise TruncatedSection(f"{self.name}: needs {size} bytes at offset {self.pos}, "
                                   f"section holds {len(self.data)}")
        out = self.data[self.pos:self.pos + size]
        self.pos += size
        return out

    def u64(self) -> int:
        return _U64.unpack(self.take(8))[0]

    def vector(self) -> list:
        count = self.u64()
        if count > (len(self.data) - self.pos) // 8:
            raise TruncatedSection(f"{self.name}: vector of {count} words overruns the section")
        return np.frombuffer(self.take(8 * count), dtype="<u8").tolist()

    def blob(self) -> bytes:
        return bytes(self.take(self.u64()))

    def done(self):
        if self.pos != len(self.data):
            raise IndexFormatError(f"{self.name}: {len(self.data) - self.pos} unread bytes")


def _read_move(rd: _Reader, n: int) -> MoveStructure:
    p, q, idx = rd.vector(), rd.vector(), rd.vector()
    if not (len(p) == len(q) == len(idx)):
        raise IndexFormatError(f"{rd.name}: move structure arrays differ in length")
    return MoveStructure(zip(p, q), n, idx)


def _read_trie(rd: _Reader, ei: ExtractIndex, rlbwt: Rlbwt) -> CompactTrie:
    d = rd.u64()
    flat = rd.vector()
    rd.done()
    pos = 0

    def node_at():
        nonlocal pos
        if pos + 5 > len(flat):
            raise IndexFormatError("trie: node record overruns the node table")
        first, mark, length, kids, nids = flat[pos:pos + 5]
        node = TrieNode(first, mark, length)
        node.ids = flat[pos + 5:pos + 5 + nids]
        if len(node.ids) != nids:
            raise IndexFormatError("trie: node ids overrun the node table")
        pos += 5 + nids
        return node, kids

    root, kids = node_at()
    stack = [(root, kids)]
    while stack:
        parent, remaining = stack[-1]
        if remaining == 0:
            stack.pop()
            continue
        stack[-1] = (parent, remaining - 1)
        child, kids = node_at()
        parent.children[child.first] = child
        stack.append((child, kids))
    if pos != len(flat):
        raise IndexFormatError("trie: trailing node data")
    return CompactTrie(root, ei, rlbwt, d)


def from_bytes(data: bytes) -> IndexBundle:
    view = memoryview(bytes(data))
    if len(view) < _HEADER.size:
        if bytes(view[:4]) != MAGIC[:len(view[:4])]:
            raise BadMagic("not an index file")
        raise TruncatedSection("header: file shorter than the fixed header")
    magic, version, flags, n, r = _HEADER.unpack(view[:_HEADER.size])
    if magic != MAGIC:
        raise BadMagic(f"bad magic {magic!r}")
    if version != VERSION:
        raise UnsupportedVersion(f"format version {version} (supported: {VERSION})")

    expected = [TAG_RLBWT]
    if flags & FLAG_SEARCH:
        expected += [TAG_LF, TAG_SA, TAG_SEARCH]
    if flags & FLAG_EXTRACT:
        expected.append(TAG_EXTRACT)
    if flags & FLAG_PREFIX:
        if not flags & FLAG_EXTRACT:
            raise IndexFormatError("prefix flag requires the extract section")
        expected.append(TAG_TRIE)

    # walk section headers first so truncation is reported before the checksum
    pos = _HEADER.size
    payloads = {}
    for tag in expected:
        if len(view) - pos < _SECTION.size:
            raise TruncatedSection(f"section {tag}: header missing")
        got, length = _SECTION.unpack(view[pos:pos + _SECTION.size])
        pos += _SECTION.size
        if got != tag:
            raise IndexFormatError(f"expected section {tag}, found {got}")
        if length > len(view) - pos:
            raise TruncatedSection(f"section {tag}: declares {length} bytes, "
                                   f"{len(view) - pos} remain")
        payloads[tag] = view[pos:pos + length]
        pos += length
    if len(view) - pos < 4:
        raise TruncatedSection("checksum trailer missing")
    if len(view) - pos > 4:
        raise IndexFormatError(f"{len(view) - pos - 4} bytes after the checksum")
    (crc,) = struct.unpack("<I", view[pos:pos + 4])
    if zlib.crc32(view[:pos]) != crc:
        raise ChecksumMismatch("payload checksum does not match")

    try:
        return _decode(payloads, flags, n, r)
    except (IndexFormatError, TruncatedSection):
        raise
    except (ValueError, IndexError) as exc:
        raise IndexFormatError(f"inconsistent index content: {exc}") from exc


def _decode(payloads, flags, n, r) -> IndexBundle:
    rd = _Reader(payloads[TAG_RLBWT], "rlbwt")
    rlbwt = Rlbwt(rd.blob(), tuple(rd.vector()), n)
    rd.done()
    if rlbwt.r != r:
        raise IndexFormatError(f"header says r={r}, RLBWT has {rlbwt.r} runs")
    bundle = IndexBundle(rlbwt)

    move_fl = None
    if flags & FLAG_EXTRACT:
        rd = _Reader(payloads[TAG_EXTRACT], "extract")
        move_fl = _read_move(rd, n)
        l_fl = rd.blob()
        v_map, marks, hs, vs = rd.vector(), rd.vector(), rd.vector(), rd.vector()
        rd.done()
        if len(hs) != len(marks) or len(vs) != len(marks):
            raise IndexFormatError("extract: bookmark arrays differ in length")
        bundle.extract = ExtractIndex(n, l_fl, move_fl, v_map, list(zip(hs, vs)), marks)

    if flags & FLAG_SEARCH:
        rd = _Reader(payloads[TAG_LF], "lf")
        move_lf = _read_move(rd, n)
        delta = rd.vector()
        rd.done()
        rd = _Reader(payloads[TAG_SA], "sa")
        move_sa = _read_move(rd, n)
        u = rd.vector()
        rd.done()
        rd = _Reader(payloads[TAG_SEARCH], "search")
        l_first = rd.blob()
        occ = [rd.vector() for _ in range(rd.u64())]
        sa_plus, sa_plus_index = rd.vector(), rd.vector()
        rd.done()
        tables = LfPhiTables(n, move_lf, move_sa, move_fl, delta or None, u or None)
        bundle.search = OptBwtrIndex(rlbwt, tables, l_first, RankSelect(l_first, occ),
                                     sa_plus, sa_plus_index)

    if flags & FLAG_PREFIX:
        bundle.trie = _read_trie(_Reader(payloads[TAG_TRIE], "trie"), bundle.extract, rlbwt)
    return bundle


def load(source) -> IndexBundle:
    """Read an index file from a binary stream or path."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return from_bytes(fh.read())
    if isinstance(source, (bytes, bytearray, memoryview)):
        return from_bytes(source)
    return from_bytes(source.read())


__all__ = [
    "BadMagic", "ChecksumMismatch", "IndexFormatError", "TruncatedSection",
    "UnsupportedVersion", "from_bytes", "load", "save", "to_bytes",
]
