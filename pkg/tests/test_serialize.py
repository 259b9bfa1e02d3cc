import io
import random
import struct
import zlib

import pytest

from optbwtr import serialize
from optbwtr.bundle import build_bundle, build_dictionary_bundle
from optbwtr.index import build_index
from optbwtr.prefix import Dictionary
from optbwtr.rlbwt import rlbwt_of_text
from optbwtr.serialize import (
    BadMagic,
    ChecksumMismatch,
    IndexFormatError,
    TruncatedSection,
    UnsupportedVersion,
    from_bytes,
    load,
    save,
    to_bytes,
)
from conftest import SAMPLE, random_patterns, random_text


def answers(bundle, patterns):
    idx = bundle.search
    return [(idx.count(p), idx.locate(p)) for p in patterns]


def test_header_layout():
    data = to_bytes(build_bundle(SAMPLE))
    magic, version, flags, n, r = struct.unpack_from("<4sIIQQ", data)
    assert (magic, version, flags, n, r) == (b"OBTR", 1, 3, 15, 4)
    assert struct.unpack("<I", data[-4:])[0] == zlib.crc32(data[:-4])


def test_round_trip_sample(tmp_path):
    bundle = build_bundle(SAMPLE, marks=[1, 4])
    path = tmp_path / "f.idx"
    written = save(bundle, path)
    assert written == path.stat().st_size
    back = load(path)
    assert back.stats() == bundle.stats()
    assert back.search.count(b"ab") == 5
    assert sorted(back.search.locate(b"bab")) == [4, 12]
    assert back.extract.extract(2, 11) == SAMPLE[3:]
    assert to_bytes(back) == to_bytes(bundle)


def test_stream_and_bytes_sources():
    bundle = build_bundle(SAMPLE)
    buf = io.BytesIO()
    save(bundle, buf)
    assert load(io.BytesIO(buf.getvalue())).stats() == bundle.stats()
    assert load(buf.getvalue()).stats() == bundle.stats()


def test_partial_bundles():
    rl = rlbwt_of_text(SAMPLE)
    only_rl = from_bytes(to_bytes(rl))
    assert only_rl.rlbwt == rl and only_rl.search is None and only_rl.extract is None
    only_search = from_bytes(to_bytes(build_index(SAMPLE)))
    assert only_search.extract is None and only_search.search.count(b"ab") == 5
    no_search = from_bytes(to_bytes(build_bundle(SAMPLE, search=False)))
    assert no_search.search is None and no_search.extract.extract(1, 14) == SAMPLE


def test_dictionary_round_trip():
    words = (b"romane", b"romanus", b"romulus", b"rubens", b"ruber", b"rom")
    bundle = build_dictionary_bundle(Dictionary(words))
    back = from_bytes(to_bytes(bundle))
    for p in (b"", b"r", b"rom", b"roma", b"rub", b"x"):
        assert back.trie.prefix_locate(p) == bundle.trie.prefix_locate(p)
    assert back.search.count(b"rom") == 4
    assert to_bytes(back) == to_bytes(bundle)


def test_deterministic():
    rng = random.Random(2)
    for _ in range(10):
        raw = random_text(rng, rng.randint(0, 300), 4)
        assert to_bytes(build_bundle(raw, marks=[1])) == to_bytes(build_bundle(raw, marks=[1]))


def test_replay_random_queries():
    rng = random.Random(8)
    for _ in range(20):
        raw = random_text(rng, rng.randint(1, 400), rng.choice((2, 4, 26)))
        bundle = build_bundle(raw)
        pats = random_patterns(rng, raw, 4, 20)
        back = from_bytes(to_bytes(bundle))
        assert answers(back, pats) == answers(bundle, pats)


def test_bad_magic():
    data = bytearray(to_bytes(build_bundle(SAMPLE)))
    data[:4] = b"NOPE"
    with pytest.raises(BadMagic):
        from_bytes(bytes(data))
    with pytest.raises(BadMagic):
        from_bytes(b"xy")


def test_unsupported_version():
    data = bytearray(to_bytes(build_bundle(SAMPLE)))
    struct.pack_into("<I", data, 4, 99)
    with pytest.raises(UnsupportedVersion):
        from_bytes(bytes(data))


def test_checksum_mismatch():
    data = to_bytes(build_bundle(SAMPLE))
    rng = random.Random(1)
    for _ in range(50):
        bad = bytearray(data)
        # flip a payload bit past the header so magic/version stay valid
        at = rng.randrange(28, len(bad) - 4)
        bad[at] ^= 1 << rng.randrange(8)
        # a flipped section length may surface as truncation first
        with pytest.raises(IndexFormatError):
            from_bytes(bytes(bad))
    bad = bytearray(data)
    bad[-1] ^= 0xFF
    with pytest.raises(ChecksumMismatch):
        from_bytes(bytes(bad))


def test_payload_flip_is_checksum_error():
    data = bytearray(to_bytes(build_bundle(SAMPLE)))
    # last byte of the final section payload, just before the trailer
    data[-5] ^= 0x40
    with pytest.raises(ChecksumMismatch):
        from_bytes(bytes(data))


def test_truncation():
    data = to_bytes(build_bundle(SAMPLE, marks=[1, 3]))
    for cut in range(4, len(data)):
        with pytest.raises(TruncatedSection):
            from_bytes(data[:cut])


def test_trailing_garbage():
    data = to_bytes(build_bundle(SAMPLE))
    with pytest.raises(IndexFormatError):
        from_bytes(data + b"\x00")


def test_rejects_unknown_objects():
    with pytest.raises(TypeError):
        serialize.to_bytes(42)
