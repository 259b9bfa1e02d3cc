"""The set of structures one index file can hold."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .extract import ExtractIndex, build_extract_index
from .index import OptBwtrIndex, build_index_from_rlbwt
from .lfphi import build_tables
from .prefix import CompactTrie, Dictionary, build_prefix_index
from .rlbwt import Rlbwt, Text, rlbwt_of_text


@dataclass
class IndexBundle:
    """An RLBWT plus whichever query structures were built over it.

    With a ``trie`` the text is the terminated dictionary concatenation and
    ``extract`` is the trie's label store.
    """

    rlbwt: Rlbwt
    search: Optional[OptBwtrIndex] = None
    extract: Optional[ExtractIndex] = None
    trie: Optional[CompactTrie] = None

    @property
    def n(self) -> int:
        return self.rlbwt.n

    @property
    def r(self) -> int:
        return self.rlbwt.r

    def stats(self) -> dict:
        out = {"n": self.n, "r": self.r}
        if self.search is not None:
            out["lf_intervals"] = len(self.search.tables.move_lf)
            out["sa_intervals"] = len(self.search.tables.move_sa)
        if self.extract is not None:
            out["fl_intervals"] = len(self.extract.move_fl)
            out["marks"] = self.extract.b
        if self.trie is not None:
            out["dictionary_strings"] = self.trie.d
        return out


def build_bundle(text: Text | bytes, *, search: bool = True, marks=(1,)) -> IndexBundle:
    """Index a text for count/locate and extraction from ``marks``.

    Pass ``marks=None`` to skip the extraction structure.
    """
    rlbwt = rlbwt_of_text(text)
    tables = build_tables(rlbwt, phi=search, fl=marks is not None)
    bundle = IndexBundle(rlbwt)
    if search:
        bundle.search = build_index_from_rlbwt(rlbwt, tables)
    if marks is not None:
        bundle.extract = build_extract_index(rlbwt, tables, sorted(set(marks)))
    return bundle


def build_dictionary_bundle(dictionary: Dictionary, *, search: bool = True) -> IndexBundle:
    trie = build_prefix_index(dictionary)
    bundle = IndexBundle(trie.rlbwt, extract=trie.extract_index, trie=trie)
    if search:
        bundle.search = build_index_from_rlbwt(trie.rlbwt)
    return bundle
