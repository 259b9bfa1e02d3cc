"""Run-length BWT index with constant-time move queries.

Count, locate, bookmarked extraction and dictionary prefix search over a
byte text, in space proportional to the number of BWT runs.
"""

from .bundle import IndexBundle, build_bundle, build_dictionary_bundle
from .extract import ExtractIndex, ExtractRangeError, build_extract_index, decompress
from .index import BalancedSaInterval, OptBwtrIndex, RankSelect, build_index, build_index_from_rlbwt
from .lfphi import LfPhiTables, build_i_fl, build_i_lf, build_i_sa, build_tables
from .move import (
    IntervalSequence,
    MoveResult,
    MoveStats,
    MoveStructure,
    balance,
    evaluate_bijection,
    fan_in,
    is_out_balanced,
    max_fan_in,
    validate,
)
from .prefix import CompactTrie, Dictionary, build_prefix_index
from .rlbwt import ReservedByteError, Rlbwt, Text, build_suffix_array, bwt, rlbwt_encode, rlbwt_of_text
from .serialize import (
    BadMagic,
    ChecksumMismatch,
    IndexFormatError,
    TruncatedSection,
    UnsupportedVersion,
    load,
    save,
)

__version__ = "0.1.0"
