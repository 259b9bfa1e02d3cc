"""Walk through the index on the small example text baababaabaabab.

Run with ``python3 demos/walkthrough.py``.
"""

from optbwtr import (
    IntervalSequence,
    balance,
    build_bundle,
    build_i_fl,
    build_i_lf,
    build_i_sa,
    build_tables,
    fan_in,
    rlbwt_of_text,
)

text = b"baababaabaabab"

# The BWT of text + sentinel collapses into four runs.
rl = rlbwt_of_text(text)
print("runs (char, start):", [(chr(c) if c else "$", s) for c, s in rl.runs])

# Each run start is paired with its LF image, which gives a bijection on [1, n].
i_lf = build_i_lf(rl)
print("I_LF:", list(i_lf.pairs))

# The same trick for inverse phi (sa-values at run ends) and for FL.
tables = build_tables(rl)
print("I_SA:", list(build_i_sa(rl, tables.move_lf).pairs))
print("I_FL:", list(build_i_fl(i_lf).pairs))

# Balancing: an output interval receiving four input starts gets split.
seq = IntervalSequence([(1, 10), (2, 11), (3, 12), (7, 1), (14, 8)], 15)
print("fan-in of output interval 4:", fan_in(seq, 4))
trace = []
print("balanced:", list(balance(seq, trace).pairs), "splits:", trace)

# Backward search with count and locate.
bundle = build_bundle(text, marks=[1, 4])
idx = bundle.search
for pattern in (b"ab", b"bab", b"aab", b"zz"):
    print(f"{pattern.decode():>4}: count={idx.count(pattern)} locate={sorted(idx.locate(pattern))}")

bsi = idx.search(b"bab")
print("balanced sa-interval of bab:", bsi)

# Extraction streams characters from the marked positions.
print("from mark 2 (position 4):", bundle.extract.extract(2, 6))
