"""Prefix search over a small word list.

Run with ``python3 demos/dictionary.py``.
"""

from optbwtr import Dictionary, build_prefix_index

words = ["romane", "romanus", "romulus", "rubens", "ruber", "rubicon", "rubicundus", "rom"]
trie = build_prefix_index(Dictionary(tuple(words)))

print("strings:", trie.d, " BWT runs:", trie.rlbwt.r, " marks:", trie.extract_index.b)


def show(node, depth=0):
    for child in node.children.values():
        label = trie.edge_label(child).replace(b"\x01", b"$").decode()
        ids = f"  -> {child.ids}" if child.is_leaf else ""
        print("  " * depth + label + ids)
        show(child, depth + 1)


# Edge labels are pulled out of the compressed text on demand.
show(trie.root)

for p in ("r", "rom", "roma", "rub", "rubi", "x", ""):
    hits = trie.prefix_locate(p)
    print(f"{p!r:>8}: {trie.prefix_count(p)} -> {[words[k - 1] for k in hits]}")
