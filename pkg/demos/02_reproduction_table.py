"""
Reproduction table for the applications
=======================================

Every numeric claim about the confluent, Bessel and two-parameter families,
next to the value the library computes.
"""

from wrightfn.sweeps import format_table, reproduction_rows, sharpness_rows


def fmt(v):
    if isinstance(v, tuple):
        return "[" + ", ".join(fmt(x) for x in v) + "]"
    return f"{v:.6g}"


rows = [[claim, fmt(stated), fmt(ours), "yes" if ok else "NO"]
        for claim, stated, ours, ok in reproduction_rows()]
print(format_table(["claim", "stated", "computed", "agrees"], rows))

# The new Bessel and two-parameter starlike bounds improve on earlier ones.
print()
rows = [[c, fmt(new), fmt(old), str(sharper)] for c, new, old, sharper in sharpness_rows()]
print(format_table(["claim", "new", "earlier", "sharper"], rows))
