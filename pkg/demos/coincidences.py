"""When does a basis element equal one from the other chirality? Tabulate for n = 3.

Run: python3 demos/coincidences.py
"""

from youngpoly import analysis
from youngpoly.core import weak_compositions

n = 3
for cid, (pred, source, target, kind) in sorted(analysis.CLASSIFIERS.items()):
    if kind != "weak":
        continue
    hits = [a for s in range(4) for a in weak_compositions(n, s) if pred(a, n)]
    confirmed = all(analysis.brute_force_member(source, a, target, n) is not None for a in hits)
    shown = " ".join("".join(map(str, a)) for a in hits if sum(a) == 3)
    print(f"{cid:11s} {source}->{target}: {len(hits)} of degree <= 3 (search agrees: {confirmed}); degree 3: {shown}")
