"""Young Schubert polynomials from pipe dreams, operators and reduced factorizations.

Run: python3 demos/schubert_tour.py
"""

from youngpoly import analysis, crystals, operators, schubert
from youngpoly.core import format_perm
from youngpoly.polynomial import to_text

w = (4, 3, 5, 1, 2)
ypds = schubert.enumerate_ypd(w)
print(f"w = {format_perm(w)} has {len(ypds)} Young pipe dreams; the first one:")
print(ypds[0].to_ascii())
print("weight", ypds[0].weight())

p = schubert.yschubert_pd(w)
print("\nysch =", to_text(p))
print("divided differences agree:", p == operators.yschubert_ops(w))
print("Young-cutoff factorizations agree:", p == crystals.ysch_via_rfyc(w))

print("\nExpansion into Young keys:", analysis.expand(p, "ykey"))

v = (2, 1, 5, 3, 4)
print(f"\nReduced factorizations of {format_perm(v)} with the Young cutoff:")
for r in crystals.rfyc(v):
    print(" ", crystals.format_rf(r), "weight", crystals.rf_weight(r, len(v)))
