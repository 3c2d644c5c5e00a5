"""Fillings of (weak) composition diagrams and their generating polynomials.

Every family is described by a :class:`FamilySpec` of rule flags, and one
backtracking engine enumerates any of them. A brute-force filter over all
assignments (:func:`enumerate_naive`) serves as the reference oracle.

Coordinates: rows are 0-indexed from the bottom, columns are 1-indexed with
column 0 reserved for the basement.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .polynomial import Polynomial


@dataclass(frozen=True)
class FamilySpec:
    name: str
    young: bool  # Young triples (I/II) instead of reverse triples (A/B)
    composition: bool  # shape is a composition with at most n parts
    rows: str  # "dec", "inc" or "const"
    basement: bool = False  # basement entry n+1-i in row i; diagram is D(rev(a))
    bound: str = None  # "le": entries in row i are <= i; "ge": >= i
    first_col: str = None  # "eq": first entry equals row index; "strict": increases up
    distinct_cols: bool = False
    triples: bool = False
    lower_less: bool = False  # every entry of a lower row < every entry of a higher row


_SPECS = [
    FamilySpec("RCT", False, True, "dec", first_col="strict", triples=True),
    FamilySpec("YCT", True, True, "inc", first_col="strict", triples=True),
    FamilySpec("FCT", False, True, "dec", lower_less=True),
    FamilySpec("YFCT", True, True, "inc", lower_less=True),
    FamilySpec("MCT", False, True, "const", lower_less=True),
    FamilySpec("YMCT", True, True, "const", lower_less=True),
    FamilySpec("KSSF", False, False, "dec", basement=True, distinct_cols=True, triples=True),
    FamilySpec("YKSSF", True, False, "inc", basement=True, distinct_cols=True, triples=True),
    FamilySpec("ASSF", False, False, "dec", first_col="eq", distinct_cols=True, triples=True),
    FamilySpec("YASSF", True, False, "inc", first_col="eq", distinct_cols=True, triples=True),
    FamilySpec(
        "QF", False, False, "dec", bound="le", first_col="strict", distinct_cols=True, triples=True
    ),
    FamilySpec(
        "YQF", True, False, "inc", bound="ge", first_col="strict", distinct_cols=True, triples=True
    ),
    FamilySpec("FF", False, False, "dec", bound="le", lower_less=True),
    FamilySpec("YFF", True, False, "inc", bound="ge", lower_less=True),
    FamilySpec("MF", False, False, "const", bound="le", lower_less=True),
    FamilySpec("YMF", True, False, "const", bound="ge", lower_less=True),
    FamilySpec(
        "LF", False, False, "dec", first_col="eq", distinct_cols=True, triples=True, lower_less=True
    ),
    FamilySpec(
        "YLF", True, False, "inc", first_col="eq", distinct_cols=True, triples=True, lower_less=True
    ),
]

FAMILIES = {s.name: s for s in _SPECS}

# Young family -> reverse family it is the theta-image of.
DUAL_PAIRS = {
    "YKSSF": "KSSF",
    "YASSF": "ASSF",
    "YQF": "QF",
    "YFF": "FF",
    "YMF": "MF",
    "YLF": "LF",
    "YCT": "RCT",
}


def family(name):
    try:
        return FAMILIES[name.upper()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}") from None


@dataclass(frozen=True, order=True)
class Filling:
    """Entries of a diagram; ``rows[i]`` is row i+1 read left to right."""

    rows: tuple
    basement: tuple = None

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    def weight(self, n):
        w = [0] * n
        for r in self.rows:
            for x in r:
                w[x - 1] += 1
        return tuple(w)

    def value(self, i, k):
        return self.basement[i] if k == 0 else self.rows[i][k - 1]

    def to_json_obj(self):
        obj = {
            "shape": list(self.shape),
            "basement": self.basement is not None,
            "rows": [list(r) for r in self.rows],
        }
        if self.basement is not None:
            obj["basement_entries"] = list(self.basement)
        return obj

    def to_json(self):
        return json.dumps(self.to_json_obj())

    def to_ascii(self):
        """Top row first; basement entries are bracketed."""
        lines = []
        for i in range(len(self.rows) - 1, -1, -1):
            cells = [str(x) for x in self.rows[i]]
            if self.basement is not None:
                cells.insert(0, f"[{self.basement[i]}]")
            lines.append(" ".join(cells))
        return "\n".join(lines)


# -- geometry -----------------------------------------------------------------


def diagram_triples(lengths, young, with_basement):
    """All triples (x, y, z) of cells for the given row lengths.

    Reverse triples: type A when the lower row is weakly longer, type B when the
    higher row is strictly longer. Young triples: type I when the higher row is
    weakly longer, type II when the lower row is strictly longer.
    """
    k0 = 0 if with_basement else 1
    out = []
    m = len(lengths)
    for i in range(m):
        for j in range(i + 1, m):
            Li, Lj = lengths[i], lengths[j]
            if not young:
                if Li >= Lj:  # A: z x in row i, y above x in row j
                    for k in range(k0, Lj):
                        out.append(((i, k + 1), (j, k + 1), (i, k)))
                else:  # B: z x in row j, y below z in row i
                    for k in range(k0, Li + 1):
                        out.append(((j, k + 1), (i, k), (j, k)))
            else:
                if Lj >= Li:  # I: z x in row j, y below x in row i
                    for k in range(k0, Li):
                        out.append(((j, k + 1), (i, k + 1), (j, k)))
                else:  # II: z x in row i, y above z in row j
                    for k in range(k0, Lj + 1):
                        out.append(((i, k + 1), (j, k), (i, k)))
    return out


def is_inversion(x, y, z, young):
    """Reverse inversion: not z >= y >= x. Young inversion: not x >= y >= z."""
    if young:
        return not (x >= y >= z)
    return not (z >= y >= x)


def triple_ok(kind, x, y, z):
    """Inversion test by triple type name: A, B (reverse) or I, II (Young)."""
    kind = kind.upper()
    if kind not in ("A", "B", "I", "II"):
        raise ValueError(f"unknown triple type {kind}")
    return is_inversion(x, y, z, kind in ("I", "II"))


def _diagram(spec, shape, n):
    shape = tuple(shape)
    if any(x < 0 for x in shape):
        raise ValueError(f"negative part in {shape}")
    if spec.composition:
        if any(x == 0 for x in shape):
            raise ValueError(f"{spec.name} needs a composition, got {shape}")
        if len(shape) > n:
            raise ValueError(f"{shape} has more than n={n} parts")
        return shape, None
    if len(shape) != n:
        raise ValueError(f"{spec.name} needs a weak composition of length n={n}, got {shape}")
    if spec.basement:
        return shape[::-1], tuple(n - i for i in range(n))
    return shape, None


# -- validity -----------------------------------------------------------------


def satisfies(spec, T, n):
    """Check every rule of ``spec`` on the complete filling T (reference check)."""
    rows, base = T.rows, T.basement
    if any(not 1 <= x <= n for r in rows for x in r):
        return False
    for i, r in enumerate(rows):
        seq = ([base[i]] if base is not None else []) + list(r)
        for a, b in zip(seq, seq[1:]):
            if spec.rows == "dec" and b > a:
                return False
            if spec.rows == "inc" and b < a:
                return False
            if spec.rows == "const" and b != a:
                return False
        if spec.bound == "le" and any(x > i + 1 for x in r):
            return False
        if spec.bound == "ge" and any(x < i + 1 for x in r):
            return False
        if spec.first_col == "eq" and r and r[0] != i + 1:
            return False
    if spec.first_col == "strict":
        firsts = [r[0] for r in rows if r]
        if any(a >= b for a, b in zip(firsts, firsts[1:])):
            return False
    if spec.distinct_cols:
        width = max((len(r) for r in rows), default=0)
        for k in range(width):
            c = [r[k] for r in rows if len(r) > k]
            if len(set(c)) != len(c):
                return False
    if spec.lower_less:
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                if rows[i] and rows[j] and max(rows[i]) >= min(rows[j]):
                    return False
    if spec.triples:
        for x, y, z in diagram_triples(T.shape, spec.young, base is not None):
            if not is_inversion(T.value(*x), T.value(*y), T.value(*z), spec.young):
                return False
    return True


def enumerate_naive(name, shape, n):
    """Generate-and-filter over all n^|D| assignments (reference oracle)."""
    spec = family(name)
    lengths, base = _diagram(spec, shape, n)
    size = sum(lengths)
    out = []
    for values in product(range(1, n + 1), repeat=size):
        rows, p = [], 0
        for L in lengths:
            rows.append(tuple(values[p:p + L]))
            p += L
        T = Filling(tuple(rows), base)
        if satisfies(spec, T, n):
            out.append(T)
    return sorted(out)


# -- backtracking engine ------------------------------------------------------


@lru_cache(maxsize=None)
def _enumerate(name, shape, n):
    spec = family(name)
    lengths, base = _diagram(spec, shape, n)
    m = len(lengths)
    width = max(lengths, default=0)
    order = [(i, k) for k in range(1, width + 1) for i in range(m) if lengths[i] >= k]
    pos = {c: t for t, c in enumerate(order)}
    checks = [[] for _ in order]
    if spec.triples:
        for tri in diagram_triples(lengths, spec.young, base is not None):
            last = max(pos.get(c, -1) for c in tri)
            checks[last].append(tri)
    grid = [[None] * (L + 1) for L in lengths]
    if base is not None:
        for i in range(m):
            grid[i][0] = base[i]
    filled = []
    out = []

    def candidates(i, k):
        lo, hi = 1, n
        if spec.bound == "le":
            hi = min(hi, i + 1)
        elif spec.bound == "ge":
            lo = max(lo, i + 1)
        left = grid[i][k - 1] if (k > 1 or base is not None) else None
        if left is not None:
            if spec.rows == "dec":
                hi = min(hi, left)
            elif spec.rows == "inc":
                lo = max(lo, left)
            else:
                lo, hi = max(lo, left), min(hi, left)
        if k == 1 and spec.first_col == "eq":
            lo, hi = max(lo, i + 1), min(hi, i + 1)
        if k == 1 and spec.first_col == "strict":
            below = [grid[i2][1] for i2 in range(i) if lengths[i2] >= 1]
            if below:
                lo = max(lo, below[-1] + 1)
        return range(lo, hi + 1)

    def ok(i, k, v, t):
        if spec.distinct_cols:
            if any(grid[i2][k] == v for i2 in range(i) if lengths[i2] >= k):
                return False
        if spec.lower_less:
            for i2, k2 in filled:
                if i2 < i and grid[i2][k2] >= v:
                    return False
                if i2 > i and grid[i2][k2] <= v:
                    return False
        for x, y, z in checks[t]:
            if not is_inversion(grid[x[0]][x[1]], grid[y[0]][y[1]], grid[z[0]][z[1]], spec.young):
                return False
        return True

    def rec(t):
        if t == len(order):
            out.append(Filling(tuple(tuple(r[1:]) for r in grid), base))
            return
        i, k = order[t]
        for v in candidates(i, k):
            grid[i][k] = v
            if ok(i, k, v, t):
                filled.append((i, k))
                rec(t + 1)
                filled.pop()
            grid[i][k] = None

    rec(0)
    return tuple(sorted(out))


def enumerate_family(name, shape, n):
    """All fillings of the named family for ``shape`` with entries in 1..n, sorted."""
    return list(_enumerate(family(name).name, tuple(shape), n))


@lru_cache(maxsize=None)
def gen_poly(name, shape, n):
    """Weight generating polynomial of the family (basement entries excluded)."""
    return Polynomial.from_weights(n, (T.weight(n) for T in _enumerate(family(name).name, tuple(shape), n)))


def theta(T, n):
    """Reverse the row order and replace every entry j (basement too) by n+1-j."""
    rows = tuple(tuple(n + 1 - x for x in r) for r in reversed(T.rows))
    base = None if T.basement is None else tuple(n + 1 - x for x in reversed(T.basement))
    return Filling(rows, base)
