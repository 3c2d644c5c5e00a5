"""Semistandard Young tableaux, reading words, insertion, Knuth classes and keys.

Tableaux use French notation: ``rows[0]`` is the bottom row. Entries weakly
increase along rows and strictly increase up columns.
"""

from collections import deque
from functools import lru_cache

from .core import conjugate


class Tableau:
    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows if len(r))

    @classmethod
    def from_columns(cls, columns):
        """Build from columns, each listed bottom to top."""
        height = max((len(c) for c in columns), default=0)
        rows = [[c[i] for c in columns if len(c) > i] for i in range(height)]
        return cls(rows)

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    def size(self):
        return sum(self.shape)

    def columns(self):
        if not self.rows:
            return []
        return [
            tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))
        ]

    def entries(self):
        return [x for r in self.rows for x in r]

    def weight(self, n):
        w = [0] * n
        for x in self.entries():
            w[x - 1] += 1
        return tuple(w)

    def is_ssyt(self):
        sh = self.shape
        if any(sh[i] < sh[i + 1] for i in range(len(sh) - 1)):
            return False
        if any(r[j] > r[j + 1] for r in self.rows for j in range(len(r) - 1)):
            return False
        return all(c[i] < c[i + 1] for c in self.columns() for i in range(len(c) - 1))

    def is_key(self):
        cols = [set(c) for c in self.columns()]
        return self.is_ssyt() and all(cols[j + 1] <= cols[j] for j in range(len(cols) - 1))

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __lt__(self, other):
        return self.rows < other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    def to_ascii(self):
        """Rows printed top to bottom, as in French-notation figures."""
        return "\n".join(" ".join(map(str, r)) for r in reversed(self.rows))


# -- enumeration --------------------------------------------------------------


def ssyt(shape, n):
    """All SSYT of partition ``shape`` with entries in 1..n, sorted."""
    shape = tuple(x for x in shape if x)
    cells = [(i, j) for i, L in enumerate(shape) for j in range(L)]
    rows = [[0] * L for L in shape]
    out = []

    def rec(k):
        if k == len(cells):
            out.append(Tableau(rows))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, n + 1):
            rows[i][j] = v
            rec(k + 1)

    rec(0)
    return sorted(out)


def schur(lam, n):
    """Schur polynomial s_lambda(x_1..x_n) as the SSYT weight generating function."""
    from .polynomial import Polynomial

    return Polynomial.from_weights(n, (T.weight(n) for T in ssyt(lam, n)))


def key_tableau(a):
    """The unique key of weight a: column j holds {i : a_i >= j}."""
    height = max(a, default=0)
    columns = [[i + 1 for i, x in enumerate(a) if x >= j] for j in range(1, height + 1)]
    return Tableau.from_columns(columns)


def std(T):
    """Standardize: relabel 1..N by value, ties broken left to right."""
    cells = sorted(
        ((x, j, i) for i, r in enumerate(T.rows) for j, x in enumerate(r))
    )
    rows = [list(r) for r in T.rows]
    for label, (_, j, i) in enumerate(cells, 1):
        rows[i][j] = label
    return Tableau(rows)


# -- reading words ------------------------------------------------------------


def col(T):
    """Column reading word: read each column top to bottom, columns left to right."""
    return tuple(x for c in T.columns() for x in reversed(c))


def col_R(T):
    """Right-to-left column reading word (each column still read top to bottom)."""
    return tuple(x for c in reversed(T.columns()) for x in reversed(c))


def flip_word(v, n):
    return tuple(n + 1 - x for x in v)


def frev_word(v, n):
    """Reverse the word and replace each letter x by n+1-x."""
    return tuple(n + 1 - x for x in reversed(v))


def frev_key(T, n):
    """Flip every column set of a key: column entries x become n+1-x."""
    if not T.is_key():
        raise ValueError("frev_key needs a key tableau")
    return Tableau.from_columns([sorted(n + 1 - x for x in c) for c in T.columns()])


# -- insertion ----------------------------------------------------------------


def schensted_insert(word, recording=False):
    """Row insertion of the word left to right (bump the smallest entry > x)."""
    P, Q = [], []
    for step, x in enumerate(word, 1):
        i = 0
        while True:
            if i == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[i]
            k = next((k for k, y in enumerate(row) if y > x), None)
            if k is None:
                row.append(x)
                Q[i].append(step)
                break
            row[k], x = x, row[k]
            i += 1
    return (Tableau(P), Tableau(Q)) if recording else Tableau(P)


def column_insert(word):
    """Column insertion of the word read right to left.

    Each letter enters the first column, replacing the smallest entry >= it;
    the displaced entry moves on to the next column. A letter larger than every
    entry of a column sits on top of it. Returns (P, Q) with Q recording the
    order in which boxes appear.
    """
    cols, qcols = [], []
    for step, x in enumerate(reversed(word), 1):
        j = 0
        while True:
            if j == len(cols):
                cols.append([x])
                qcols.append([step])
                break
            c = cols[j]
            k = next((k for k, y in enumerate(c) if y >= x), None)
            if k is None:
                c.append(x)
                qcols[j].append(step)
                break
            c[k], x = x, c[k]
            j += 1
    return Tableau.from_columns(cols), Tableau.from_columns(qcols)


# -- Knuth equivalence ----------------------------------------------------------


def _knuth_neighbours(v):
    for p in range(len(v) - 2):
        a, b, c = v[p], v[p + 1], v[p + 2]
        # x z y <-> z x y  for x <= y < z
        if a <= c < b:
            yield v[:p] + (b, a, c) + v[p + 3:]
        if b <= c < a:
            yield v[:p] + (b, a, c) + v[p + 3:]
        # y x z <-> y z x  for x < y <= z
        if b < a <= c:
            yield v[:p] + (a, c, b) + v[p + 3:]
        if c < a <= b:
            yield v[:p] + (a, c, b) + v[p + 3:]


@lru_cache(maxsize=4096)
def knuth_class(v):
    """All words Knuth-equivalent to v (breadth-first closure), as a frozenset."""
    v = tuple(v)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in _knuth_neighbours(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def column_runs(v):
    """Split v at every weak ascent into maximal strictly decreasing runs."""
    runs = []
    for x in v:
        if runs and runs[-1][-1] > x:
            runs[-1].append(x)
        else:
            runs.append([x])
    return [tuple(r) for r in runs]


def colform(v):
    return tuple(len(r) for r in column_runs(v))


def is_column_frank(v):
    shape = schensted_insert(v).shape
    return sorted(colform(v)) == sorted(conjugate(shape))


def _key_from_runs(T, pick):
    shape = T.shape
    lam_conj = conjugate(shape)
    frank_runs = [column_runs(u) for u in sorted(knuth_class(col(T))) if is_column_frank(u)]
    columns = []
    for h in lam_conj:
        for runs in frank_runs:
            r = pick(runs)
            if len(r) == h:
                columns.append(sorted(r))
                break
        else:
            raise RuntimeError(f"no column-frank witness for a column of height {h}")
    return Tableau.from_columns(columns)


def right_key(T):
    """K_+(T): column j is the last run of a column-frank word ~ col(T) of length lambda'_j."""
    return _key_from_runs(T, lambda runs: runs[-1])


def left_key(T):
    """K_-(T): as right_key but using first runs."""
    return _key_from_runs(T, lambda runs: runs[0])


def entrywise_leq(S, T):
    return S.shape == T.shape and all(
        x <= y for rs, rt in zip(S.rows, T.rows) for x, y in zip(rs, rt)
    )


def format_word(v, bars=None):
    """Digit string, optionally split by ``|`` after the given run lengths."""
    s = "".join(map(str, v))
    if not bars:
        return s
    out, p = [], 0
    for b in bars:
        out.append(s[p:p + b])
        p += b
    return "|".join(out)
