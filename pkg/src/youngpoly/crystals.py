"""Tableau crystals, Demazure truncations and reduced factorizations."""

from functools import lru_cache

from .core import conjugate, is_reduced_word, partition_of, reduced_words, sorting_word
from .polynomial import Polynomial
from .tableaux import Tableau, ssyt


# -- Kashiwara operators on SSYT ----------------------------------------------


def _reading_cells(T):
    """Cells (row, col) in column reading order: columns left to right, each top down."""
    shape = T.shape
    cells = []
    for j in range(shape[0] if shape else 0):
        height = sum(1 for L in shape if L > j)
        cells.extend((i, j) for i in range(height - 1, -1, -1))
    return cells


def _unpaired(T, i):
    """Positions (cells) of unpaired i and unpaired i+1 under the bracket rule.

    Reading the column word left to right, each i+1 opens a bracket and each i
    closes the nearest open one.
    """
    open_stack = []
    lone_i = []
    for cell in _reading_cells(T):
        x = T.rows[cell[0]][cell[1]]
        if x == i + 1:
            open_stack.append(cell)
        elif x == i:
            if open_stack:
                open_stack.pop()
            else:
                lone_i.append(cell)
    return lone_i, open_stack


def _replace(T, cell, value):
    rows = [list(r) for r in T.rows]
    rows[cell[0]][cell[1]] = value
    return Tableau(rows)


def f(i, T):
    """Lowering operator: change the rightmost unpaired i to i+1 (None if none)."""
    lone_i, _ = _unpaired(T, i)
    return _replace(T, lone_i[-1], i + 1) if lone_i else None


def e(i, T):
    """Raising operator: change the leftmost unpaired i+1 to i (None if none)."""
    _, lone_next = _unpaired(T, i)
    return _replace(T, lone_next[0], i) if lone_next else None


def highest_weight_element(lam):
    return Tableau([[i + 1] * L for i, L in enumerate(x for x in lam if x)])


def lowest_weight_element(lam, n):
    """Column j holds the largest lambda'_j values up to n."""
    return Tableau.from_columns([list(range(n - h + 1, n + 1)) for h in conjugate(lam)])


class CrystalGraph:
    """Vertices with weights and i-labelled edges b -> f_i(b)."""

    def __init__(self, vertices, edges, n, label=str):
        self.vertices = sorted(vertices)
        self.edges = sorted(edges)
        self.n = n
        self._label = label

    def weight(self, b):
        return b.weight(self.n)

    def character(self):
        return Polynomial.from_weights(self.n, (self.weight(b) for b in self.vertices))

    def __len__(self):
        return len(self.vertices)

    def to_dot(self):
        ids = {b: f"v{k}" for k, b in enumerate(self.vertices)}
        lines = ["digraph crystal {"]
        for b in self.vertices:
            wt = "".join(map(str, self.weight(b)))
            lines.append(f'  {ids[b]} [label="{self._label(b)}\\nwt {wt}"];')
        for src, i, dst in self.edges:
            lines.append(f'  {ids[src]} -> {ids[dst]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def tableau_label(T):
    return "/".join("".join(map(str, r)) for r in reversed(T.rows))


def _graph_on(vertices, n):
    vs = set(vertices)
    edges = []
    for b in vs:
        for i in range(1, n):
            c = f(i, b)
            if c is not None and c in vs:
                edges.append((b, i, c))
    return CrystalGraph(vs, edges, n, tableau_label)


def build_crystal(lam, n):
    lam = tuple(x for x in lam if x)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    return _graph_on(ssyt(lam, n), n)


def _string_closure(X, op, i):
    out = set(X)
    for b in X:
        c = op(i, b)
        while c is not None:
            out.add(c)
            c = op(i, c)
    return out


def _check_word(word, n):
    if not is_reduced_word(word, n):
        raise ValueError(f"{word} is not a reduced word in S_{n}")


def demazure_from_highest(lam, n, word):
    """Demazure crystal for the reduced word (i1..ik): D_{i1} ... D_{ik} {u_lambda}.

    D_i X adds every f_i-string through X; the rightmost index acts first.
    """
    _check_word(word, n)
    X = {highest_weight_element(lam)}
    for i in reversed(tuple(word)):
        X = _string_closure(X, f, i)
    return _graph_on(X, n)


def demazure_from_lowest(lam, n, word):
    """Opposite Demazure crystal: start at the lowest weight element, close under e_i."""
    _check_word(word, n)
    X = {lowest_weight_element(lam, n)}
    for i in reversed(tuple(word)):
        X = _string_closure(X, e, i)
    return _graph_on(X, n)


def key_via_crystal(a):
    return demazure_from_highest(partition_of(a), len(a), sorting_word(a)).character()


def ykey_via_crystal(a):
    return demazure_from_lowest(partition_of(a), len(a), sorting_word(a, increasing=True)).character()


# -- reduced factorizations ---------------------------------------------------


def last_descent(w):
    """Position of the rightmost descent of w (0 for the identity)."""
    return max((i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]), default=0)


def _splits(word, blocks):
    """All ways to cut word into ``blocks`` consecutive strictly decreasing pieces."""
    if blocks == 0:
        if not word:
            yield ()
        return
    for cut in range(len(word) + 1):
        head = word[:cut]
        if all(head[k] > head[k + 1] for k in range(len(head) - 1)):
            for rest in _splits(word[cut:], blocks - 1):
                yield (head,) + rest
        else:
            break


@lru_cache(maxsize=None)
def enumerate_rf(w, ell=None):
    """RF^ell(w): reduced words of w cut into ell decreasing blocks, sorted."""
    w = tuple(w)
    if ell is None:
        ell = last_descent(w)
    out = set()
    for word in reduced_words(w):
        out.update(_splits(word, ell))
    return tuple(sorted(out))


def rf_weight(r, n):
    """(0, ..., 0, |r^ell|, ..., |r^1|) with r^1 the leftmost block."""
    wt = [0] * n
    for k, block in enumerate(r, 1):
        wt[n - k] = len(block)
    return tuple(wt)


def rfyc(w):
    """Factorizations in RF^ell(w) whose i-th block has all entries >= i."""
    return tuple(r for r in enumerate_rf(tuple(w)) if all(min(b, default=k) >= k for k, b in enumerate(r, 1)))


def ysch_via_rfyc(w):
    w = tuple(w)
    n = len(w)
    return Polynomial.from_weights(n, (rf_weight(r, n) for r in rfyc(w[::-1])))


def format_rf(r):
    return "".join("(" + "".join(map(str, b)) + ")" for b in r)


def rf_weight_total(r):
    return sum(len(b) for b in r)

