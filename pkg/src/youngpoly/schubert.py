"""Pipe dreams and the Schubert / Young Schubert polynomials they generate.

A pipe dream for w in S_n is a set of cross tiles inside the staircase
{(i, j) : i + j <= n} (row 1 on top, column 1 on the left); every other tile is
an elbow. Pipe i enters row i from the left and leaves through the top of
column w(i). It is reduced when it has exactly l(w) crosses.
"""

import json
from dataclasses import dataclass
from itertools import combinations

from .core import compose, is_vexillary, length, lehmer
from .operators import key_ops
from .polynomial import Polynomial


@dataclass(frozen=True, order=True)
class PipeDream:
    n: int
    crosses: tuple  # sorted (row, column) pairs
    young: bool = False

    def weight(self):
        """Crosses per row. Standard: row 1 is the top row. Young: reversed."""
        wt = [0] * self.n
        for i, _ in self.crosses:
            wt[i - 1] += 1
        return tuple(reversed(wt)) if self.young else tuple(wt)

    def permutation(self):
        return trace(self.n, self.crosses)

    def to_ascii(self):
        """'+' is a cross, 'o' an elbow; rows printed top to bottom."""
        lines = []
        for i in range(1, self.n + 1):
            cells = ["+" if (i, j) in set(self.crosses) else "o" for j in range(1, self.n + 1 - i)]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def to_json_obj(self):
        return {
            "n": self.n,
            "young": self.young,
            "crosses": [list(c) for c in self.crosses],
            "weight": list(self.weight()),
        }

    def to_json(self):
        return json.dumps(self.to_json_obj())


def staircase(n):
    return [(i, j) for i in range(1, n) for j in range(1, n + 1 - i)]


def trace(n, crosses):
    """Follow every pipe; returns the one-line permutation i -> exit column."""
    crosses = set(crosses)
    perm = []
    for start in range(1, n + 1):
        r, c, heading = start, 1, "E"
        while r >= 1:
            if (r, c) not in crosses:
                heading = "N" if heading == "E" else "E"
            if heading == "N":
                r -= 1
                if r == 0:
                    break
            else:
                c += 1
        perm.append(c)
    return tuple(perm)


def reading_word(crosses):
    """Crosses read row by row from the top, right to left; (i, j) -> s_{i+j-1}."""
    return tuple(i + j - 1 for i, j in sorted(crosses, key=lambda c: (c[0], -c[1])))


def enumerate_pd_bruteforce(w):
    """Reference oracle: trace every subset of l(w) staircase cells."""
    n = len(w)
    w = tuple(w)
    out = []
    for cells in combinations(staircase(n), length(w)):
        if trace(n, cells) == w:
            out.append(PipeDream(n, tuple(sorted(cells))))
    return sorted(out)


def enumerate_pd(w):
    """PD(w) by backtracking in reading order.

    The reading word of a reduced pipe dream for w is a reduced word for w;
    a branch is kept only while its partial product stays a reduced prefix
    of w (lengths add up).
    """
    w = tuple(w)
    n = len(w)
    target = w
    L = length(target)
    cells = sorted(staircase(n), key=lambda c: (c[0], -c[1]))
    out = []

    def left_quotient_len(u):
        # l(u^{-1} target)
        inv = [0] * n
        for k, x in enumerate(u, 1):
            inv[x - 1] = k
        return length(compose(tuple(inv), target))

    def rec(k, u, chosen):
        ell = len(chosen)
        if ell == L:
            if u == target:
                out.append(PipeDream(n, tuple(sorted(chosen))))
            return
        if k == len(cells) or len(cells) - k < L - ell:
            return
        i, j = cells[k]
        s = i + j - 1
        v = list(u)
        v[s - 1], v[s] = v[s], v[s - 1]
        v = tuple(v)
        if length(v) == ell + 1 and left_quotient_len(v) == L - ell - 1:
            rec(k + 1, v, chosen + [(i, j)])
        rec(k + 1, u, chosen)

    rec(0, tuple(range(1, n + 1)), [])
    return sorted(out)


def schubert_pd(w):
    n = len(w)
    return Polynomial.from_weights(n, (P.weight() for P in enumerate_pd(w)))


def enumerate_ypd(w):
    """Young pipe dreams of w: the tilings of PD(rev w), weighted from the bottom."""
    w = tuple(w)
    return [PipeDream(P.n, P.crosses, young=True) for P in enumerate_pd(w[::-1])]


def yschubert_pd(w):
    n = len(w)
    return Polynomial.from_weights(n, (P.weight() for P in enumerate_ypd(w)))


def vexillary_identity_check(w):
    """For vexillary w, compare sch_w with key_{L(w)}; None when w is not vexillary."""
    if not is_vexillary(w):
        return None
    return schubert_pd(w) == key_ops(lehmer(w))
