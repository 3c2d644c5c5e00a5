"""Divided differences and the Demazure-type operators built from them."""

import re

from .core import (
    compose,
    inverse,
    length,
    longest,
    reduced_word,
    rev,
    revsort,
    sort_wc,
    sorting_word,
)
from .polynomial import Polynomial


def _check_index(i, n):
    if not 1 <= i < n:
        raise ValueError(f"operator index {i} out of range for n={n}")


def partial(i, f):
    """Divided difference (f - s_i f) / (x_i - x_{i+1}), computed termwise.

    For x^e with e_i = p, e_{i+1} = q the quotient is a geometric sum of
    monomials, so no polynomial division is needed.
    """
    _check_index(i, f.n)
    a, b = i - 1, i
    terms = {}
    for e, c in f.terms:
        p, q = e[a], e[b]
        if p == q:
            continue
        sign, hi, lo = (1, p, q) if p > q else (-1, q, p)
        base = list(e)
        for k in range(hi - lo):
            # x_i^(hi-1-k) x_{i+1}^(lo+k), mirrored when p < q
            if sign > 0:
                base[a], base[b] = hi - 1 - k, lo + k
            else:
                base[a], base[b] = lo + k, hi - 1 - k
            t = tuple(base)
            terms[t] = terms.get(t, 0) + sign * c
    return Polynomial(f.n, terms)


def pi(i, f):
    """pi_i f = d_i(x_i f)."""
    return partial(i, f.mul_variable(i))


def pibar(i, f):
    """pibar_i = pi_i - 1."""
    return pi(i, f) - f


def pihat(i, f):
    """pihat_i f = -d_i(x_{i+1} f)."""
    return -partial(i, f.mul_variable(i + 1))


OPERATORS = {"partial": partial, "pi": pi, "pibar": pibar, "pihat": pihat}


def apply_word(kind, word, f):
    """Apply op_{i1} op_{i2} ... op_{ik} to f, the rightmost operator first."""
    op = OPERATORS[kind]
    for i in reversed(tuple(word)):
        f = op(i, f)
    return f


def parse_operator_word(text):
    """Parse ``pihat:2,pihat:1`` into [("pihat", 2), ("pihat", 1)]."""
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        m = re.fullmatch(r"(partial|pi|pibar|pihat|d):(\d+)", tok)
        if not m:
            raise ValueError(f"bad operator token {tok!r}")
        kind = "partial" if m.group(1) == "d" else m.group(1)
        out.append((kind, int(m.group(2))))
    return out


def apply_mixed(ops, f):
    """Apply a parsed mixed operator word, rightmost first."""
    for kind, i in reversed(ops):
        f = OPERATORS[kind](i, f)
    return f


def reverse_variables(f):
    """The involution I: x_j <-> x_{n+1-j}."""
    return f.reverse_variables()


def key_ops(a):
    a = tuple(a)
    return apply_word("pi", sorting_word(a), Polynomial.monomial(sort_wc(a)))


def atom_ops(a):
    a = tuple(a)
    return apply_word("pibar", sorting_word(a), Polynomial.monomial(sort_wc(a)))


def ykey_ops(a):
    a = tuple(a)
    return apply_word("pihat", sorting_word(a, increasing=True), Polynomial.monomial(revsort(a)))


def yatom_ops(a):
    """Young atom as I(atom_{rev a}); there is no direct operator formula."""
    return atom_ops(rev(a)).reverse_variables()


def schubert_ops(w):
    """sch_w = d_{w^{-1} w0} x^delta with delta = (n-1, ..., 1, 0)."""
    n = len(w)
    delta = tuple(range(n - 1, -1, -1))
    u = compose(inverse(w), longest(n))
    return apply_word("partial", reduced_word(u), Polynomial.monomial(delta))


def yschubert_ops(w):
    """ysch_w = (-1)^l(w) d_{w^{-1}} (x_2 x_3^2 ... x_n^{n-1})."""
    n = len(w)
    rho = tuple(range(n))
    p = apply_word("partial", reduced_word(inverse(w)), Polynomial.monomial(rho))
    return -p if length(w) % 2 else p
