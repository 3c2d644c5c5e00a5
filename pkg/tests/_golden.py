"""Compact notation for expected polynomials: "013 022 2*112" means x^013 + x^022 + 2x^112."""

from youngpoly.polynomial import Polynomial


def mono_sum(n, spec):
    terms = {}
    for tok in spec.split():
        coeff, _, exp = tok.rpartition("*")
        e = tuple(int(c) for c in exp)
        assert len(e) == n, tok
        terms[e] = terms.get(e, 0) + (int(coeff) if coeff else 1)
    return Polynomial(n, terms)


def words(*items):
    """Digit strings, possibly with bars, as a set of tuples."""
    return {tuple(int(c) for c in w if c.isdigit()) for w in items}
