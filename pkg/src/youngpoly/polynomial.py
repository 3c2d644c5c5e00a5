"""Exact multivariate polynomials with integer coefficients.

A :class:`Polynomial` lives in a fixed number of variables ``n`` and stores a
mapping from exponent vectors (tuples of length ``n``) to nonzero integers.
Instances are immutable and hashable.
"""

import json
import re
from itertools import combinations_with_replacement


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class Polynomial:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} has length {len(exp)}, expected {n}")
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def variable(cls, i, n):
        """The variable x_i (1-indexed)."""
        exp = [0] * n
        exp[i - 1] = 1
        return cls(n, {tuple(exp): 1})

    @classmethod
    def from_weights(cls, n, weights):
        """Sum of x^w over an iterable of exponent vectors (with multiplicity)."""
        terms = {}
        for w in weights:
            w = tuple(w)
            terms[w] = terms.get(w, 0) + 1
        return cls(n, terms)

    # -- basic protocol -----------------------------------------------------

    @property
    def terms(self):
        """Terms as a sorted list of (exponent, coefficient), decreasing lex order."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), 0)

    def support(self):
        return set(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.one(self.n) * other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.n}, {str(self)!r})"

    def __str__(self):
        return to_text(self)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.one(self.n) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return Polynomial(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.one(self.n) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.n, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.n, terms)

    __rmul__ = __mul__

    def mul_monomial(self, exp):
        exp = tuple(exp)
        return Polynomial(
            self.n, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()}
        )

    def mul_variable(self, i):
        """Multiply by x_i (1-indexed)."""
        exp = [0] * self.n
        exp[i - 1] = 1
        return self.mul_monomial(exp)

    # -- variable substitutions ---------------------------------------------

    def permute_variables(self, perm):
        """Substitute x_j -> x_{perm[j-1]} for a permutation in one-line notation."""
        terms = {}
        for e, c in self._terms.items():
            new = [0] * self.n
            for j, p in enumerate(e):
                new[perm[j] - 1] += p
            terms[tuple(new)] = c
        return Polynomial(self.n, terms)

    def swap(self, i):
        """Apply s_i: exchange x_i and x_{i+1}."""
        terms = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            terms[tuple(e)] = c
        return Polynomial(self.n, terms)

    def reverse_variables(self):
        """The involution x_j <-> x_{n+1-j}."""
        return Polynomial(self.n, {e[::-1]: c for e, c in self._terms.items()})

    # -- structure -----------------------------------------------------------

    def degrees(self):
        return {sum(e) for e in self._terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_components(self):
        comps = {}
        for e, c in self._terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.n, t) for d, t in sorted(comps.items())}

    def is_positive(self):
        return all(c > 0 for c in self._terms.values())

    def is_symmetric(self):
        return all(self.swap(i) == self for i in range(1, self.n))

    def divide_by_difference(self, i, j):
        """Exact quotient of self by (x_i - x_j); raises on nonzero remainder.

        Long division with x_i as the main variable: repeatedly cancel the
        term of highest x_i-degree.
        """
        if i == j:
            raise ValueError("cannot divide by x_i - x_i")
        rem = dict(self._terms)
        quot = {}
        a, b = i - 1, j - 1
        while rem:
            exp = max(rem, key=lambda e: (e[a], e))
            c = rem[exp]
            if exp[a] == 0:
                raise InexactDivisionError(f"nonzero remainder dividing by x{i}-x{j}")
            q = list(exp)
            q[a] -= 1
            q = tuple(q)
            quot[q] = quot.get(q, 0) + c
            # subtract c * x^q * (x_i - x_j)
            for sign, k in ((1, a), (-1, b)):
                t = list(q)
                t[k] += 1
                t = tuple(t)
                v = rem.get(t, 0) - sign * c
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Polynomial(self.n, quot)

    # -- serialization -------------------------------------------------------

    def to_json_obj(self):
        return {"n": self.n, "terms": [{"exp": list(e), "coeff": c} for e, c in self.terms]}

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj):
        return cls(obj["n"], {tuple(t["exp"]): t["coeff"] for t in obj["terms"]})

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


def to_text(p):
    """Canonical text: ``c*x^(e1,...,en)`` terms in decreasing lex order."""
    if not p:
        return "0"
    parts = []
    for k, (e, c) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if any(e):
            mono = "x^(" + ",".join(map(str, e)) + ")"
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if k == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(r"^(?:(\d+)\*)?x\^\(([\d,\s]*)\)$|^(\d+)$")


def from_text(text, n):
    """Parse the canonical text form back into a polynomial in ``n`` variables."""
    text = text.strip()
    if text == "0":
        return Polynomial.zero(n)
    tokens = text.replace(" - ", " + -").split(" + ")
    terms = {}
    for tok in tokens:
        tok = tok.strip()
        sign = 1
        if tok.startswith("-"):
            sign, tok = -1, tok[1:]
        m = _TERM.match(tok)
        if not m:
            raise ValueError(f"cannot parse term {tok!r}")
        if m.group(3) is not None:
            exp, c = (0,) * n, int(m.group(3))
        else:
            exp = tuple(int(x) for x in m.group(2).split(","))
            c = int(m.group(1) or 1)
        terms[exp] = terms.get(exp, 0) + sign * c
    return Polynomial(n, terms)


def all_monomials(n, degree):
    """All exponent vectors of length n and total degree ``degree``."""
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return out
