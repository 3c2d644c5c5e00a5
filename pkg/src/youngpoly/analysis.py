"""Basis dispatch, exact expansions, coincidence classifiers and Young key modules."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod

from .core import (
    compositions,
    partitions,
    rearrangements,
    weak_compositions,
    wc_leq,
)
from .fillings import gen_poly
from .generators import row_frank_YW, row_blocks
from .linalg import NotInSpanError, rank, solve
from .polynomial import Polynomial, all_monomials
from .tableaux import schur as schur_poly

# basis id -> (index kind, family name or None)
BASES = {
    "key": ("weak", "KSSF"),
    "ykey": ("weak", "YKSSF"),
    "atom": ("weak", "ASSF"),
    "yatom": ("weak", "YASSF"),
    "qkey": ("weak", "QF"),
    "yqkey": ("weak", "YQF"),
    "fslide": ("weak", "FF"),
    "yfslide": ("weak", "YFF"),
    "mslide": ("weak", "MF"),
    "ymslide": ("weak", "YMF"),
    "particle": ("weak", "LF"),
    "yparticle": ("weak", "YLF"),
    "monomial": ("weak", None),
    "schur": ("partition", None),
    "F": ("composition", "FCT"),
    "M": ("composition", "MCT"),
    "QS": ("composition", "RCT"),
    "YQS": ("composition", "YCT"),
}

ALIASES = {
    "qk": "qkey",
    "yqk": "yqkey",
    "fs": "fslide",
    "yfs": "yfslide",
    "ms": "mslide",
    "yms": "ymslide",
    "fp": "particle",
    "yfp": "yparticle",
    "ya": "yatom",
    "x": "monomial",
    "s": "schur",
    "qs": "QS",
    "yqs": "YQS",
}


def basis_id(name):
    name = ALIASES.get(name, name)
    if name not in BASES:
        raise ValueError(f"unknown basis {name!r}; expected one of {sorted(BASES)}")
    return name


def basis_poly(basis, index, n):
    """The basis element for ``index`` in n variables."""
    basis = basis_id(basis)
    kind, fam = BASES[basis]
    index = tuple(index)
    if basis == "monomial":
        if len(index) != n:
            raise ValueError(f"monomial index must have length {n}")
        return Polynomial.monomial(index)
    if basis == "schur":
        return schur_poly(index, n)
    return gen_poly(fam, index, n)


def candidate_indices(basis, n, degree):
    kind, _ = BASES[basis_id(basis)]
    if kind == "weak":
        return list(weak_compositions(n, degree))
    if kind == "composition":
        return list(compositions(degree, n))
    return list(partitions(degree, n))


@dataclass
class Expansion:
    basis: str
    n: int
    coeffs: dict = field(default_factory=dict)

    @property
    def integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs.values())

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs.values())

    def reconstruct(self):
        out = Polynomial.zero(self.n)
        for idx, c in self.coeffs.items():
            if Fraction(c).denominator != 1:
                raise ValueError("cannot rebuild an integer polynomial from rational coefficients")
            out = out + basis_poly(self.basis, idx, self.n) * int(c)
        return out

    def as_ints(self):
        return {k: int(v) for k, v in self.coeffs.items()}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx, c in sorted(self.coeffs.items(), reverse=True):
            name = f"{self.basis}_{''.join(map(str, idx)) if max(idx, default=0) < 10 else ','.join(map(str, idx))}"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)


def expand(p, basis, n=None):
    """Coefficients of p in the given basis, by an exact solve per degree.

    Raises NotInSpanError when p is outside the span. Non-integral solutions
    are returned as Fractions; check ``Expansion.integral``.
    """
    basis = basis_id(basis)
    n = p.n if n is None else n
    if n != p.n:
        raise ValueError("variable count mismatch")
    coeffs = {}
    for d, comp in p.homogeneous_components().items():
        monos = all_monomials(n, d)
        cands = candidate_indices(basis, n, d)
        cols = []
        keep = []
        for idx in cands:
            q = basis_poly(basis, idx, n)
            cols.append([q.coefficient(m) for m in monos])
            keep.append(idx)
        rhs = [comp.coefficient(m) for m in monos]
        sol = solve(cols, rhs)
        for idx, c in zip(keep, sol):
            if c:
                coeffs[idx] = int(c) if c.denominator == 1 else c
    return Expansion(basis, n, coeffs)


def key_to_atoms(a):
    """key_a = sum of atom_b over b <= a (Bruhat order on sorting permutations)."""
    a = tuple(a)
    return Expansion("atom", len(a), {b: 1 for b in rearrangements(a) if wc_leq(b, a)})


# positive expansion arrows: source basis -> target basis
REVERSE_ARROWS = [
    ("key", "qkey"),
    ("qkey", "fslide"),
    ("qkey", "atom"),
    ("fslide", "mslide"),
    ("fslide", "particle"),
    ("mslide", "monomial"),
    ("atom", "particle"),
    ("particle", "monomial"),
]
YOUNG_ARROWS = [
    ("ykey", "yqkey"),
    ("yqkey", "yfslide"),
    ("yqkey", "yatom"),
    ("yfslide", "ymslide"),
    ("yfslide", "yparticle"),
    ("ymslide", "monomial"),
    ("yatom", "yparticle"),
    ("yparticle", "monomial"),
]


# -- coincidence classifiers ---------------------------------------------------


def _zeros_then_parts(a):
    """All zero parts precede all nonzero parts."""
    seen = False
    for x in a:
        if x:
            seen = True
        elif seen:
            return False
    return True


def _parts_then_zeros(a):
    return _zeros_then_parts(a[::-1])


def yqs_eq_qs(alpha, n):
    """YQS_alpha equals some QS_beta (necessarily beta = alpha)."""
    alpha = tuple(alpha)
    if len(set(alpha)) <= 1:
        return True
    if set(alpha) <= {1, 2}:
        return True
    return n == len(alpha) and all(abs(x - y) <= 1 for x, y in zip(alpha, alpha[1:]))


def key_inter_ykey(a):
    """key_a equals some Young key exactly when key_a is a Schur polynomial."""
    return all(x <= y for x, y in zip(a, a[1:]))


def ykey_inter_key(a):
    """ykey_a equals some key exactly when it is a Schur polynomial."""
    return all(x >= y for x, y in zip(a, a[1:]))


def atom_eq_yatom(a):
    return all(abs(x - y) <= 1 for x, y in zip(a, a[1:]))


def qk_eq_yqk(a):
    """yqk_a equals some quasi-key polynomial."""
    a = tuple(a)
    if not _parts_then_zeros(a):
        return False
    flat_ = [x for x in a if x]
    if len(set(flat_)) <= 1 or set(flat_) <= {1, 2}:
        return True
    return 0 not in a and all(abs(x - y) <= 1 for x, y in zip(a, a[1:]))


def fp_eq_yfp(a):
    """yfp_a equals some fundamental particle: no zero part next to a part >= 2."""
    a = tuple(a)
    for x, y in zip(a, a[1:]):
        if (x == 0 and y >= 2) or (y == 0 and x >= 2):
            return False
    return True


def slide_intersection(a):
    """fs_a (equivalently ms_a) equals some Young slide: fs_a = F_flat(a)."""
    return _zeros_then_parts(a)


def yslide_intersection(a):
    """yfs_a (equivalently yms_a) equals some slide: yfs_a = F_flat(a)."""
    return _parts_then_zeros(a)


# classifier id -> (predicate(index, n), source basis, target basis, index kind)
CLASSIFIERS = {
    "yqs-qs": (yqs_eq_qs, "YQS", "QS", "composition"),
    "key-ykey": (lambda a, n: key_inter_ykey(a), "key", "ykey", "weak"),
    "ykey-key": (lambda a, n: ykey_inter_key(a), "ykey", "key", "weak"),
    "atom-yatom": (lambda a, n: atom_eq_yatom(a), "yatom", "atom", "weak"),
    "qk-yqk": (lambda a, n: qk_eq_yqk(a), "yqkey", "qkey", "weak"),
    "fp-yfp": (lambda a, n: fp_eq_yfp(a), "yparticle", "particle", "weak"),
    "fs-yfs": (lambda a, n: slide_intersection(a), "fslide", "yfslide", "weak"),
    "yfs-fs": (lambda a, n: yslide_intersection(a), "yfslide", "fslide", "weak"),
    "ms-yms": (lambda a, n: slide_intersection(a), "mslide", "ymslide", "weak"),
    "yms-ms": (lambda a, n: yslide_intersection(a), "ymslide", "mslide", "weak"),
}


def brute_force_member(source, index, target, n):
    """Return an index b with target_b == source_index, or None."""
    p = basis_poly(source, index, n)
    deg = sum(index)
    for b in candidate_indices(target, n, deg):
        if basis_poly(target, b, n) == p:
            return b
    return None


def verify_classifier(cid, n_values, max_size):
    """Compare a classifier with brute-force search; returns a list of mismatches."""
    pred, source, target, kind = CLASSIFIERS[cid]
    bad = []
    for n in n_values:
        for size in range(max_size + 1):
            indices = (
                weak_compositions(n, size) if kind == "weak" else compositions(size, n)
            )
            for idx in indices:
                truth = brute_force_member(source, idx, target, n) is not None
                if truth != pred(idx, n):
                    bad.append({"n": n, "index": list(idx), "predicate": pred(idx, n), "truth": truth})
    return bad


def schur_decompositions(lam, n):
    """s_lambda as the all-ones sums of QS_alpha and of YQS_alpha over rearrangements alpha."""
    lam = tuple(x for x in lam if x)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    alphas = rearrangements(lam)
    qs = Expansion("QS", n, {al: 1 for al in alphas})
    yqs = Expansion("YQS", n, {al: 1 for al in alphas})
    return qs, yqs


# -- Young key modules ------------------------------------------------------


MODULE_GUARD = 10**6


def _filling_from_word(u, a):
    """T(u): the j-th row-word of u (read from the right) fills row j of D(a)."""
    blocks = row_blocks(u, a)  # u^(n), ..., u^(1)
    return tuple(tuple(b) for b in reversed(blocks))


def e_vector(T):
    """e_T = sum over row permutations alpha and column permutations beta of sgn(beta) T alpha beta.

    T is a tuple of rows (row 1 first), left-justified. Returns a dict from
    fillings (tuples of rows) to integer coefficients. Row rearrangements are
    summed with multiplicity (the size of their stabilizer); any arrangement
    with a repeated entry in a column cancels under the signed column sum.
    """
    T = tuple(tuple(r) for r in T)
    width = max((len(r) for r in T), default=0)
    col_rows = [[i for i, r in enumerate(T) if len(r) > j] for j in range(width)]
    row_orders = []
    for r in T:
        orders = sorted(set(permutations(r)))
        mult = prod(factorial(r.count(v)) for v in set(r))
        row_orders.append([(o, mult) for o in orders])
    col_perms = [list(permutations(range(len(rows)))) for rows in col_rows]
    out = {}
    for choice in product(*row_orders):
        S = [list(o) for o, _ in choice]
        mult = prod(m for _, m in choice)
        if any(len({S[i][j] for i in rows}) < len(rows) for j, rows in enumerate(col_rows)):
            continue
        for perms in product(*col_perms):
            sign = 1
            U = [list(r) for r in S]
            for j, (rows, p) in enumerate(zip(col_rows, perms)):
                sign *= _perm_sign(p)
                for src, dst in zip(rows, (rows[k] for k in p)):
                    U[dst][j] = S[src][j]
            key = tuple(tuple(r) for r in U)
            out[key] = out.get(key, 0) + sign * mult
    return {k: v for k, v in out.items() if v}


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _filling_weight(F, n):
    w = [0] * n
    for r in F:
        for x in r:
            w[x - 1] += 1
    return tuple(w)


def _check_guard(a):
    n = len(a)
    if n ** sum(a) > MODULE_GUARD:
        raise ValueError(f"module for {a} exceeds the size guard n^|D| <= {MODULE_GUARD}")


def ykeymodule_basis(a):
    """The fillings T(u), u in YW(a), and their e-vectors."""
    a = tuple(a)
    _check_guard(a)
    return [(_filling_from_word(u, a), e_vector(_filling_from_word(u, a))) for u in row_frank_YW(a)]


def _rank_of(vectors):
    support = sorted({k for v in vectors for k in v})
    if not support:
        return 0
    return rank([[v.get(k, 0) for k in support] for v in vectors])


def basis_rank(a):
    return _rank_of([v for _, v in ykeymodule_basis(a)])


def _young_flagged_fillings(a):
    """All fillings of D(a) whose entries in row i lie in i..n."""
    n = len(a)
    rows = [list(product(range(i + 1, n + 1), repeat=L)) for i, L in enumerate(a)]
    for choice in product(*rows):
        yield tuple(choice)


def module_weight_dimensions(a):
    """Dimension of each weight space of the span of all e_T, T Young-flagged.

    Fillings are grouped by content; since each row is symmetrized, only one
    representative per multiset of row contents is needed.
    """
    a = tuple(a)
    _check_guard(a)
    n = len(a)
    by_weight = {}
    seen = set()
    for T in _young_flagged_fillings(a):
        rep = tuple(tuple(sorted(r)) for r in T)
        if rep in seen:
            continue
        seen.add(rep)
        v = e_vector(rep)
        if v:
            by_weight.setdefault(_filling_weight(rep, n), []).append(v)
    return {w: _rank_of(vs) for w, vs in by_weight.items() if _rank_of(vs)}


def module_trace(a):
    """Trace of diag(x_1..x_n) on the Young key module: sum of dim(weight space) x^wt."""
    n = len(a)
    return Polynomial(n, module_weight_dimensions(a))


def basis_trace(a):
    n = len(a)
    return Polynomial.from_weights(n, (_filling_weight(T, n) for T, _ in ykeymodule_basis(a)))


__all__ = [
    "ALIASES",
    "BASES",
    "CLASSIFIERS",
    "Expansion",
    "NotInSpanError",
    "REVERSE_ARROWS",
    "YOUNG_ARROWS",
    "atom_eq_yatom",
    "basis_id",
    "basis_poly",
    "basis_rank",
    "basis_trace",
    "brute_force_member",
    "candidate_indices",
    "e_vector",
    "expand",
    "fp_eq_yfp",
    "key_inter_ykey",
    "key_to_atoms",
    "module_trace",
    "module_weight_dimensions",
    "qk_eq_yqk",
    "schur_decompositions",
    "slide_intersection",
    "verify_classifier",
    "yqs_eq_qs",
    "ykey_inter_key",
    "ykeymodule_basis",
    "yslide_intersection",
]
