"""Named verification suites. Each returns a list of counterexamples (empty on success).

Every suite takes ``max_len`` (number of variables, or permutation size) and
``max_size`` (degree bound) and sweeps the whole range exhaustively.
"""

from dataclasses import dataclass
from itertools import product

from . import analysis, crystals, generators, operators, schubert
from .core import (
    all_permutations,
    compositions,
    frev_perm,
    is_vexillary,
    lehmer,
    length,
    longest,
    perm_from_word,
    partitions,
    rearrangements,
    reduced_word,
    reduced_words,
    rev,
    rev_perm,
    sort_wc,
    sorting_word,
    weak_compositions,
    young_lehmer,
)
from .fillings import DUAL_PAIRS, enumerate_family, gen_poly, theta
from .polynomial import Polynomial, all_monomials
from .tableaux import (
    col,
    col_R,
    frev_key,
    frev_word,
    key_tableau,
    knuth_class,
    left_key,
    right_key,
    schensted_insert,
    ssyt,
)


def _wcs(ns, max_size):
    for n in ns:
        for s in range(max_size + 1):
            yield from weak_compositions(n, s)


def _fmt(p):
    return str(p)


# -- polynomial route agreement -------------------------------------------------

KEY_ROUTES = {
    "fillings": lambda a: gen_poly("KSSF", a, len(a)),
    "ops": operators.key_ops,
    "compat": generators.key_via_compatible,
    "rkeys": generators.key_via_right_keys,
    "rowfrank": generators.key_via_W,
    "crystal": crystals.key_via_crystal,
}
YKEY_ROUTES = {
    "fillings": lambda a: gen_poly("YKSSF", a, len(a)),
    "ops": operators.ykey_ops,
    "compat": generators.ykey_via_compatible,
    "rkeys": generators.ykey_via_left_keys,
    "rowfrank": generators.ykey_via_YW,
    "crystal": crystals.ykey_via_crystal,
}
ATOM_ROUTES = {
    "fillings": lambda a: gen_poly("ASSF", a, len(a)),
    "ops": operators.atom_ops,
    "rkeys": generators.atom_via_right_keys,
}
YATOM_ROUTES = {
    "fillings": lambda a: gen_poly("YASSF", a, len(a)),
    "ops": operators.yatom_ops,
    "rkeys": generators.yatom_via_left_keys,
}


def _routes_disagree(routes, a):
    values = {name: f(a) for name, f in routes.items()}
    if len(set(values.values())) > 1:
        return {"index": list(a), "routes": {k: _fmt(v) for k, v in values.items()}}
    return None


def _route_suite(routes):
    def run(max_len, max_size):
        bad = []
        ns = range(1, max_len + 1)
        for a in _wcs(ns, max_size):
            d = _routes_disagree(routes, a)
            if d:
                bad.append(d)
        return bad

    return run


def duality(max_len, max_size):
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        for young, reverse in DUAL_PAIRS.items():
            if young == "YCT":
                continue
            lhs = gen_poly(young, a, n)
            rhs = gen_poly(reverse, rev(a), n).reverse_variables()
            if lhs != rhs:
                bad.append({"family": young, "index": list(a), "young": _fmt(lhs), "reversed": _fmt(rhs)})
    for n in range(1, max_len + 1):
        for s in range(max_size + 1):
            for alpha in compositions(s, n):
                lhs = gen_poly("YCT", alpha, n)
                rhs = gen_poly("RCT", rev(alpha), n).reverse_variables()
                if lhs != rhs:
                    bad.append({"family": "YCT", "n": n, "index": list(alpha), "young": _fmt(lhs), "reversed": _fmt(rhs)})
    return bad


def theta_involution(max_len, max_size):
    """theta maps each reverse family bijectively onto its Young partner and squares to 1."""
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        for young, reverse in DUAL_PAIRS.items():
            if young == "YCT":
                continue
            src = enumerate_family(reverse, rev(a), n)
            images = sorted(theta(T, n) for T in src)
            if images != sorted(enumerate_family(young, a, n)) or any(theta(theta(T, n), n) != T for T in src):
                bad.append({"family": reverse, "index": list(rev(a))})
    return bad


def positivity(max_len, max_size):
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        for name in analysis.BASES.values():
            fam = name[1]
            if name[0] != "weak" or fam is None:
                continue
            p = gen_poly(fam, a, n)
            if not p.is_positive() or not p.is_homogeneous() or any(c != 1 for _, c in p.terms if fam in ("MF", "YMF")):
                bad.append({"family": fam, "index": list(a)})
    return bad


def containment(max_len, max_size):
    chains = [("LF", "ASSF"), ("ASSF", "QF"), ("MF", "FF"), ("YLF", "YASSF"), ("YASSF", "YQF"), ("YMF", "YFF")]
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        for small, big in chains:
            if not set(enumerate_family(small, a, n)) <= set(enumerate_family(big, a, n)):
                bad.append({"small": small, "big": big, "index": list(a)})
    return bad


def quasisymmetric_schur_refinement(max_len, max_size):
    """Summing QS (or YQS) over rearrangements of lambda gives s_lambda."""
    bad = []
    for n in range(1, max_len + 1):
        for s in range(max_size + 1):
            for lam in partitions(s, n):
                target = analysis.basis_poly("schur", lam, n)
                for fam in ("RCT", "YCT"):
                    total = Polynomial.zero(n)
                    for al in rearrangements(lam):
                        total = total + gen_poly(fam, al, n)
                    if total != target:
                        bad.append({"family": fam, "n": n, "partition": list(lam)})
    return bad


def key_equals_atom_sum(max_len, max_size):
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        exp = analysis.key_to_atoms(a)
        if exp.reconstruct() != gen_poly("KSSF", a, n) or analysis.expand(gen_poly("KSSF", a, n), "atom").coeffs != exp.coeffs:
            bad.append({"index": list(a)})
    return bad


def expansion_positivity(max_len, max_size):
    bad = []
    for src, dst in analysis.REVERSE_ARROWS + analysis.YOUNG_ARROWS:
        for a in _wcs(range(1, max_len + 1), max_size):
            e = analysis.expand(analysis.basis_poly(src, a, len(a)), dst)
            if not (e.integral and e.is_nonnegative()):
                bad.append({"arrow": f"{src}->{dst}", "index": list(a), "expansion": str(e)})
    return bad


def self_expansion(max_len, max_size):
    bad = []
    for basis, (kind, _) in analysis.BASES.items():
        for n in range(1, max_len + 1):
            for s in range(max_size + 1):
                for idx in analysis.candidate_indices(basis, n, s):
                    e = analysis.expand(analysis.basis_poly(basis, idx, n), basis)
                    if e.coeffs != {tuple(idx): 1}:
                        bad.append({"basis": basis, "n": n, "index": list(idx), "expansion": str(e)})
    return bad


def _classifier(cid):
    def run(max_len, max_size):
        return analysis.verify_classifier(cid, range(1, max_len + 1), max_size)

    return run


def fs_expansion_of_key(max_len, max_size):
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        total = Polynomial.zero(n)
        for b, m in generators.key_to_fs(a).items():
            total = total + gen_poly("FF", b, n) * m
        y = Polynomial.zero(n)
        for b, m in generators.ykey_to_yfs(a).items():
            y = y + gen_poly("YFF", b, n) * m
        if total != operators.key_ops(a) or y != operators.ykey_ops(a):
            bad.append({"index": list(a)})
    return bad


def maxcomp_is_maximal(max_len, max_size):
    """For every word b over 1..max_len of length <= max_size."""
    bad = []
    for L in range(1, max_size + 1):
        for b in product(range(1, max_len + 1), repeat=L):
            seqs = generators.compatible_sequences(b)
            m = generators.maxcomp_sequence(b)
            if not seqs:
                if m is not None:
                    bad.append({"word": list(b), "maxcomp": list(m)})
                continue
            if m not in seqs or any(any(x > y for x, y in zip(s, m)) for s in seqs):
                bad.append({"word": list(b), "maxcomp": None if m is None else list(m)})
    return bad


# -- words and tableaux ---------------------------------------------------------


def knuth_insertion(max_len, max_size):
    bad = []
    for L in range(max_size + 1):
        for v in product(range(1, max_len + 1), repeat=L):
            P = schensted_insert(v)
            if any(schensted_insert(u) != P for u in knuth_class(v)):
                bad.append({"word": list(v)})
    return bad


def knuth_frev(max_len, max_size):
    bad = []
    n = max_len
    for L in range(max_size + 1):
        for v in product(range(1, n + 1), repeat=L):
            image = frozenset(frev_word(u, n) for u in knuth_class(v))
            if image != knuth_class(frev_word(v, n)):
                bad.append({"word": list(v)})
    return bad


def key_reading_words(max_len, max_size):
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        K = key_tableau(a)
        if col_R(K) not in knuth_class(col(K)):
            bad.append({"index": list(a), "check": "col ~ col_R"})
        if frev_word(col(K), n) != col_R(key_tableau(rev(a))):
            bad.append({"index": list(a), "check": "frev(col) = col_R(key(rev))"})
        if not K.is_key() or K.weight(n) != tuple(a):
            bad.append({"index": list(a), "check": "key tableau"})
    return bad


def right_left_keys(max_len, max_size):
    """K_-(P(frev(col T))) = frev of K_+(T) for SSYT within a max_size x max_size box."""
    bad = []
    n = max_len
    for s in range(max_size * max_size + 1):
        for lam in partitions(s, max_size, max_size):
            for T in ssyt(lam, n):
                lhs = left_key(schensted_insert(frev_word(col(T), n)))
                rhs = frev_key(right_key(T), n)
                if lhs != rhs:
                    bad.append({"tableau": [list(r) for r in T.rows]})
    return bad


# -- permutations and Schubert --------------------------------------------------


def lehmer_codes(max_len, max_size=None):
    bad = []
    for m in range(1, max_len + 1):
        for w in all_permutations(m):
            if young_lehmer(rev_perm(w)) != rev(lehmer(w)):
                bad.append({"perm": list(w), "check": "young lehmer"})
            f = frev_perm(w)
            if length(f) != length(w) or frev_perm(f) != w:
                bad.append({"perm": list(w), "check": "frev"})
    return bad


def schubert_suite(max_len, max_size=None):
    bad = []
    n = max_len
    for w in all_permutations(n):
        sch = schubert.schubert_pd(w)
        ysch = schubert.yschubert_pd(w)
        checks = {
            "pd = ops": sch == operators.schubert_ops(w),
            "ypd = yops": ysch == operators.yschubert_ops(w),
            "ysch = I(sch rev)": ysch == schubert.schubert_pd(rev_perm(w)).reverse_variables(),
            "rfyc": crystals.ysch_via_rfyc(w) == ysch,
            "reduced": all(len(P.crosses) == length(w) for P in schubert.enumerate_pd(w)),
            "staircase": all(e[i] <= i for e, _ in ysch.terms for i in range(n)),
        }
        if is_vexillary(w):
            checks["vexillary"] = sch == operators.key_ops(lehmer(w))
        for name, ok in checks.items():
            if not ok:
                bad.append({"perm": list(w), "check": name})
    return bad


# -- operators --------------------------------------------------------------------


def operator_lemmas(max_len, max_size):
    """I(pi_i f) = pihat_{n-i} I(f) and I(d_w f) = (-1)^l d_{frev w} I(f) on monomials."""
    bad = []
    for n in range(2, max_len + 1):
        for d in range(max_size + 1):
            for e in all_monomials(n, d):
                f = Polynomial.monomial(e)
                If = f.reverse_variables()
                for i in range(1, n):
                    if operators.pi(i, f).reverse_variables() != operators.pihat(n - i, If):
                        bad.append({"monomial": list(e), "i": i, "check": "pi/pihat"})
                    lhs = operators.partial(i, f).reverse_variables()
                    if lhs != -operators.partial(n - i, If):
                        bad.append({"monomial": list(e), "i": i, "check": "partial"})
    return bad


def reduced_word_independence(max_len, max_size):
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        w = perm_from_word(sorting_word(a), n)
        f = Polynomial.monomial(sort_wc(a))
        vals = {operators.apply_word("pi", r, f) for r in reduced_words(w)}
        if len(vals) > 1:
            bad.append({"index": list(a)})
    return bad


# -- crystals ---------------------------------------------------------------------


B21_EDGES = {
    ("2/11", 1, "2/12"),
    ("2/11", 2, "3/11"),
    ("3/11", 1, "3/12"),
    ("2/12", 2, "2/13"),
    ("3/12", 1, "3/22"),
    ("2/13", 2, "3/13"),
    ("3/13", 1, "3/23"),
    ("3/22", 2, "3/23"),
}


def crystal_b21(max_len=3, max_size=None):
    G = crystals.build_crystal((2, 1), 3)
    got = {(crystals.tableau_label(s), i, crystals.tableau_label(t)) for s, i, t in G.edges}
    if got == B21_EDGES and len(G) == 8:
        return []
    return [{"missing": sorted(B21_EDGES - got), "extra": sorted(got - B21_EDGES)}]


def crystal_axioms(max_len, max_size):
    bad = []
    for n in range(1, max_len + 1):
        for s in range(max_size + 1):
            for lam in partitions(s, n):
                for T in ssyt(lam, n):
                    for i in range(1, n):
                        for op, inv, delta in ((crystals.f, crystals.e, -1), (crystals.e, crystals.f, 1)):
                            U = op(i, T)
                            if U is None:
                                continue
                            wt_t, wt_u = T.weight(n), U.weight(n)
                            step = [0] * n
                            step[i - 1], step[i] = delta, -delta
                            if inv(i, U) != T or not U.is_ssyt() or any(
                                wu - wt != st for wu, wt, st in zip(wt_u, wt_t, step)
                            ):
                                bad.append({"tableau": [list(r) for r in T.rows], "i": i})
    return bad


def demazure_characters(max_len, max_size):
    bad = []
    for a in _wcs(range(1, max_len + 1), max_size):
        n = len(a)
        if crystals.key_via_crystal(a) != gen_poly("KSSF", a, n):
            bad.append({"index": list(a), "check": "highest"})
        if crystals.ykey_via_crystal(a) != gen_poly("YKSSF", a, n):
            bad.append({"index": list(a), "check": "lowest"})
    return bad


def demazure_full(max_len, max_size):
    bad = []
    for n in range(1, max_len + 1):
        word = reduced_word(longest(n))
        for s in range(max_size + 1):
            for lam in partitions(s, n):
                if len(crystals.demazure_from_highest(lam, n, word)) != len(ssyt(lam, n)):
                    bad.append({"n": n, "partition": list(lam)})
    return bad


def rf_weights(max_len, max_size=None):
    bad = []
    for w in all_permutations(max_len):
        for r in crystals.enumerate_rf(w):
            if sum(crystals.rf_weight(r, len(w))) != length(w):
                bad.append({"perm": list(w), "factorization": crystals.format_rf(r)})
    return bad


# -- modules ------------------------------------------------------------------------


def module_suite(max_len, max_size):
    bad = []
    n = max_len
    for s in range(max_size + 1):
        for a in weak_compositions(n, s):
            basis = analysis.ykeymodule_basis(a)
            homogeneous = all(
                len({tuple(sorted(x for r in F for x in r)) for F in v}) == 1 for _, v in basis
            )
            ok = (
                analysis.basis_rank(a) == len(basis) == len(generators.row_frank_YW(a))
                and homogeneous
                and analysis.module_trace(a) == gen_poly("YKSSF", a, n)
            )
            if not ok:
                bad.append({"index": list(a)})
    return bad


@dataclass(frozen=True)
class Suite:
    run: object
    max_len: int
    max_size: int
    summary: str


SUITES = {
    "key-routes": Suite(_route_suite(KEY_ROUTES), 3, 6, "all key constructions agree"),
    "ykey-routes": Suite(_route_suite(YKEY_ROUTES), 3, 6, "all Young key constructions agree"),
    "atom-routes": Suite(_route_suite(ATOM_ROUTES), 3, 5, "atom constructions agree"),
    "yatom-routes": Suite(_route_suite(YATOM_ROUTES), 3, 5, "Young atom constructions agree"),
    "duality": Suite(duality, 4, 6, "Young family = I(reverse family at rev(a))"),
    "theta": Suite(theta_involution, 3, 5, "theta is a bijection onto the Young family and an involution"),
    "positivity": Suite(positivity, 3, 5, "every generating polynomial is monomial positive and homogeneous"),
    "containment": Suite(containment, 3, 5, "filling sets nest: LF in ASSF in QF, MF in FF"),
    "qs-refine-schur": Suite(quasisymmetric_schur_refinement, 4, 6, "QS and YQS refine Schur"),
    "key-equals-atom-sum": Suite(key_equals_atom_sum, 3, 5, "key_a is the sum of atom_b over b <= a"),
    "expansion-positivity": Suite(expansion_positivity, 3, 5, "every arrow of both expansion posets is positive"),
    "self-expansion": Suite(self_expansion, 3, 4, "each basis element expands to itself"),
    "fs-expansion": Suite(fs_expansion_of_key, 3, 5, "key and Young key slide expansions via maxcomp"),
    "maxcomp": Suite(maxcomp_is_maximal, 4, 5, "maxcomp is the entrywise largest compatible sequence"),
    "knuth-insertion": Suite(knuth_insertion, 4, 6, "Knuth classes insert to one tableau"),
    "knuth-frev": Suite(knuth_frev, 4, 6, "frev maps Knuth classes to Knuth classes"),
    "key-words": Suite(key_reading_words, 4, 6, "column reading words of key tableaux"),
    "right-left-keys": Suite(right_left_keys, 4, 3, "left key after frev equals flipped right key"),
    "lehmer": Suite(lehmer_codes, 5, 0, "Young Lehmer code and frev on permutations"),
    "schubert": Suite(schubert_suite, 4, 0, "pipe dreams, operators, RFYC and vexillary keys"),
    "operator-lemmas": Suite(operator_lemmas, 4, 5, "I intertwines pi with pihat and d_i with -d_{n-i}"),
    "reduced-word-independence": Suite(reduced_word_independence, 4, 5, "pi along any reduced word gives the same key"),
    "crystal-b21": Suite(crystal_b21, 3, 3, "B(21) for n=3, edge for edge"),
    "crystal-axioms": Suite(crystal_axioms, 4, 4, "e_i and f_i are inverse and shift weights"),
    "demazure": Suite(demazure_characters, 3, 5, "Demazure truncation characters are key / Young key"),
    "demazure-full": Suite(demazure_full, 3, 5, "longest-word truncation is the whole crystal"),
    "rf-weights": Suite(rf_weights, 4, 0, "factorization weights add up to the length"),
    "module": Suite(module_suite, 3, 5, "Young key module basis, rank and trace"),
}

for _cid in analysis.CLASSIFIERS:
    SUITES[_cid] = Suite(_classifier(_cid), 4, 6, f"classifier {_cid} matches brute force")


def run_suite(name, max_len=None, max_size=None):
    if name not in SUITES:
        raise KeyError(name)
    s = SUITES[name]
    return s.run(s.max_len if max_len is None else max_len, s.max_size if max_size is None else max_size)
