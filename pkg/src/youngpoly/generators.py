"""Word models for key-type polynomials.

Compatible sequences, maximal compatible sequences, flag-compatible sequences,
row-frank word sets W(a) and YW(a), and the right/left key filters on SSYT.
"""

from functools import lru_cache

from .core import partition_of, rev
from .polynomial import Polynomial
from .tableaux import (
    col,
    column_insert,
    entrywise_leq,
    flip_word,
    frev_word,
    key_tableau,
    knuth_class,
    left_key,
    right_key,
    ssyt,
    std,
)


def comp(word, n):
    """Content vector of a word, as a weak composition of length n."""
    w = [0] * n
    for x in word:
        w[x - 1] += 1
    return tuple(w)


def compatible_sequences(b):
    """All b-compatible words w, sorted.

    w is weakly increasing, strictly increases wherever b ascends strictly,
    and satisfies the flag bound 1 <= w_k <= b_k.
    """
    b = tuple(b)
    out = []
    w = []

    def rec(k):
        if k == len(b):
            out.append(tuple(w))
            return
        lo = 1
        if k:
            lo = w[-1] + 1 if b[k - 1] < b[k] else w[-1]
        for v in range(lo, b[k] + 1):
            w.append(v)
            rec(k + 1)
            w.pop()

    rec(0)
    return sorted(out)


def _key_class(a):
    return sorted(knuth_class(col(key_tableau(a))))


def key_via_compatible(a):
    """Sum of x^comp(w) over w b-compatible with rev(b) ~ col(key(a))."""
    n = len(a)
    weights = []
    for v in _key_class(a):
        weights.extend(comp(w, n) for w in compatible_sequences(v[::-1]))
    return Polynomial.from_weights(n, weights)


def ykey_via_compatible(a):
    """Sum of x^comp(f(w)) over w c-compatible with f(c) ~ col(key(a))."""
    n = len(a)
    weights = []
    for v in _key_class(a):
        c = flip_word(v, n)
        weights.extend(comp(flip_word(w, n), n) for w in compatible_sequences(c))
    return Polynomial.from_weights(n, weights)


def _weakly_decreasing_runs(b):
    runs = []
    for x in b:
        if runs and runs[-1][-1] >= x:
            runs[-1].append(x)
        else:
            runs.append([x])
    return runs


def maxcomp_sequence(b):
    """The entrywise largest b-compatible word, or None if b has none.

    Cut b into weakly decreasing runs and cap them right to left: the last run
    becomes its smallest entry, each earlier run the minimum of its smallest
    entry and one less than the cap to its right.
    """
    runs = _weakly_decreasing_runs(b)
    caps = [0] * len(runs)
    nxt = None
    for i in range(len(runs) - 1, -1, -1):
        c = runs[i][-1] if nxt is None else min(runs[i][-1], nxt - 1)
        if c < 1:
            return None
        caps[i] = nxt = c
    return tuple(c for c, r in zip(caps, runs) for _ in r)


def maxcomp(b, n=None):
    """Weak composition of the maximal compatible sequence (length n)."""
    seq = maxcomp_sequence(b)
    if seq is None:
        return None
    return comp(seq, n if n is not None else max(b))


def key_to_fs(a):
    """Fundamental slide expansion of key_a as {index: multiplicity}."""
    n = len(a)
    out = {}
    for v in _key_class(a):
        m = maxcomp(v[::-1], n)
        if m is not None:
            out[m] = out.get(m, 0) + 1
    return out


def ykey_to_yfs(a):
    """Young slide expansion of ykey_a: sum of yfs_rev(maxcomp(b)) over f(b) ~ col(key(a))."""
    n = len(a)
    out = {}
    for v in _key_class(a):
        m = maxcomp(flip_word(v, n), n)
        if m is not None:
            m = rev(m)
            out[m] = out.get(m, 0) + 1
    return out


def flag_compatible_sequences(a):
    """Compatible sequences of 1^a1 2^a2 ... whose letter at each partial sum is that row."""
    base = tuple(i + 1 for i, x in enumerate(a) for _ in range(x))
    checks = {}
    p = 0
    for i, x in enumerate(a):
        if x:
            p += x
            checks[p - 1] = i + 1
    return [w for w in compatible_sequences(base) if all(w[k] == r for k, r in checks.items())]


def fp_via_flag(a):
    n = len(a)
    return Polynomial.from_weights(n, (comp(w, n) for w in flag_compatible_sequences(a)))


# -- row-frank words ----------------------------------------------------------


def _block_words(a, letter_range):
    """Words u = u^(n) ... u^(1), |u^(i)| = a_i, blocks weakly increasing with
    letters in letter_range(i), consecutive nonempty blocks meeting at a strict
    descent (so the blocks are exactly the maximal weakly increasing runs)."""
    n = len(a)
    out = []

    def rec(i, prefix):
        if i == 0:
            out.append(tuple(prefix))
            return
        lo, hi = letter_range(i)
        k = a[i - 1]
        if k == 0:
            rec(i - 1, prefix)
            return

        def fill(block, start):
            if len(block) == k:
                rec(i - 1, prefix + block)
                return
            for v in range(start, hi + 1):
                if not block and prefix and v >= prefix[-1]:
                    break
                fill(block + [v], v)

        fill([], lo)

    rec(n, [])
    return out


@lru_cache(maxsize=None)
def row_frank_W(a):
    a = tuple(a)
    target = std(key_tableau(a))
    return tuple(sorted(u for u in _block_words(a, lambda i: (1, i)) if column_insert(u)[1] == target))


@lru_cache(maxsize=None)
def row_frank_YW(a):
    a = tuple(a)
    n = len(a)
    target = std(key_tableau(rev(a)))
    return tuple(
        sorted(
            u
            for u in _block_words(a, lambda i: (i, n))
            if column_insert(frev_word(u, n))[1] == target
        )
    )


def row_blocks(u, a):
    """Split u into its blocks u^(n), ..., u^(1) (left to right)."""
    out, p = [], 0
    for i in range(len(a), 0, -1):
        out.append(u[p:p + a[i - 1]])
        p += a[i - 1]
    return out


def format_row_frank(u, a):
    return "|".join("".join(map(str, b)) for b in row_blocks(u, a))


def key_via_W(a):
    n = len(a)
    return Polynomial.from_weights(n, (comp(u, n) for u in row_frank_W(tuple(a))))


def ykey_via_YW(a):
    n = len(a)
    return Polynomial.from_weights(n, (comp(u, n) for u in row_frank_YW(tuple(a))))


# -- right and left key filters -----------------------------------------------


@lru_cache(maxsize=None)
def _right_key(T):
    return right_key(T)


@lru_cache(maxsize=None)
def _left_key(T):
    return left_key(T)


def tableaux_by_right_key(a, relation):
    """SSYT_n(sort a) whose right key is <= key(a) ("leq") or equal to it ("eq")."""
    K = key_tableau(a)
    out = []
    for T in ssyt(partition_of(a), len(a)):
        R = _right_key(T)
        if (relation == "eq" and R == K) or (relation == "leq" and entrywise_leq(R, K)):
            out.append(T)
    return out


def tableaux_by_left_key(a, relation):
    """SSYT_n(sort a) whose left key is >= key(a) ("geq") or equal to it ("eq")."""
    K = key_tableau(a)
    out = []
    for T in ssyt(partition_of(a), len(a)):
        L = _left_key(T)
        if (relation == "eq" and L == K) or (relation == "geq" and entrywise_leq(K, L)):
            out.append(T)
    return out


def _weights(ts, n):
    return Polynomial.from_weights(n, (T.weight(n) for T in ts))


def key_via_right_keys(a):
    return _weights(tableaux_by_right_key(a, "leq"), len(a))


def atom_via_right_keys(a):
    return _weights(tableaux_by_right_key(a, "eq"), len(a))


def ykey_via_left_keys(a):
    return _weights(tableaux_by_left_key(a, "geq"), len(a))


def yatom_via_left_keys(a):
    return _weights(tableaux_by_left_key(a, "eq"), len(a))
