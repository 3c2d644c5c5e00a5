"""Index objects: weak compositions, compositions, partitions and permutations.

Weak compositions, compositions and partitions are plain tuples of ints. A
weak composition's length is significant (trailing zeros matter). Permutations
are tuples in one-line notation; the simple transposition s_i acts on the
right by swapping positions i and i+1, so the product ``u*v`` is the function
composition ``u(v(k))`` and a word ``(i1, ..., ik)`` names
``s_{i1} s_{i2} ... s_{ik}``.
"""

from functools import lru_cache
from itertools import permutations as _permutations


# -- weak compositions --------------------------------------------------------


def check_weak_composition(a):
    a = tuple(a)
    if any((not isinstance(x, int)) or x < 0 for x in a):
        raise ValueError(f"not a weak composition: {a}")
    return a


def check_composition(alpha):
    alpha = tuple(alpha)
    if any((not isinstance(x, int)) or x < 1 for x in alpha):
        raise ValueError(f"not a composition: {alpha}")
    return alpha


def check_partition(lam):
    lam = tuple(lam)
    if any(x < 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {lam}")
    return tuple(x for x in lam if x)


def rev(a):
    return tuple(a)[::-1]


def sort_wc(a):
    """Entries of ``a`` in weakly decreasing order, zeros kept (same length)."""
    return tuple(sorted(a, reverse=True))


def revsort(a):
    """Entries of ``a`` in weakly increasing order (same length)."""
    return tuple(sorted(a))


def partition_of(a):
    """sort(a) with the zeros dropped."""
    return tuple(x for x in sort_wc(a) if x)


def flat(a):
    """Delete the zero parts."""
    return tuple(x for x in a if x)


def pad(alpha, n):
    """Append zeros to length n."""
    if len(alpha) > n:
        raise ValueError(f"{alpha} has more than {n} parts")
    return tuple(alpha) + (0,) * (n - len(alpha))


def conjugate(lam):
    lam = [x for x in lam if x]
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def weak_compositions(n, size):
    """All weak compositions of length n and the given size, in lex order."""
    if n == 0:
        if size == 0:
            yield ()
        return
    for first in range(size, -1, -1):
        for rest in weak_compositions(n - 1, size - first):
            yield (first,) + rest


def weak_compositions_upto(n, max_size):
    for size in range(max_size + 1):
        yield from weak_compositions(n, size)


def compositions(size, max_parts=None):
    """All compositions of ``size`` with at most ``max_parts`` parts."""
    if size == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(size, 0, -1):
        for rest in compositions(size - first, None if max_parts is None else max_parts - 1):
            yield (first,) + rest


def partitions(size, max_parts=None, max_part=None):
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, None if max_parts is None else max_parts - 1, first):
            yield (first,) + rest


def rearrangements(a):
    return sorted(set(_permutations(a)))


# -- permutations ---------------------------------------------------------


def check_permutation(w):
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation: {w}")
    return w


def identity(m):
    return tuple(range(1, m + 1))


def longest(m):
    return tuple(range(m, 0, -1))


def all_permutations(m):
    return [tuple(p) for p in _permutations(range(1, m + 1))]


def compose(u, v):
    """The product u*v, i.e. k -> u(v(k))."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    return tuple(u[v[k] - 1] for k in range(len(v)))


def inverse(w):
    inv = [0] * len(w)
    for k, x in enumerate(w, 1):
        inv[x - 1] = k
    return tuple(inv)


def length(w):
    """Number of inversions."""
    m = len(w)
    return sum(1 for i in range(m) for j in range(i + 1, m) if w[i] > w[j])


def perm_from_word(word, m):
    """The permutation s_{i1} s_{i2} ... in S_m (swap positions left to right)."""
    w = list(range(1, m + 1))
    for i in word:
        if not 1 <= i < m:
            raise ValueError(f"s_{i} not in S_{m}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_reduced_word(word, m):
    return length(perm_from_word(word, m)) == len(word)


def reduced_word(w):
    """A reduced word for w: repeatedly peel off a right descent."""
    w = list(w)
    word = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


@lru_cache(maxsize=None)
def reduced_words(w):
    """All reduced words of w, sorted."""
    w = tuple(w)
    if length(w) == 0:
        return ((),)
    out = []
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            v = list(w)
            v[i], v[i + 1] = v[i + 1], v[i]
            out.extend(r + (i + 1,) for r in reduced_words(tuple(v)))
    return tuple(sorted(out))


def rev_perm(w):
    """One-line reversal, i.e. w*w0."""
    return tuple(w)[::-1]


def frev_perm(w):
    """w0 w w0: reverse the one-line word and replace each entry i by m+1-i."""
    m = len(w)
    return tuple(m + 1 - x for x in reversed(w))


def lehmer(w):
    """L(w)_i = #{j > i : w_i > w_j}."""
    m = len(w)
    return tuple(sum(1 for j in range(i + 1, m) if w[i] > w[j]) for i in range(m))


def young_lehmer(w):
    """Young Lehmer code: entry i counts j < i with w_i > w_j."""
    return tuple(sum(1 for j in range(i) if w[i] > w[j]) for i in range(len(w)))


def bruhat_leq(u, v):
    """Bruhat order via the tableau criterion on sorted prefixes."""
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    for k in range(1, len(u)):
        if any(x > y for x, y in zip(sorted(u[:k]), sorted(v[:k]))):
            return False
    return True


def act(a, w):
    """Right action of a permutation on positions: (a.w)_k = a_{w(k)}."""
    return tuple(a[w[k] - 1] for k in range(len(a)))


def sorting_word(a, increasing=False):
    """Reduced word (i1, ..., ik) with a.s_{i1}...s_{ik} sorted.

    Adjacent swaps are made only on strictly out-of-order pairs, leftmost
    first, so each swap removes exactly one inversion and the word is reduced
    and names the minimal-length sorting permutation.
    """
    a = list(a)
    word = []
    bad = (lambda x, y: x > y) if increasing else (lambda x, y: x < y)
    while True:
        for i in range(len(a) - 1):
            if bad(a[i], a[i + 1]):
                a[i], a[i + 1] = a[i + 1], a[i]
                word.append(i + 1)
                break
        else:
            return tuple(word)


def sorting_permutations(a):
    """(w_a, hat w_a): minimal permutations taking a to sort(a), revsort(a)."""
    m = len(a)
    return perm_from_word(sorting_word(a), m), perm_from_word(sorting_word(a, True), m)


def wc_leq(b, a):
    """b <= a: same sorted parts and w_b <= w_a in Bruhat order."""
    if len(a) != len(b):
        raise ValueError("weak compositions of different lengths")
    if sort_wc(a) != sort_wc(b):
        return False
    return bruhat_leq(sorting_permutations(b)[0], sorting_permutations(a)[0])


def contains_pattern(w, pattern):
    k = len(pattern)
    from itertools import combinations

    for idx in combinations(range(len(w)), k):
        vals = [w[i] for i in idx]
        if all((vals[i] < vals[j]) == (pattern[i] < pattern[j]) for i in range(k) for j in range(k)):
            return True
    return False


def is_vexillary(w):
    return not contains_pattern(w, (2, 1, 4, 3))


# -- parsing ------------------------------------------------------------------


def parse_index(text):
    """Parse ``2,3,0`` into a tuple of ints."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def parse_permutation(text):
    """Parse one-line digit form ``21534`` or comma form ``2,1,5,3,4``."""
    text = text.strip()
    w = tuple(int(x) for x in text.split(",")) if "," in text else tuple(int(c) for c in text)
    return check_permutation(w)


def format_index(a):
    return ",".join(map(str, a))


def format_perm(w):
    return "".join(map(str, w)) if len(w) < 10 else ",".join(map(str, w))
