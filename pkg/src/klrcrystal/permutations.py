"""Permutations in one-line notation, Bruhat order, and Kazhdan-Lusztig polynomials.

A permutation w of {1..m} is the tuple (w(1), ..., w(m)). Products are
composition of maps: ``compose(u, w)(i) = u(w(i))``.
"""

from __future__ import annotations

import threading
from itertools import permutations as _perms
from typing import Iterator, Sequence

__all__ = [
    "Perm",
    "identity",
    "longest",
    "length",
    "compose",
    "inverse",
    "simple",
    "bruhat_le",
    "lower_covers",
    "kl_poly",
    "mu_coefficient",
    "min_rep",
    "coset_min_reps",
    "permutations_of",
]

Perm = tuple[int, ...]


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def longest(m: int) -> Perm:
    return tuple(range(m, 0, -1))


def _check(w: Sequence[int]) -> Perm:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation: {w}")
    return w


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def compose(u: Sequence[int], w: Sequence[int]) -> Perm:
    if len(u) != len(w):
        raise ValueError("permutations of different sizes")
    return tuple(u[w[i] - 1] for i in range(len(w)))


def inverse(w: Sequence[int]) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w, 1):
        out[x - 1] = i
    return tuple(out)


def simple(i: int, m: int) -> Perm:
    w = list(range(1, m + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def permutations_of(m: int) -> Iterator[Perm]:
    return _perms(range(1, m + 1))


def bruhat_le(x: Sequence[int], y: Sequence[int]) -> bool:
    """Tableau criterion: sorted prefixes of x are dominated entrywise by those of y."""
    if len(x) != len(y):
        raise ValueError("permutations of different sizes")
    for i in range(1, len(x)):
        for a, b in zip(sorted(x[:i]), sorted(y[:i])):
            if a > b:
                return False
    return True


def lower_covers(u: Sequence[int]) -> list[Perm]:
    """Elements covered by u: transpositions of an inversion with nothing in between."""
    m = len(u)
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            if u[i] > u[j] and all(not u[j] < u[k] < u[i] for k in range(i + 1, j)):
                w = list(u)
                w[i], w[j] = w[j], w[i]
                out.append(tuple(w))
    return out


def _right(w: Perm, s: int) -> Perm:
    w = list(w)
    w[s - 1], w[s] = w[s], w[s - 1]
    return tuple(w)


def _left(w: Perm, s: int) -> Perm:
    return tuple(s + 1 if a == s else s if a == s + 1 else a for a in w)


class _KL:
    """Memoised P_{x,w}; polynomials are dicts exponent -> coefficient."""

    def __init__(self):
        self.memo: dict[tuple[Perm, Perm], dict[int, int]] = {}
        self.lengths: dict[Perm, int] = {}
        self.intervals: dict[tuple[Perm, Perm], set[Perm]] = {}
        self.lock = threading.RLock()

    def ln(self, w: Perm) -> int:
        v = self.lengths.get(w)
        if v is None:
            v = self.lengths[w] = length(w)
        return v

    def interval(self, x: Perm, v: Perm) -> set[Perm]:
        key = (x, v)
        hit = self.intervals.get(key)
        if hit is not None:
            return hit
        lx = self.ln(x)
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            if self.ln(u) == lx:
                continue
            for c in lower_covers(u):
                if c not in seen and bruhat_le(x, c):
                    seen.add(c)
                    stack.append(c)
        self.intervals[key] = seen
        return seen

    def P(self, x: Perm, w: Perm) -> dict[int, int]:
        key = (x, w)
        r = self.memo.get(key)
        if r is None:
            r = self.memo[key] = self._compute(x, w)
        return r

    def _compute(self, x: Perm, w: Perm) -> dict[int, int]:
        if x == w:
            return {0: 1}
        lx, lw = self.ln(x), self.ln(w)
        if lx >= lw or not bruhat_le(x, w):
            return {}
        if lw - lx <= 2:
            return {0: 1}
        m = len(w)
        right = [s for s in range(1, m) if w[s - 1] > w[s]]
        # P_{x,w} = P_{xs,w} whenever s is a descent of w but not of x
        for s in right:
            if x[s - 1] < x[s]:
                return self.P(_right(x, s), w)
        pos_w, pos_x = inverse(w), inverse(x)
        for s in range(1, m):
            if pos_w[s - 1] > pos_w[s] and pos_x[s - 1] < pos_x[s]:
                return self.P(_left(x, s), w)
        s = right[0]
        v = _right(w, s)
        out: dict[int, int] = {}
        _acc(out, self.P(_right(x, s), v))
        _acc(out, self.P(x, v), shift=1)
        lv = self.ln(v)
        for z in self.interval(x, v):
            if z == v or z[s - 1] < z[s]:
                continue
            d = lv - self.ln(z)
            if d % 2:
                mu = self.P(z, v).get((d - 1) // 2, 0)
                if mu:
                    _acc(out, self.P(x, z), shift=(lw - self.ln(z)) // 2, mult=-mu)
        return out


def _acc(r: dict[int, int], b: dict[int, int], shift: int = 0, mult: int = 1) -> None:
    for e, c in b.items():
        v = r.get(e + shift, 0) + mult * c
        if v:
            r[e + shift] = v
        else:
            r.pop(e + shift, None)


_ENGINE = _KL()


def kl_poly(x: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """Coefficients (c_0, c_1, ...) of P_{x,w}(q); () when x is not below w."""
    x, w = _check(x), _check(w)
    if len(x) != len(w):
        raise ValueError("permutations of different sizes")
    with _ENGINE.lock:
        p = dict(_ENGINE.P(x, w))
    if not p:
        return ()
    top = max(p)
    return tuple(p.get(e, 0) for e in range(top + 1))


def mu_coefficient(x: Sequence[int], w: Sequence[int]) -> int:
    """Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}, zero for even length difference."""
    d = length(w) - length(x)
    if d <= 0 or d % 2 == 0:
        return 0
    p = kl_poly(x, w)
    k = (d - 1) // 2
    return p[k] if k < len(p) else 0


def min_rep(word: Sequence[int]) -> Perm:
    """The shortest d with word = dec . d, dec being word sorted decreasingly.

    Here (f . d)_i = f_{d(i)}; equal letters keep their relative order.
    """
    dec = sorted(word, reverse=True)
    first: dict[int, int] = {}
    for p, a in enumerate(dec):
        first.setdefault(a, p)
    seen: dict[int, int] = {}
    out = []
    for a in word:
        k = seen.get(a, 0)
        seen[a] = k + 1
        out.append(first[a] + k + 1)
    return tuple(out)


def coset_min_reps(word: Sequence[int]) -> list[Perm]:
    """Minimal representatives of every rearrangement of ``word``, in lexicographic word order."""
    return [min_rep(w) for w in sorted(set(_perms(word)))]
