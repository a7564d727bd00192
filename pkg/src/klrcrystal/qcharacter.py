"""q-characters as Laurent-weighted words and the quantum shuffle product."""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .cartan import CartanA, RootVec
from .laurent import Laurent
from .tableaux import (
    ColumnTableau,
    TableauError,
    beta_of_column,
    residue_sequence,
    standard_tableaux,
    xi_of,
)

__all__ = [
    "QChar",
    "QCharError",
    "NotUnitriangularError",
    "bar",
    "qch_sp",
    "shuffle",
    "shuffle_all",
    "shift",
    "solve_unitriangular",
    "word_content",
]

Word = tuple[int, ...]


class QCharError(ValueError):
    pass


class NotUnitriangularError(QCharError, ArithmeticError):
    """The coefficient matrix of a solve is not unitriangular in the given order."""


def bar(p: Laurent) -> Laurent:
    return p.bar()


def word_content(word: Sequence[int], n: int) -> RootVec:
    coeffs = [0] * (n - 1)
    for i in word:
        coeffs[i - 1] += 1
    return RootVec(n, tuple(coeffs))


class QChar:
    """A finite sum of words over I with Laurent coefficients, all of one content."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Word, Laurent | int] | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Laurent] = {}
        for w, c in items:
            w = tuple(int(a) for a in w)
            if any(not 1 <= a <= n - 1 for a in w):
                raise QCharError(f"word {w} has letters outside I = 1..{n - 1}")
            acc[w] = acc.get(w, Laurent()) + Laurent.coerce(c)
        self._terms = {w: acc[w] for w in sorted(acc) if acc[w]}
        contents = {tuple(sorted(w)) for w in self._terms}
        if len(contents) > 1:
            raise QCharError("all words of a q-character must share one content")

    @classmethod
    def word(cls, n: int, w: Sequence[int], coeff: Laurent | int = 1) -> QChar:
        return cls(n, {tuple(w): coeff})

    @classmethod
    def one(cls, n: int) -> QChar:
        return cls(n, {(): 1})

    def items(self):
        return self._terms.items()

    def words(self) -> list[Word]:
        return list(self._terms)

    def coefficient(self, w: Sequence[int]) -> Laurent:
        return self._terms.get(tuple(w), Laurent())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def content(self) -> RootVec:
        if not self._terms:
            return RootVec(self.n, (0,) * (self.n - 1))
        return word_content(next(iter(self._terms)), self.n)

    def bar(self) -> QChar:
        return QChar(self.n, {w: c.bar() for w, c in self._terms.items()})

    def is_bar_invariant(self) -> bool:
        return all(c.is_bar_invariant() for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c.is_nonnegative() for c in self._terms.values())

    def shift(self, d: int) -> QChar:
        return QChar(self.n, {w: c.shift(d) for w, c in self._terms.items()})

    def scale(self, c: Laurent | int) -> QChar:
        c = Laurent.coerce(c)
        return QChar(self.n, {w: c * v for w, v in self._terms.items()})

    def _check(self, other: QChar) -> None:
        if not isinstance(other, QChar):
            raise TypeError(f"expected QChar, got {type(other).__name__}")
        if other.n != self.n:
            raise QCharError(f"q-characters over n={self.n} and n={other.n}")

    def __add__(self, other: QChar) -> QChar:
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, Laurent()) + c
        return QChar(self.n, out)

    def __neg__(self) -> QChar:
        return QChar(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: QChar) -> QChar:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QChar):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self._terms.items():
            ws = "(" + ",".join(map(str, w)) + ")"
            parts.append(ws if c == 1 else f"({c}){ws}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QChar(n={self.n}, {str(self)})"

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [[list(w), str(c)] for w, c in self._terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> QChar:
        return cls(int(data["n"]), [(tuple(w), Laurent.parse(c)) for w, c in data["terms"]])


def shift(x: QChar, d: int) -> QChar:
    return x.shift(d)


def qch_sp(T: ColumnTableau, cd: CartanA) -> QChar:
    """Sum of residue sequences of the standard tableaux of shape xi_T."""
    k = len(T)
    if not 1 <= k <= cd.n - 1:
        raise QCharError(f"column size {k} outside 1..{cd.n - 1}")
    if T.n != cd.n:
        raise QCharError(f"column over n={T.n} used with n={cd.n}")
    words = [residue_sequence(S, k, cd.n) for S in standard_tableaux(xi_of(T))]
    out = QChar(cd.n, {w: 1 for w in words})
    if out.content != beta_of_column(T, cd):
        raise TableauError(f"content of qch Sp^{T} differs from beta_T")
    return out


def _shuffle_words(u: Word, v: Word, cd: CartanA) -> dict[Word, int]:
    """Interleavings of u and v with the q-exponent of each (may repeat words)."""
    m, total = len(u), len(u) + len(v)
    out: dict[Word, Counter] = {}
    for pos in combinations(range(total), m):
        slots = set(pos)
        z = []
        deg = 0
        passed: list[int] = []
        ui = vi = 0
        for p in range(total):
            if p in slots:
                a = u[ui]
                ui += 1
                for b in passed:
                    deg -= _cartan(a, b)
                z.append(a)
            else:
                b = v[vi]
                vi += 1
                passed.append(b)
                z.append(b)
        out.setdefault(tuple(z), Counter())[deg] += 1
    return out


def _cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def shuffle(x: QChar, y: QChar, cd: CartanA) -> QChar:
    """Quantum shuffle: letters of y jumping ahead of letters of x cost q^{-(a, b)}.

    This is the word-level image of the convolution product [M o N].
    """
    if x.n != y.n or x.n != cd.n:
        raise QCharError(f"shuffle over mismatched n: {x.n}, {y.n}, {cd.n}")
    acc: dict[Word, Laurent] = {}
    cache: dict[tuple[Word, Word], dict] = {}
    for u, cu in x.items():
        for v, cv in y.items():
            key = (u, v)
            if key not in cache:
                cache[key] = _shuffle_words(u, v, cd)
            coeff = cu * cv
            for z, degs in cache[key].items():
                acc[z] = acc.get(z, Laurent()) + coeff * Laurent(degs)
    return QChar(cd.n, acc)


def shuffle_all(chars: Sequence[QChar], cd: CartanA) -> QChar:
    """Left-to-right fold: chars[0] o chars[1] o ... ."""
    out = QChar.one(cd.n)
    for c in chars:
        out = shuffle(out, c, cd)
    return out


def solve_unitriangular(
    monomials: Sequence[tuple[Hashable, QChar]],
    matrix: Mapping[Hashable, Mapping[Hashable, Laurent | int]],
) -> list[tuple[Hashable, QChar]]:
    """Recover simples from ``monomial[a] = sum_b matrix[a][b] * simple[b]``.

    ``monomials`` fixes the order; row a may only reference labels at or
    before a, with coefficient 1 on a itself.
    """
    labels = [lab for lab, _ in monomials]
    if len(set(labels)) != len(labels):
        raise QCharError("duplicate monomial labels")
    position = {lab: i for i, lab in enumerate(labels)}
    for a, row in matrix.items():
        if a not in position:
            raise QCharError(f"matrix row {a!r} has no monomial")
        for b, c in row.items():
            if b not in position:
                raise QCharError(f"matrix entry ({a!r}, {b!r}) refers to an unknown label")
            if Laurent.coerce(c) and position[b] > position[a]:
                raise NotUnitriangularError(f"matrix is not lower unitriangular at ({a!r}, {b!r})")
    simples: dict[Hashable, QChar] = {}
    out = []
    for a, mono in monomials:
        row = {b: Laurent.coerce(c) for b, c in matrix.get(a, {a: 1}).items()}
        if row.get(a) != Laurent({0: 1}):
            raise NotUnitriangularError(f"diagonal entry for {a!r} is not 1")
        rest = mono
        for b, c in row.items():
            if b != a and c:
                rest = rest - simples[b].scale(c)
        simples[a] = rest
        out.append((a, rest))
    return out
