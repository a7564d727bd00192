"""Transition entries between standard monomials and simples, and graded
decomposition numbers of convolution products of column modules."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Sequence

from .cartan import CartanA, pair_form
from .laurent import Laurent
from .permutations import compose, kl_poly, length, longest, min_rep
from .qcharacter import QChar, qch_sp, shuffle_all, solve_unitriangular
from .tableaux import (
    ColumnTableau,
    SSYTab,
    YoungDiagram,
    beta_of_column,
    conjugate,
    enumerate_ssyt,
)

__all__ = [
    "ColumnStrictConcat",
    "TableauWords",
    "TransitionError",
    "UnitriangularityError",
    "TransitionMatrix",
    "tableau_words",
    "transition_entry",
    "decomposition_shift",
    "graded_decomposition",
    "standard_monomial",
    "simple_qcharacters",
    "parse_columns",
    "format_columns",
]


class TransitionError(ValueError):
    pass


class UnitriangularityError(TransitionError, ArithmeticError):
    """A computed transition matrix is not unitriangular; signals a convention bug."""


@dataclass(frozen=True, order=True)
class ColumnStrictConcat:
    """T_1 * ... * T_r: columns left to right, heights weakly decreasing.

    Rows need not be weakly increasing.
    """

    n: int
    columns: tuple[ColumnTableau, ...]

    def __post_init__(self):
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        if not cols:
            raise TransitionError("at least one column is required")
        for c in cols:
            if c.n != self.n:
                raise TransitionError(f"column {c} lives over n={c.n}, expected {self.n}")
            if not 1 <= len(c) <= self.n - 1:
                raise TransitionError(f"column {c} must have 1..{self.n - 1} boxes")
        mu = [len(c) for c in cols]
        if any(a < b for a, b in zip(mu, mu[1:])):
            raise TransitionError(f"column heights {mu} must weakly decrease")

    @classmethod
    def of(cls, tab: SSYTab | ColumnStrictConcat) -> ColumnStrictConcat:
        if isinstance(tab, ColumnStrictConcat):
            return tab
        return cls(tab.n, tuple(tab.columns()))

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    @property
    def shape(self) -> YoungDiagram:
        return conjugate(YoungDiagram(self.mu))

    def content(self) -> Counter:
        return Counter(x for c in self.columns for x in c)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(c.entries[i] for c in self.columns if i < len(c)) for i in range(self.mu[0])
        )

    def is_semistandard(self) -> bool:
        return all(a <= b for r in self.rows for a, b in zip(r, r[1:]))

    def to_ssyt(self) -> SSYTab:
        return SSYTab(self.n, self.rows)

    def label(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def __str__(self) -> str:
        return self.label()


def parse_columns(text: str, n: int) -> list[ColumnTableau]:
    """``"5|3,4|1,2|1,2,3"`` -> [T_1, ..., T_r]; the rightmost factor is T_1."""
    parts = [p.strip() for p in text.split("|")]
    if any(not p for p in parts):
        raise TransitionError(f"empty column in {text!r}")
    cols = [ColumnTableau(n, tuple(int(x) for x in p.split(","))) for p in parts]
    return cols[::-1]


def format_columns(columns: Sequence[ColumnTableau]) -> str:
    return "|".join(",".join(map(str, c.entries)) for c in reversed(columns))


@dataclass(frozen=True)
class TableauWords:
    nu: tuple[int, ...]  # multiplicities of the letters of gamma, largest letter first
    gamma: tuple[int, ...]
    d: tuple[int, ...]
    mu_blocks: tuple[int, ...]  # column heights in reading order (rightmost column first)


def tableau_words(T: SSYTab | ColumnStrictConcat) -> TableauWords:
    T = ColumnStrictConcat.of(T)
    gamma = tuple(x for c in reversed(T.columns) for x in c)
    d = min_rep(gamma)
    dec = sorted(gamma, reverse=True)
    # gamma . d^{-1} = dec, i.e. gamma_i = dec_{d(i)}
    if any(gamma[i] != dec[d[i] - 1] for i in range(len(gamma))):
        raise TransitionError(f"no coset representative sorts {gamma}")
    nu = tuple(Counter(gamma)[a] for a in sorted(set(gamma), reverse=True))
    return TableauWords(nu=nu, gamma=gamma, d=d, mu_blocks=tuple(reversed(T.mu)))


def _double_coset_reps(tw: TableauWords) -> set[tuple[int, ...]]:
    """Minimal representatives z of the cosets met by gamma permuted inside column blocks."""
    starts = [sum(tw.mu_blocks[:i]) for i in range(len(tw.mu_blocks))]
    out = set()
    seen_words = set()
    for blocks in product(*[permutations(tw.gamma[s:s + b]) for s, b in zip(starts, tw.mu_blocks)]):
        word = tuple(x for blk in blocks for x in blk)
        if word not in seen_words:
            seen_words.add(word)
            out.add(min_rep(word))
    return out


def transition_entry(T: SSYTab | ColumnStrictConcat, T2: SSYTab | ColumnStrictConcat) -> Laurent:
    """A_{T,T2}(q) from Kazhdan-Lusztig polynomials of the symmetric group.

    The longest element w0 of S_m multiplies on the right of both arguments
    of P; this convention reproduces bar-invariance of the simples.
    """
    T, T2 = ColumnStrictConcat.of(T), ColumnStrictConcat.of(T2)
    if T.mu != T2.mu:
        raise TransitionError(f"shapes differ: {T.shape.parts} vs {T2.shape.parts}")
    if T.n != T2.n:
        raise TransitionError(f"n differs: {T.n} vs {T2.n}")
    if T.content() != T2.content():
        return Laurent()
    tw, tw2 = tableau_words(T), tableau_words(T2)
    m = len(tw.gamma)
    w0 = longest(m)
    y = compose(tw2.d, w0)
    l_d, l_d2 = length(tw.d), length(tw2.d)
    acc: dict[int, int] = {}
    for z in _double_coset_reps(tw):
        sign = (-1) ** (length(z) + l_d2)
        for e, c in enumerate(kl_poly(compose(z, w0), y)):
            if c:
                acc[-2 * e] = acc.get(-2 * e, 0) + sign * c
    shift = l_d - l_d2
    return Laurent({e + shift: c * (-1) ** (shift % 2) for e, c in acc.items()})


@dataclass
class TransitionMatrix:
    """Entries A_{T,T'} for rows T (column-strict) and columns T' (semistandard)."""

    rows: list[ColumnStrictConcat]
    cols: list[SSYTab]
    entries: dict[tuple[ColumnStrictConcat, SSYTab], Laurent]

    @classmethod
    def build(cls, shape: YoungDiagram, n: int, content: Optional[Counter] = None,
              rows: Optional[Sequence[ColumnStrictConcat]] = None) -> TransitionMatrix:
        """Columns: every semistandard tableau of the shape (and content);
        rows default to the same tableaux. Unitriangularity is asserted."""
        cols = enumerate_ssyt(shape, n, content)
        if rows is None:
            rows = [ColumnStrictConcat.of(t) for t in cols]
        entries = {}
        for R in rows:
            for C in cols:
                a = transition_entry(R, C)
                if a:
                    entries[R, C] = a
        out = cls(list(rows), cols, entries)
        out.check_unitriangular()
        return out

    def entry(self, T: ColumnStrictConcat, T2: SSYTab) -> Laurent:
        return self.entries.get((T, T2), Laurent())

    def check_unitriangular(self) -> None:
        """Semistandard rows: 1 on the diagonal, off-diagonal support at strictly shorter d."""
        for R in self.rows:
            if not R.is_semistandard():
                continue
            lr = length(tableau_words(R).d)
            diag = R.to_ssyt()
            if self.entry(R, diag) != 1:
                raise UnitriangularityError(f"diagonal entry at {R} is {self.entry(R, diag)}, not 1")
            for C in self.cols:
                if C != diag and self.entry(R, C) and length(tableau_words(C).d) >= lr:
                    raise UnitriangularityError(f"entry ({R}, {C}) breaks unitriangularity")

    def to_json(self) -> dict:
        return {
            "rows": [r.label() for r in self.rows],
            "cols": [c.label() for c in self.cols],
            "entries": [[str(self.entry(r, c)) for c in self.cols] for r in self.rows],
        }


def decomposition_shift(columns: Sequence[ColumnTableau], cd: CartanA) -> int:
    """sum over a < b of (beta_a, Lambda_{mu_b}) for columns T_1, ..., T_r."""
    total = 0
    for a in range(len(columns)):
        beta = beta_of_column(columns[a], cd)
        for b in range(a + 1, len(columns)):
            val = pair_form(beta, cd.fundamental_weight(len(columns[b])), cd)
            assert val.denominator == 1
            total += int(val)
    return total


def graded_decomposition(columns: Sequence[ColumnTableau], cd: CartanA) -> dict[SSYTab, Laurent]:
    """[Sp^{T_r} o ... o Sp^{T_1} : L(T')]_q for columns T_1, ..., T_r (left to right)."""
    T = ColumnStrictConcat(cd.n, tuple(columns))
    shift = decomposition_shift(T.columns, cd)
    out = {}
    for T2 in enumerate_ssyt(T.shape, cd.n, T.content()):
        a = transition_entry(T, T2)
        if a:
            out[T2] = a.shift(-shift)
    return out


def standard_monomial(columns: Sequence[ColumnTableau], cd: CartanA) -> QChar:
    """q^{shift} qch(Sp^{T_r} o ... o Sp^{T_1})."""
    chars = [qch_sp(c, cd) for c in reversed(columns)]
    return shuffle_all(chars, cd).shift(decomposition_shift(columns, cd))


def simple_qcharacters(shape: YoungDiagram, content: Counter, cd: CartanA) -> dict[SSYTab, QChar]:
    """qch L(T) for every semistandard T of the given shape and content."""
    tabs = enumerate_ssyt(shape, cd.n, content)
    if not tabs:
        return {}
    tm = TransitionMatrix.build(shape, cd.n, content)
    order = sorted(tabs, key=lambda t: (length(tableau_words(t).d), t.rows))
    monos = [(t, standard_monomial(t.columns(), cd)) for t in order]
    matrix = {
        t: {c: tm.entry(ColumnStrictConcat.of(t), c) for c in tabs if tm.entry(ColumnStrictConcat.of(t), c)}
        for t in tabs
    }
    return dict(solve_unitriangular(monos, matrix))
