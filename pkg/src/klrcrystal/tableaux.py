"""Young diagrams, column tableaux, semistandard and standard tableaux, residues."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cartan import CartanA, RootVec

__all__ = [
    "YoungDiagram",
    "ColumnTableau",
    "SSYTab",
    "StandardTab",
    "TableauError",
    "col",
    "conjugate",
    "xi_of",
    "standard_tableaux",
    "residue_sequence",
    "beta_of_column",
    "enumerate_ssyt",
    "hook_length_count",
    "hook_content_count",
]


class TableauError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class YoungDiagram:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        parts = tuple(p for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise TableauError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise TableauError(f"parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes (row, column), 1-based, in row reading order."""
        return [(r, c) for r, p in enumerate(self.parts, 1) for c in range(1, p + 1)]

    def to_json(self) -> list[int]:
        return list(self.parts)


def conjugate(lam: YoungDiagram) -> YoungDiagram:
    if not lam.parts:
        return YoungDiagram()
    return YoungDiagram(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


@dataclass(frozen=True, order=True)
class ColumnTableau:
    """A one-column semistandard tableau with entries in {1, ..., n}.

    The empty column and the full column are legal values; crystal code
    rejects them separately.
    """

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(t) for t in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise TableauError(f"column entries must strictly increase: {entries}")
        if entries and (entries[0] < 1 or entries[-1] > self.n):
            raise TableauError(f"column entries must lie in 1..{self.n}: {entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, a: int) -> bool:
        return a in self.entries

    def __iter__(self):
        return iter(self.entries)

    def is_highest(self) -> bool:
        return self.entries == tuple(range(1, len(self.entries) + 1))

    def to_json(self) -> dict:
        return {"n": self.n, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, data: dict) -> ColumnTableau:
        return cls(int(data["n"]), tuple(data["entries"]))

    def __str__(self) -> str:
        return "col(" + ",".join(map(str, self.entries)) + ")"


def col(*entries: int, n: int) -> ColumnTableau:
    return ColumnTableau(n, tuple(entries))


@dataclass(frozen=True, order=True)
class SSYTab:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        shape = YoungDiagram(tuple(len(r) for r in rows))
        if len(shape) >= self.n:
            raise TableauError(f"shape {shape.parts} has {len(shape)} rows; need fewer than n={self.n}")
        for r in rows:
            if any(a > b for a, b in zip(r, r[1:])):
                raise TableauError(f"row {r} is not weakly increasing")
            if any(not 1 <= x <= self.n for x in r):
                raise TableauError(f"entries of {r} must lie in 1..{self.n}")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise TableauError(f"columns must strictly increase: {rows}")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    def columns(self) -> list[ColumnTableau]:
        """Columns from left to right."""
        width = len(self.rows[0]) if self.rows else 0
        return [
            ColumnTableau(self.n, tuple(r[c] for r in self.rows if c < len(r)))
            for c in range(width)
        ]

    def content(self) -> Counter:
        return Counter(x for r in self.rows for x in r)

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> SSYTab:
        return cls(int(data["n"]), tuple(tuple(r) for r in data["rows"]))

    @classmethod
    def from_columns(cls, columns: Sequence[ColumnTableau]) -> SSYTab:
        n = columns[0].n
        height = max(len(c) for c in columns)
        rows = tuple(tuple(c.entries[i] for c in columns if i < len(c)) for i in range(height))
        return cls(n, rows)

    def label(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class StandardTab:
    shape: YoungDiagram
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            raise TableauError("rows do not match the shape")
        flat = sorted(x for r in self.rows for x in r)
        if flat != list(range(1, self.shape.size + 1)):
            raise TableauError(f"standard tableau must use 1..{self.shape.size} once")
        if not _strict_rows_cols(self.rows):
            raise TableauError(f"rows and columns must increase: {self.rows}")

    def box_of(self, entry: int) -> tuple[int, int]:
        """1-based (row, column) of ``entry``."""
        for p, r in enumerate(self.rows, 1):
            if entry in r:
                return p, r.index(entry) + 1
        raise KeyError(entry)

    def swap(self, j: int) -> StandardTab | None:
        """Exchange entries j and j+1; None when the result is not standard."""
        def f(x):
            return j + 1 if x == j else j if x == j + 1 else x
        rows = tuple(tuple(f(x) for x in r) for r in self.rows)
        if not _strict_rows_cols(rows):
            return None
        return StandardTab(self.shape, rows)


def _strict_rows_cols(rows) -> bool:
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def xi_of(T: ColumnTableau) -> YoungDiagram:
    """The diagram (t_k - k, t_{k-1} - (k-1), ..., t_1 - 1), zero parts dropped."""
    if not len(T):
        raise TableauError("xi is undefined for the empty column")
    k = len(T)
    return YoungDiagram(tuple(T.entries[a - 1] - a for a in range(k, 0, -1)))


@lru_cache(maxsize=None)
def _standard(parts: tuple[int, ...]) -> tuple[StandardTab, ...]:
    shape = YoungDiagram(parts)
    m = shape.size
    out = []
    filling = [[0] * p for p in parts]
    lengths = [0] * len(parts)

    def place(k):
        if k > m:
            out.append(StandardTab(shape, tuple(tuple(r) for r in filling)))
            return
        for r, p in enumerate(parts):
            c = lengths[r]
            if c < p and (r == 0 or lengths[r - 1] > c):
                filling[r][c] = k
                lengths[r] += 1
                place(k + 1)
                lengths[r] -= 1
                filling[r][c] = 0

    place(1)
    out.sort(key=lambda S: tuple(x for r in S.rows for x in r))
    return tuple(out)


def standard_tableaux(xi: YoungDiagram) -> list[StandardTab]:
    """All standard tableaux of shape xi, ordered lexicographically by row reading word."""
    return list(_standard(xi.parts))


def residue_sequence(S: StandardTab, k: int, n: int | None = None) -> tuple[int, ...]:
    """Residues q - p + k of the boxes holding m, m-1, ..., 1 (in that order)."""
    m = S.shape.size
    word = []
    for entry in range(m, 0, -1):
        p, c = S.box_of(entry)
        word.append(c - p + k)
    if n is not None and any(not 1 <= r <= n - 1 for r in word):
        raise TableauError(f"residue sequence {tuple(word)} leaves I = 1..{n - 1}")
    return tuple(word)


def beta_of_column(T: ColumnTableau, cd: CartanA) -> RootVec:
    """Lambda_k - wt(T) as the positive root sum over a of alpha_a + ... + alpha_{t_a - 1}."""
    if T.n != cd.n:
        raise TableauError(f"column over n={T.n} used with n={cd.n}")
    coeffs = [0] * cd.rank
    for a, t in enumerate(T.entries, 1):
        for j in range(a, t):
            coeffs[j - 1] += 1
    return RootVec(cd.n, tuple(coeffs))


def enumerate_ssyt(lam: YoungDiagram, n: int, content: Counter | None = None) -> list[SSYTab]:
    """All semistandard tableaux of shape lam with entries at most n.

    Ordered lexicographically by row reading word. ``content`` optionally
    restricts to a fixed multiset of entries.
    """
    if len(lam) >= n:
        raise TableauError(f"shape {lam.parts} needs fewer than n={n} rows")
    boxes = lam.boxes()
    grid: dict[tuple[int, int], int] = {}
    budget = Counter(content) if content is not None else None
    if budget is not None and sum(budget.values()) != lam.size:
        return []
    out = []

    def fill(idx):
        if idx == len(boxes):
            out.append(SSYTab(n, tuple(
                tuple(grid[(r, c)] for c in range(1, p + 1)) for r, p in enumerate(lam.parts, 1)
            )))
            return
        r, c = boxes[idx]
        lo = 1
        if c > 1:
            lo = max(lo, grid[(r, c - 1)])
        if r > 1:
            lo = max(lo, grid[(r - 1, c)] + 1)
        # room for the rest of the column below
        hi = n - (_column_height(lam, c) - r)
        for v in range(lo, hi + 1):
            if budget is not None:
                if not budget[v]:
                    continue
                budget[v] -= 1
            grid[(r, c)] = v
            fill(idx + 1)
            if budget is not None:
                budget[v] += 1
        grid.pop((r, c), None)

    fill(0)
    return out


def _column_height(lam: YoungDiagram, c: int) -> int:
    return sum(1 for p in lam.parts if p >= c)


def hook_length_count(lam: YoungDiagram) -> int:
    """Number of standard tableaux by the hook-length formula."""
    from math import factorial

    conj = conjugate(lam).parts
    prod = 1
    for r, c in lam.boxes():
        prod *= (lam.parts[r - 1] - c) + (conj[c - 1] - r) + 1
    return factorial(lam.size) // prod


def hook_content_count(lam: YoungDiagram, n: int) -> int:
    """Number of semistandard tableaux with entries <= n by the hook-content formula."""
    from fractions import Fraction

    conj = conjugate(lam).parts
    val = Fraction(1)
    for r, c in lam.boxes():
        hook = (lam.parts[r - 1] - c) + (conj[c - 1] - r) + 1
        val *= Fraction(n + c - r, hook)
    assert val.denominator == 1
    return int(val)


def columns_from_entries(columns: Iterable[Sequence[int]], n: int) -> list[ColumnTableau]:
    return [ColumnTableau(n, tuple(c)) for c in columns]
