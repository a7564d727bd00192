"""Kashiwara operators on single columns and on their tensor products.

The tensor product follows Kashiwara's convention: in ``b1 (x) b2`` the
operator e_i acts on ``b1`` when ``phi_i(b1) >= eps_i(b2)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Protocol, Sequence

from .cartan import WeightVec
from .tableaux import ColumnTableau, SSYTab

__all__ = [
    "TensorElt",
    "CrystalStats",
    "stats",
    "apply_e",
    "apply_f",
    "to_highest_weight",
    "in_component",
    "in_highest_component",
    "highest_of_shape",
    "crystal_equivalent",
    "columns_of_ssyt",
    "component",
    "tensor_eps",
    "tensor_phi",
    "tensor_apply",
]


class FactorCrystal(Protocol):
    """Per-factor data needed by the tensor product rule."""

    def eps(self, i: int, b) -> int: ...
    def phi(self, i: int, b) -> int: ...
    def e(self, i: int, b): ...
    def f(self, i: int, b): ...


# -- generic tensor rule ----------------------------------------------------

def _prefix_phi(factors: Sequence, i: int, cr: FactorCrystal) -> list[int]:
    """phi_i of b1 (x) ... (x) bj for every prefix length j >= 1."""
    out = []
    phi = 0
    for j, b in enumerate(factors):
        pb, eb = cr.phi(i, b), cr.eps(i, b)
        phi = pb if j == 0 else max(phi + (pb - eb), pb)
        out.append(phi)
    return out


def tensor_eps(factors: Sequence, i: int, cr: FactorCrystal) -> int:
    eps = 0
    wt = 0
    for j, b in enumerate(factors):
        eb = cr.eps(i, b)
        eps = eb if j == 0 else max(eps, eb - wt)
        wt += cr.phi(i, b) - eb
    return eps


def tensor_phi(factors: Sequence, i: int, cr: FactorCrystal) -> int:
    return _prefix_phi(factors, i, cr)[-1]


def tensor_apply(factors: Sequence, i: int, cr: FactorCrystal, raising: bool) -> Optional[tuple]:
    """Apply e_i (raising) or f_i to b1 (x) ... (x) br; None when undefined."""
    phis = _prefix_phi(factors, i, cr)
    j = len(factors) - 1
    while j > 0:
        left_phi = phis[j - 1]
        right_eps = cr.eps(i, factors[j])
        if (left_phi >= right_eps) if raising else (left_phi > right_eps):
            j -= 1
        else:
            break
    new = (cr.e if raising else cr.f)(i, factors[j])
    if new is None:
        return None
    out = list(factors)
    out[j] = new
    return tuple(out)


# -- single columns ---------------------------------------------------------

class _Columns:
    @staticmethod
    def eps(i: int, T: ColumnTableau) -> int:
        return int((i + 1) in T and i not in T)

    @staticmethod
    def phi(i: int, T: ColumnTableau) -> int:
        return int(i in T and (i + 1) not in T)

    @staticmethod
    def e(i: int, T: ColumnTableau) -> Optional[ColumnTableau]:
        if (i + 1) in T and i not in T:
            return ColumnTableau(T.n, tuple(sorted(i if t == i + 1 else t for t in T)))
        return None

    @staticmethod
    def f(i: int, T: ColumnTableau) -> Optional[ColumnTableau]:
        if i in T and (i + 1) not in T:
            return ColumnTableau(T.n, tuple(sorted(i + 1 if t == i else t for t in T)))
        return None


COLUMNS = _Columns()


@dataclass(frozen=True, order=True)
class TensorElt:
    """b1 (x) ... (x) br with every factor a column in B(Lambda_k), 1 <= k <= n-1."""

    n: int
    factors: tuple[ColumnTableau, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise ValueError("a tensor element needs at least one factor")
        for T in factors:
            if T.n != self.n:
                raise ValueError(f"factor {T} lives over n={T.n}, expected {self.n}")
            if not 1 <= len(T) <= self.n - 1:
                raise ValueError(f"factor {T} is not an element of some B(Lambda_k), 1<=k<={self.n - 1}")

    @classmethod
    def of(cls, *columns: Sequence[int], n: int) -> TensorElt:
        return cls(n, tuple(ColumnTableau(n, tuple(c)) for c in columns))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(T) for T in self.factors)

    def to_json(self) -> dict:
        return {"n": self.n, "factors": [list(T.entries) for T in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> TensorElt:
        n = int(data["n"])
        return cls(n, tuple(ColumnTableau(n, tuple(f)) for f in data["factors"]))

    def __str__(self) -> str:
        return " (x) ".join(str(T) for T in self.factors)


@dataclass(frozen=True)
class CrystalStats:
    wt: WeightVec
    eps: tuple[int, ...]
    phi: tuple[int, ...]


def weight(b: TensorElt) -> WeightVec:
    n = b.n
    coords = [0] * (n - 1)
    for T in b.factors:
        for i in range(1, n):
            coords[i - 1] += int(i in T) - int((i + 1) in T)
    return WeightVec(n, tuple(coords))


def stats(b: TensorElt) -> CrystalStats:
    idx = range(1, b.n)
    return CrystalStats(
        wt=weight(b),
        eps=tuple(tensor_eps(b.factors, i, COLUMNS) for i in idx),
        phi=tuple(tensor_phi(b.factors, i, COLUMNS) for i in idx),
    )


def _check_i(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexError(f"index {i} outside I = 1..{n - 1}")


def apply_e(i: int, b: TensorElt) -> Optional[TensorElt]:
    _check_i(i, b.n)
    out = tensor_apply(b.factors, i, COLUMNS, raising=True)
    return None if out is None else TensorElt(b.n, out)


def apply_f(i: int, b: TensorElt) -> Optional[TensorElt]:
    _check_i(i, b.n)
    out = tensor_apply(b.factors, i, COLUMNS, raising=False)
    return None if out is None else TensorElt(b.n, out)


def to_highest_weight(b: TensorElt, largest_first: bool = False) -> tuple[TensorElt, list[int]]:
    """Raise b until every e_i kills it; also return the indices used, in order.

    Applying ``apply_f`` along ``reversed(path)`` recovers ``b``.
    """
    path = []
    order = range(b.n - 1, 0, -1) if largest_first else range(1, b.n)
    while True:
        for i in order:
            up = apply_e(i, b)
            if up is not None:
                b = up
                path.append(i)
                break
        else:
            return b, path


def is_highest_weight(b: TensorElt) -> bool:
    return all(apply_e(i, b) is None for i in range(1, b.n))


def in_component(b: TensorElt, highest: TensorElt) -> bool:
    if not is_highest_weight(highest):
        raise ValueError(f"{highest} is not a highest-weight element")
    return to_highest_weight(b)[0] == highest


def highest_of_shape(n: int, sizes: Sequence[int]) -> TensorElt:
    """b_{Lambda_{k1}} (x) ... (x) b_{Lambda_{kr}}."""
    return TensorElt(n, tuple(ColumnTableau(n, tuple(range(1, k + 1))) for k in sizes))


def in_highest_component(b: TensorElt) -> bool:
    """Membership in C_{Lambda_{k1}, ..., Lambda_{kr}} for the factor sizes of b."""
    return to_highest_weight(b)[0] == highest_of_shape(b.n, b.sizes)


def _neighbours(b: TensorElt):
    for i in range(1, b.n):
        yield ("e", i), apply_e(i, b)
        yield ("f", i), apply_f(i, b)


def crystal_equivalent(b: TensorElt, b2: TensorElt) -> bool:
    """Decide whether some isomorphism C(b) -> C(b2) sends b to b2.

    Both components are explored in lockstep; the partial bijection built so
    far must extend along every arrow.
    """
    if b.n != b2.n:
        return False
    fwd = {b: b2}
    bwd = {b2: b}
    queue = deque([b])
    while queue:
        x = queue.popleft()
        y = fwd[x]
        if stats(x) != stats(y):
            return False
        for (label, x_next), (_, y_next) in zip(_neighbours(x), _neighbours(y)):
            if (x_next is None) != (y_next is None):
                return False
            if x_next is None:
                continue
            seen_y = fwd.get(x_next)
            seen_x = bwd.get(y_next)
            if seen_y is None and seen_x is None:
                fwd[x_next] = y_next
                bwd[y_next] = x_next
                queue.append(x_next)
            elif seen_y != y_next or seen_x != x_next:
                return False
    return True


def component(b: TensorElt) -> set[TensorElt]:
    """Every element reachable from b by Kashiwara operators."""
    seen = {b}
    queue = deque([b])
    while queue:
        x = queue.popleft()
        for _, y in _neighbours(x):
            if y is not None and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def columns_of_ssyt(T: SSYTab) -> TensorElt:
    """T_r (x) ... (x) T_1, where T_k is the k-th column from the left."""
    return TensorElt(T.n, tuple(reversed(T.columns())))
