"""Type A_{n-1} Cartan datum: weight and root lattices with the exact bilinear form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

__all__ = [
    "CartanA",
    "WeightVec",
    "RootVec",
    "pair_form",
    "coroot_pairing",
    "root_to_weight",
    "DimensionError",
]


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class CartanA:
    """Cartan datum of type A_{n-1}; the index set is ``I = {1, ..., n-1}``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"type A_(n-1) needs n >= 2, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n - 1

    @property
    def index_set(self) -> range:
        return range(1, self.n)

    def entry(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0

    def matrix(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in self.index_set] for i in self.index_set]

    def inverse_entry(self, i: int, j: int) -> Fraction:
        self._check_index(i)
        self._check_index(j)
        return Fraction(min(i, j) * (self.n - max(i, j)), self.n)

    def simple_root(self, i: int) -> RootVec:
        self._check_index(i)
        return RootVec(self.n, tuple(int(j == i) for j in self.index_set))

    def fundamental_weight(self, i: int) -> WeightVec:
        self._check_index(i)
        return WeightVec(self.n, tuple(int(j == i) for j in self.index_set))

    def zero_weight(self) -> WeightVec:
        return WeightVec(self.n, (0,) * self.rank)

    def zero_root(self) -> RootVec:
        return RootVec(self.n, (0,) * self.rank)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"index {i} outside I = {{1..{self.n - 1}}}")


def _check_len(n: int, coords: Sequence[int], what: str) -> tuple[int, ...]:
    coords = tuple(int(c) for c in coords)
    if len(coords) != n - 1:
        raise DimensionError(f"{what} for n={n} needs {n - 1} coordinates, got {len(coords)}")
    return coords


@dataclass(frozen=True)
class WeightVec:
    """Integral weight in fundamental-weight coordinates (coordinate i is <h_i, wt>)."""

    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _check_len(self.n, self.coords, "weight"))

    @property
    def cartan(self) -> CartanA:
        return CartanA(self.n)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: WeightVec | RootVec) -> WeightVec:
        other = _as_weight(other, self.n)
        return WeightVec(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: WeightVec | RootVec) -> WeightVec:
        return self + (-_as_weight(other, self.n))

    def __neg__(self) -> WeightVec:
        return WeightVec(self.n, tuple(-c for c in self.coords))

    def __mul__(self, k: int) -> WeightVec:
        return WeightVec(self.n, tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = [f"{c}*L{i}" if c != 1 else f"L{i}" for i, c in enumerate(self.coords, 1) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class RootVec:
    """Element of the root lattice in simple-root coordinates."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _check_len(self.n, self.coeffs, "root"))

    def is_positive(self) -> bool:
        """Membership in Q_+ (all coefficients nonnegative)."""
        return all(c >= 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def coefficient(self, i: int) -> int:
        return self.coeffs[i - 1]

    def __add__(self, other: RootVec) -> RootVec:
        if isinstance(other, WeightVec):
            return other + self
        _same_n(self, other)
        return RootVec(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RootVec) -> RootVec:
        if isinstance(other, WeightVec):
            return root_to_weight(self, CartanA(self.n)) - other
        return self + (-other)

    def __neg__(self) -> RootVec:
        return RootVec(self.n, tuple(-c for c in self.coeffs))

    def __mul__(self, k: int) -> RootVec:
        return RootVec(self.n, tuple(k * c for c in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = [f"{c}*a{i}" if c != 1 else f"a{i}" for i, c in enumerate(self.coeffs, 1) if c]
        return " + ".join(terms) if terms else "0"


Vec = Union[WeightVec, RootVec]


def _same_n(x: Vec, y: Vec) -> None:
    if x.n != y.n:
        raise DimensionError(f"operands live over n={x.n} and n={y.n}")


def _as_weight(x: Vec, n: int) -> WeightVec:
    if x.n != n:
        raise DimensionError(f"operands live over n={n} and n={x.n}")
    if isinstance(x, RootVec):
        return root_to_weight(x, CartanA(n))
    return x


def root_to_weight(beta: RootVec, cd: CartanA) -> WeightVec:
    """Rewrite a root-lattice element in fundamental-weight coordinates."""
    if beta.n != cd.n:
        raise DimensionError(f"root over n={beta.n} used with n={cd.n}")
    idx = list(cd.index_set)
    return WeightVec(cd.n, tuple(sum(cd.entry(i, j) * beta.coeffs[j - 1] for j in idx) for i in idx))


def pair_form(x: Vec, y: Vec, cd: CartanA) -> Fraction:
    """The symmetric form with (a_i, a_j) = a_ij, (a_i, L_j) = delta_ij."""
    if x.n != cd.n or y.n != cd.n:
        raise DimensionError(f"operands over n={x.n}, n={y.n} paired in n={cd.n}")
    idx = cd.index_set
    if isinstance(x, RootVec) and isinstance(y, RootVec):
        return Fraction(sum(
            x.coeffs[i - 1] * cd.entry(i, j) * y.coeffs[j - 1]
            for i in idx for j in idx if x.coeffs[i - 1] and y.coeffs[j - 1]
        ))
    if isinstance(x, RootVec):
        return Fraction(sum(a * b for a, b in zip(x.coeffs, y.coords)))
    if isinstance(y, RootVec):
        return Fraction(sum(a * b for a, b in zip(x.coords, y.coeffs)))
    return sum(
        (x.coords[i - 1] * y.coords[j - 1] * cd.inverse_entry(i, j)
         for i in idx for j in idx if x.coords[i - 1] and y.coords[j - 1]),
        Fraction(0),
    )


def coroot_pairing(i: int, lam: Vec) -> int:
    """<h_i, lam>."""
    cd = CartanA(lam.n)
    cd._check_index(i)
    if isinstance(lam, RootVec):
        lam = root_to_weight(lam, cd)
    return lam.coords[i - 1]
