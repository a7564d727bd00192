"""Combinatorial R-matrix between two single columns via two-bit words.

A pair of columns (T1, T2) over {1..n} is encoded as ``b_n (x) ... (x) b_1``
where letter ``b_a`` records whether a lies in T1 and/or T2. The letters form
an A_1-crystal (01 --e--> 10), and the swap of column sizes k -> l is a power
of e or f on the encoded word.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .crystal import tensor_apply, tensor_eps, tensor_phi
from .tableaux import ColumnTableau

__all__ = [
    "LETTERS",
    "BitWord",
    "encode",
    "decode",
    "sigma",
    "sigma_bits",
    "format_bits",
    "parse_bits",
    "bit_e",
    "bit_f",
    "bit_eps",
    "bit_phi",
    "RMatrixError",
]

LETTERS = ("00", "10", "01", "11")

# A BitWord lists b_n, b_{n-1}, ..., b_1.
BitWord = tuple[str, ...]


class RMatrixError(RuntimeError):
    pass


class _Bits:
    """B = {00, 10, 01, 11} with the single A_1 arrow 10 -> 01 under f."""

    @staticmethod
    def eps(i: int, b: str) -> int:
        return int(b == "01")

    @staticmethod
    def phi(i: int, b: str) -> int:
        return int(b == "10")

    @staticmethod
    def e(i: int, b: str) -> Optional[str]:
        return "10" if b == "01" else None

    @staticmethod
    def f(i: int, b: str) -> Optional[str]:
        return "01" if b == "10" else None


BITS = _Bits()


def bit_eps(w: BitWord) -> int:
    return tensor_eps(w, 1, BITS)


def bit_phi(w: BitWord) -> int:
    return tensor_phi(w, 1, BITS)


def bit_e(w: BitWord) -> Optional[BitWord]:
    return tensor_apply(w, 1, BITS, raising=True)


def bit_f(w: BitWord) -> Optional[BitWord]:
    return tensor_apply(w, 1, BITS, raising=False)


def encode(first: ColumnTableau, second: ColumnTableau, n: int) -> BitWord:
    for T in (first, second):
        if T.entries and T.entries[-1] > n:
            raise RMatrixError(f"entry {T.entries[-1]} exceeds n={n}")
    return tuple(f"{int(a in first)}{int(a in second)}" for a in range(n, 0, -1))


def decode(w: Sequence[str]) -> tuple[ColumnTableau, ColumnTableau]:
    n = len(w)
    first = tuple(sorted(n - pos for pos, b in enumerate(w) if b[0] == "1"))
    second = tuple(sorted(n - pos for pos, b in enumerate(w) if b[1] == "1"))
    return ColumnTableau(n, first), ColumnTableau(n, second)


def sigma_bits(first: ColumnTableau, second: ColumnTableau, n: int) -> tuple[BitWord, BitWord]:
    """The encoded input and output words of :func:`sigma`."""
    k, l = len(first), len(second)
    if not (1 <= k <= n - 1 and 1 <= l <= n - 1):
        raise RMatrixError(f"column sizes must lie in 1..{n - 1}, got {k} and {l}")
    w_in = encode(first, second, n)
    w = w_in
    step = bit_e if k <= l else bit_f
    for _ in range(abs(l - k)):
        w = step(w)
        if w is None:
            raise RMatrixError(f"operator power undefined on {format_bits(w_in)}")
    return w_in, w


def sigma(first: ColumnTableau, second: ColumnTableau, n: int) -> tuple[ColumnTableau, ColumnTableau]:
    """The crystal isomorphism B(Lambda_k) (x) B(Lambda_l) -> B(Lambda_l) (x) B(Lambda_k)."""
    _, w_out = sigma_bits(first, second, n)
    return decode(w_out)


def format_bits(w: Sequence[str]) -> str:
    return " ⊗ ".join(w)


def parse_bits(text: str) -> BitWord:
    letters = tuple(t for t in text.replace("⊗", " ").replace("x", " ").split() if t)
    for b in letters:
        if b not in LETTERS:
            raise ValueError(f"not a bit letter: {b!r}")
    return letters
