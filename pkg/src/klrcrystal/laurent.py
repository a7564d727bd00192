"""Integer Laurent polynomials in one variable ``q``."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = ["Laurent", "q"]

Scalar = Union[int, "Laurent"]


class Laurent:
    """An element of Z[q, q^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so equality and hashing are exact.

    >>> str((q + 1) * (q - 1))
    '-1+q^2'
    >>> str(Laurent({-1: 2}).bar())
    '2q'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> Laurent:
        return cls({exponent: coefficient})

    @classmethod
    def coerce(cls, x: Scalar) -> Laurent:
        if isinstance(x, Laurent):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError(f"cannot convert {type(x).__name__} to Laurent")

    @classmethod
    def parse(cls, text: str) -> Laurent:
        """Inverse of :meth:`__str__` (accepts the ``q^k`` rendering)."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        terms: dict[int, int] = {}
        i = 0
        while i < len(s):
            j = i + 1
            while j < len(s) and not (s[j] in "+-" and s[j - 1] != "^"):
                j += 1
            tok = s[i:j]
            i = j
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            if "q" in tok:
                coef_s, _, exp_s = tok.partition("q")
                coef = int(coef_s) if coef_s else 1
                exp = int(exp_s[1:]) if exp_s.startswith("^") else 1
                if exp_s and not exp_s.startswith("^"):
                    raise ValueError(f"bad Laurent term {tok!r}")
            else:
                coef, exp = int(tok), 0
            terms[exp] = terms.get(exp, 0) + sign * coef
        return cls(terms)

    # -- inspection -----------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return next(iter(self._terms)) if self._terms else 0

    def max_degree(self) -> int:
        return next(reversed(self._terms)) if self._terms else 0

    def is_bar_invariant(self) -> bool:
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def at_one(self) -> int:
        return sum(self._terms.values())

    def substitute_power(self, k: int) -> Laurent:
        """Return ``p(q^k)``."""
        return Laurent({k * e: c for e, c in self._terms.items()})

    # -- arithmetic -----------------------------------------------------

    def bar(self) -> Laurent:
        return Laurent({-e: c for e, c in self._terms.items()})

    def shift(self, d: int) -> Laurent:
        return Laurent({e + d: c for e, c in self._terms.items()})

    def __add__(self, other: Scalar) -> Laurent:
        other = Laurent.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self) -> Laurent:
        return Laurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> Laurent:
        return self + (-Laurent.coerce(other))

    def __rsub__(self, other: Scalar) -> Laurent:
        return Laurent.coerce(other) - self

    def __mul__(self, other: Scalar) -> Laurent:
        other = Laurent.coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Laurent:
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only units may be inverted")
            (e, c), = self._terms.items()
            return Laurent({-e * (-k): c ** (-k)})
        out = Laurent({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"Laurent({str(self)!r})"


q = Laurent({1: 1})
