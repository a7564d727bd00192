"""Homogeneous modules Sp^T for one-column tableaux, relation checkers, and
degree/commutation calculators for convolution products of column modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .cartan import CartanA, RootVec, WeightVec, pair_form
from .crystal import TensorElt, crystal_equivalent, in_highest_component
from .qcharacter import QChar, qch_sp
from .tableaux import (
    ColumnTableau,
    StandardTab,
    beta_of_column,
    residue_sequence,
    standard_tableaux,
    xi_of,
)

__all__ = [
    "QParams",
    "SpModule",
    "RelationCheck",
    "DegreeHypothesisError",
    "build_sp",
    "verify_qha_relations",
    "verify_cyclotomic",
    "all_passed",
    "head_shift_t",
    "hom_degree_d",
    "lambda_invariants",
    "strongly_commute",
    "column_weight",
]

Word = tuple[int, ...]
Vector = dict[int, int]  # basis index -> coefficient
Poly2 = dict[tuple[int, int], int]  # (deg u, deg v) -> coefficient


class DegreeHypothesisError(ValueError):
    """A crystal-side hypothesis of a degree formula does not hold."""


@dataclass(frozen=True)
class QParams:
    """The polynomials Q_{i,j}(u, v), keyed by ordered pairs (i, j)."""

    n: int
    polys: dict[tuple[int, int], Poly2]

    @classmethod
    def type_a(cls, n: int) -> QParams:
        polys: dict[tuple[int, int], Poly2] = {}
        for i in range(1, n):
            for j in range(1, n):
                if i == j:
                    polys[i, j] = {}
                elif j == i + 1:
                    polys[i, j] = {(1, 0): 1, (0, 1): -1}
                elif j == i - 1:
                    polys[i, j] = {(1, 0): -1, (0, 1): 1}
                else:
                    polys[i, j] = {(0, 0): 1}
        return cls(n, polys)

    def __call__(self, i: int, j: int) -> Poly2:
        return self.polys[i, j]

    def problems(self) -> list[str]:
        """Violations of the structural conditions on the family (empty when fine)."""
        out = []
        cd = CartanA(self.n)
        for i in cd.index_set:
            for j in cd.index_set:
                p, p_t = self.polys[i, j], self.polys[j, i]
                if {(b, a): c for (a, b), c in p_t.items()} != p:
                    out.append(f"Q_{i},{j}(u,v) != Q_{j},{i}(v,u)")
                if i == j:
                    if p:
                        out.append(f"Q_{i},{i} is not zero")
                    continue
                # every monomial u^a v^b has 2a + 2b = -2 a_ij
                for (a, b) in p:
                    if 2 * a + 2 * b != -2 * cd.entry(i, j):
                        out.append(f"Q_{i},{j} has a term of the wrong degree")
                if not p.get((-cd.entry(i, j), 0)):
                    out.append(f"leading coefficient of Q_{i},{j} vanishes")
                if not _is_poly_in_difference(p):
                    out.append(f"Q_{i},{j} is not a polynomial in u - v")
        return out


def _is_poly_in_difference(p: Poly2) -> bool:
    # Homogeneous of degree d: a polynomial in u - v iff it equals c (u - v)^d.
    if not p:
        return True
    degs = {a + b for a, b in p}
    if len(degs) != 1:
        return False
    d = degs.pop()
    c = p.get((d, 0), 0)
    from math import comb

    return all(p.get((d - k, k), 0) == c * comb(d, k) * (-1) ** k for k in range(d + 1))


@dataclass
class SpModule:
    """Sp^T: basis ST(xi_T), x acting by zero, tau_p swapping the entries that
    sit at word positions p, p+1 of the residue sequence."""

    T: ColumnTableau
    k: int
    n: int
    basis: tuple[StandardTab, ...]
    residues: tuple[Word, ...]
    tau: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def length(self) -> int:
        return len(self.residues[0]) if self.residues else 0

    def idempotent_support(self, nu: Sequence[int]) -> list[int]:
        nu = tuple(nu)
        return [s for s, r in enumerate(self.residues) if r == nu]

    def qch(self) -> QChar:
        out = QChar(self.n)
        for r in self.residues:
            out = out + QChar.word(self.n, r)
        return out

    # -- action on vectors ---------------------------------------------

    def e(self, nu: Sequence[int], v: Vector) -> Vector:
        nu = tuple(nu)
        return {s: c for s, c in v.items() if self.residues[s] == nu}

    def x(self, a: int, v: Vector) -> Vector:
        self._check_pos(a, self.length)
        return {}

    def tau_apply(self, p: int, v: Vector) -> Vector:
        self._check_pos(p, self.length - 1)
        out: Vector = {}
        for s, c in v.items():
            hit = self.tau.get((p, s))
            if hit is not None:
                sign, t = hit
                out[t] = out.get(t, 0) + sign * c
        return {s: c for s, c in out.items() if c}

    def _check_pos(self, a: int, top: int) -> None:
        if not 1 <= a <= top:
            raise IndexError(f"generator index {a} outside 1..{top}")


def build_sp(T: ColumnTableau, cd: CartanA) -> SpModule:
    k = len(T)
    if not 1 <= k <= cd.n - 1:
        raise ValueError(f"column size {k} outside 1..{cd.n - 1}")
    basis = tuple(standard_tableaux(xi_of(T)))
    residues = tuple(residue_sequence(S, k, cd.n) for S in basis)
    index = {S: s for s, S in enumerate(basis)}
    m = basis[0].shape.size
    tau = {}
    for s, S in enumerate(basis):
        for p in range(1, m):
            # word position p holds entry m + 1 - p
            swapped = S.swap(m - p)
            if swapped is not None:
                tau[p, s] = (1, index[swapped])
    return SpModule(T=T, k=k, n=cd.n, basis=basis, residues=residues, tau=tau)


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    instance: str
    status: str  # "pass" | "fail"

    def to_json(self) -> dict:
        return {"relation": self.relation, "instance": self.instance, "status": self.status}


def all_passed(report: Sequence[RelationCheck]) -> bool:
    return all(r.status == "pass" for r in report)


def _vadd(*vs: Vector, signs: Sequence[int] | None = None) -> Vector:
    out: Vector = {}
    for v, sg in zip(vs, signs or [1] * len(vs)):
        for s, c in v.items():
            out[s] = out.get(s, 0) + sg * c
    return {s: c for s, c in out.items() if c}


def _x_monomial(M: SpModule, exps: dict[int, int], v: Vector) -> Vector:
    for a, e in exps.items():
        for _ in range(e):
            v = M.x(a, v)
    return v


def _apply_q(M: SpModule, poly: Poly2, a: int, b: int, v: Vector) -> Vector:
    """Q(x_a, x_b) v."""
    out: Vector = {}
    for (da, db), c in poly.items():
        term = _x_monomial(M, {a: da, b: db}, v)
        out = _vadd(out, {s: c * t for s, t in term.items()})
    return out


def _apply_divided(M: SpModule, poly: Poly2, k: int, v: Vector) -> Vector:
    """(Q(x_k, x_{k+1}) - Q(x_{k+2}, x_{k+1})) / (x_k - x_{k+2}) applied to v."""
    out: Vector = {}
    for (du, dv), c in poly.items():
        for a in range(du):
            term = _x_monomial(M, {k: a, k + 2: du - 1 - a, k + 1: dv}, v)
            out = _vadd(out, {s: c * t for s, t in term.items()})
    return out


def _swap_word(nu: Word, p: int) -> Word:
    w = list(nu)
    w[p - 1], w[p] = w[p], w[p - 1]
    return tuple(w)


def verify_qha_relations(M: SpModule, qp: Optional[QParams] = None) -> list[RelationCheck]:
    """Evaluate every defining relation on every basis vector."""
    qp = qp or QParams.type_a(M.n)
    report: list[RelationCheck] = []
    m = M.length
    words = sorted(set(M.residues))

    def check(name: str, instance: str, lhs: Vector, rhs: Vector) -> None:
        report.append(RelationCheck(name, instance, "pass" if lhs == rhs else "fail"))

    for s in range(M.dim):
        vec = {s: 1}
        tag = f"S{s}"
        for nu in words:
            for nu2 in words:
                lhs = M.e(nu, M.e(nu2, vec))
                rhs = M.e(nu, vec) if nu == nu2 else {}
                check("idempotent", f"{tag} e{nu} e{nu2}", lhs, rhs)
        check("idempotent_sum", tag, _vadd(*[M.e(nu, vec) for nu in words]), vec)
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                check("x_commute", f"{tag} x{a} x{b}", M.x(a, M.x(b, vec)), M.x(b, M.x(a, vec)))
            for nu in words:
                check("x_e", f"{tag} x{a} e{nu}", M.x(a, M.e(nu, vec)), M.e(nu, M.x(a, vec)))
        for p in range(1, m):
            for nu in words:
                check("tau_e", f"{tag} tau{p} e{nu}",
                      M.tau_apply(p, M.e(nu, vec)), M.e(_swap_word(nu, p), M.tau_apply(p, vec)))
            for p2 in range(1, m):
                if abs(p - p2) > 1:
                    check("tau_commute", f"{tag} tau{p} tau{p2}",
                          M.tau_apply(p, M.tau_apply(p2, vec)), M.tau_apply(p2, M.tau_apply(p, vec)))
        nu = M.residues[s]
        ev = M.e(nu, vec)
        for p in range(1, m):
            i, j = nu[p - 1], nu[p]
            check("quadratic", f"{tag} tau{p}^2 at ({i},{j})",
                  M.tau_apply(p, M.tau_apply(p, ev)), _apply_q(M, qp(i, j), p, p + 1, ev))
            for a in range(1, m + 1):
                sa = p + 1 if a == p else p if a == p + 1 else a
                lhs = _vadd(M.tau_apply(p, M.x(a, ev)), M.x(sa, M.tau_apply(p, ev)), signs=[1, -1])
                if i == j and a == p:
                    rhs = {t: -c for t, c in ev.items()}
                elif i == j and a == p + 1:
                    rhs = dict(ev)
                else:
                    rhs = {}
                check("tau_x", f"{tag} tau{p} x{a}", lhs, rhs)
        for p in range(1, m - 1):
            lhs = _vadd(
                M.tau_apply(p + 1, M.tau_apply(p, M.tau_apply(p + 1, ev))),
                M.tau_apply(p, M.tau_apply(p + 1, M.tau_apply(p, ev))),
                signs=[1, -1],
            )
            if nu[p - 1] == nu[p + 1]:
                rhs = _apply_divided(M, qp(nu[p - 1], nu[p]), p, ev)
            else:
                rhs = {}
            check("braid", f"{tag} at position {p}", lhs, rhs)
    return report


def verify_cyclotomic(M: SpModule) -> list[RelationCheck]:
    """x_m^{<h_{nu_m}, Lambda_k>} e(nu) must vanish, nu_m being the last letter."""
    report = []
    m = M.length
    for s in range(M.dim):
        nu = M.residues[s]
        ev = M.e(nu, {s: 1})
        if not nu:
            report.append(RelationCheck("cyclotomic", f"S{s} empty word", "pass"))
            continue
        exponent = int(nu[-1] == M.k)
        out = _x_monomial(M, {m: exponent}, ev)
        status = "pass" if not out else "fail"
        report.append(RelationCheck("cyclotomic", f"S{s} x{m}^{exponent} e{nu}", status))
    return report


# -- degree formulas ----------------------------------------------------------

def column_weight(T: ColumnTableau, cd: CartanA) -> WeightVec:
    return cd.fundamental_weight(len(T)) - beta_of_column(T, cd)


def _check_lambda(T: ColumnTableau, lam: WeightVec, cd: CartanA) -> RootVec:
    if not 1 <= len(T) <= cd.n - 1:
        raise DegreeHypothesisError(f"{T} is not an element of any B(Lambda_k)")
    if lam != cd.fundamental_weight(len(T)):
        raise DegreeHypothesisError(f"{T} is not an element of B({lam})")
    return beta_of_column(T, cd)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


def head_shift_t(betas: Sequence[RootVec], lambdas: Sequence[WeightVec], cd: CartanA) -> int:
    """sum over i < j of (beta_j, lambda_i)."""
    if len(betas) != len(lambdas):
        raise ValueError(f"{len(betas)} roots but {len(lambdas)} weights")
    total = Fraction(0)
    for i in range(len(betas)):
        for j in range(i + 1, len(betas)):
            total += pair_form(betas[j], lambdas[i], cd)
    return _as_int(total)


def hom_degree_d(
    b1: ColumnTableau, lam1: WeightVec,
    b2: ColumnTableau, lam2: WeightVec,
    b1p: ColumnTableau, lam1p: WeightVec,
    b2p: ColumnTableau, lam2p: WeightVec,
    cd: CartanA,
) -> int:
    """Degree d with Hom(q^d L(b1) o L(b2), L(b2') o L(b1')) one-dimensional.

    The modules are column modules, hence real.
    """
    beta2 = _check_lambda(b2, lam2, cd)
    _check_lambda(b1, lam1, cd)
    beta1p = _check_lambda(b1p, lam1p, cd)
    beta2p = _check_lambda(b2p, lam2p, cd)
    if lam1 + lam2 != lam1p + lam2p:
        raise DegreeHypothesisError("lambda1 + lambda2 differs from lambda1' + lambda2'")
    x = TensorElt(cd.n, (b1, b2))
    xp = TensorElt(cd.n, (b1p, b2p))
    if not in_highest_component(x):
        raise DegreeHypothesisError(f"{x} is not in C_(lambda1, lambda2)")
    if not crystal_equivalent(x, xp):
        raise DegreeHypothesisError(f"{x} is not crystal equivalent to {xp}")
    d = pair_form(beta2, lam1, cd) + pair_form(beta2p, lam1p, cd) - pair_form(beta1p, beta2p, cd)
    return _as_int(d)


@dataclass(frozen=True)
class LambdaInvariants:
    lambda_tilde: int
    lambda_: int
    d: Optional[Fraction] = None


def lambda_invariants(
    b1: ColumnTableau, lam1: WeightVec,
    b2: ColumnTableau, lam2: WeightVec,
    cd: CartanA,
    lam2p: Optional[WeightVec] = None,
    b2p: Optional[ColumnTableau] = None,
) -> LambdaInvariants:
    """R-matrix degrees of L(b1), L(b2); with primed data also the symmetrized degree."""
    beta1 = _check_lambda(b1, lam1, cd)
    beta2 = _check_lambda(b2, lam2, cd)
    if not in_highest_component(TensorElt(cd.n, (b1, b2))):
        raise DegreeHypothesisError(f"{b1} (x) {b2} is not in C_(lambda1, lambda2)")
    lt = pair_form(beta2, lam1, cd)
    big = pair_form(beta2, 2 * lam1 - beta1, cd)
    # wt of L(b) is -beta
    assert lt == (big + pair_form(beta1, beta2, cd)) / 2
    d = None
    if (lam2p is None) != (b2p is None):
        raise ValueError("lam2p and b2p must be given together")
    if b2p is not None:
        _check_lambda(b2p, lam2p, cd)
        if qch_sp(b2p, cd) != qch_sp(b2, cd):
            raise DegreeHypothesisError(f"Sp^{b2p} and Sp^{b2} are not isomorphic")
        if not in_highest_component(TensorElt(cd.n, (b2p, b1))):
            raise DegreeHypothesisError(f"{b2p} (x) {b1} is not in C_(lambda2', lambda1)")
        d = pair_form(beta1, lam2p, cd) + pair_form(beta2, lam1, cd) - pair_form(beta1, beta2, cd)
        other = pair_form(lam1, lam2p, cd) - pair_form(
            column_weight(b1, cd), column_weight(b2p, cd), cd)
        assert d == other, (d, other)
    return LambdaInvariants(_as_int(lt), _as_int(big), d)


def strongly_commute(
    b1: ColumnTableau, lam1: WeightVec,
    b2: ColumnTableau, lam2: WeightVec,
    cd: CartanA,
) -> bool:
    """Whether Sp^{b1} o Sp^{b2} is simple, decided by (lam1, lam2) = (wt b1, wt b2)
    and cross-checked against crystal equivalence of b1 (x) b2 and b2 (x) b1."""
    _check_lambda(b1, lam1, cd)
    _check_lambda(b2, lam2, cd)
    x = TensorElt(cd.n, (b1, b2))
    y = TensorElt(cd.n, (b2, b1))
    if not in_highest_component(x):
        raise DegreeHypothesisError(f"{x} is not in C_(lambda1, lambda2)")
    if not in_highest_component(y):
        raise DegreeHypothesisError(f"{y} is not in C_(lambda2, lambda1)")
    by_form = pair_form(lam1, lam2, cd) == pair_form(column_weight(b1, cd), column_weight(b2, cd), cd)
    by_crystal = crystal_equivalent(x, y)
    if by_form != by_crystal:
        raise RuntimeError(f"commutation criteria disagree on {b1}, {b2}")
    return by_form
