"""Worked examples with known answers, runnable as a self-test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cartan import CartanA
from .crystal import TensorElt, crystal_equivalent, in_highest_component
from .homogeneous import (
    build_sp,
    hom_degree_d,
    head_shift_t,
    lambda_invariants,
    strongly_commute,
    all_passed,
    verify_cyclotomic,
    verify_qha_relations,
)
from .laurent import Laurent, q
from .qcharacter import QChar, qch_sp, shuffle
from .rmatrix import format_bits, sigma_bits, decode
from .tableaux import YoungDiagram, beta_of_column, col, xi_of
from .transition import graded_decomposition, parse_columns, transition_entry, ColumnStrictConcat

__all__ = ["GoldenCase", "CASES", "run_all"]


@dataclass(frozen=True)
class GoldenCase:
    name: str
    check: Callable[[], bool]


def _sigma_case(n, first, second, w_in, w_out, out_first, out_second):
    def check():
        a, b = col(*first, n=n), col(*second, n=n)
        wi, wo = sigma_bits(a, b, n)
        return (format_bits(wi) == w_in and format_bits(wo) == w_out
                and decode(wo) == (col(*out_first, n=n), col(*out_second, n=n)))
    return check


def _qch_case(n, entries, words):
    def check():
        return qch_sp(col(*entries, n=n), CartanA(n)) == QChar(n, {tuple(w): 1 for w in words})
    return check


def _xi_case(n, entries, parts):
    return lambda: xi_of(col(*entries, n=n)) == YoungDiagram(parts)


def _example1_degree():
    cd = CartanA(4)
    L = cd.fundamental_weight
    return hom_degree_d(col(4, n=4), L(1), col(2, 3, n=4), L(2),
                        col(2, 4, n=4), L(2), col(3, n=4), L(1), cd) == 1


def _example1_lambda():
    cd = CartanA(4)
    L = cd.fundamental_weight
    inv = lambda_invariants(col(4, n=4), L(1), col(2, 3, n=4), L(2), cd)
    return (inv.lambda_tilde, inv.lambda_) == (1, 1)


def _head_shift(text, expected):
    def check():
        cd = CartanA(5)
        cols = parse_columns(text, 5)[::-1]  # b_1, ..., b_r in tensor order
        betas = [beta_of_column(c, cd) for c in cols]
        lams = [cd.fundamental_weight(len(c)) for c in cols]
        return head_shift_t(betas, lams, cd) == expected
    return check


def _commute(b1, b2, expected):
    def check():
        cd = CartanA(5)
        L = cd.fundamental_weight
        return strongly_commute(col(*b1, n=5), L(len(b1)), col(*b2, n=5), L(len(b2)), cd) is expected
    return check


def _remark_components():
    a, b = col(2, 4, n=5), col(1, 3, 4, 5, n=5)
    x, y = TensorElt(5, (a, b)), TensorElt(5, (b, a))
    return in_highest_component(x) and in_highest_component(y) and not crystal_equivalent(x, y)


def _bar_invariant_product(first, second):
    def check():
        cd = CartanA(5)
        prod = shuffle(qch_sp(col(*first, n=5), cd), qch_sp(col(*second, n=5), cd), cd)
        return prod.scale(q).is_bar_invariant()
    return check


def _relations(n, entries):
    def check():
        M = build_sp(col(*entries, n=n), CartanA(n))
        return all_passed(verify_qha_relations(M)) and all_passed(verify_cyclotomic(M))
    return check


T_COLUMNS = "5|3,4|1,2|1,2,3"
S_COLUMNS = "5|2,4|1,3|1,2,3"


def _decomposition(text, expected):
    def check():
        got = graded_decomposition(parse_columns(text, 5), CartanA(5))
        return {t.label(): str(v) for t, v in got.items()} == expected
    return check


def _transition_rows():
    T = ColumnStrictConcat(5, tuple(parse_columns(T_COLUMNS, 5)))
    S = ColumnStrictConcat(5, tuple(parse_columns(S_COLUMNS, 5)))
    from .tableaux import enumerate_ssyt

    for C in enumerate_ssyt(T.shape, 5, T.content()):
        a, b = transition_entry(T, C), transition_entry(S, C)
        want_a = Laurent({0: 1}) if C == T.to_ssyt() else Laurent()
        want_b = q if C == T.to_ssyt() else Laurent({0: 1}) if C == S.to_ssyt() else Laurent()
        if a != want_a or b != want_b:
            return False
    return True


CASES: list[GoldenCase] = [
    GoldenCase("sigma: columns (4) and (2,3)",
               _sigma_case(4, (4,), (2, 3), "10 ⊗ 01 ⊗ 01 ⊗ 00", "10 ⊗ 01 ⊗ 10 ⊗ 00", (2, 4), (3,))),
    GoldenCase("sigma: columns (3,5) and (1,3,4,5)",
               _sigma_case(5, (3, 5), (1, 3, 4, 5), "11 ⊗ 01 ⊗ 11 ⊗ 00 ⊗ 01",
                           "11 ⊗ 10 ⊗ 11 ⊗ 00 ⊗ 10", (1, 3, 4, 5), (3, 5))),
    GoldenCase("sigma: columns (2,4) and (1,3,4,5)",
               _sigma_case(5, (2, 4), (1, 3, 4, 5), "01 ⊗ 11 ⊗ 01 ⊗ 10 ⊗ 01",
                           "10 ⊗ 11 ⊗ 10 ⊗ 10 ⊗ 01", (2, 3, 4, 5), (1, 4))),
    GoldenCase("xi of (2,3)", _xi_case(4, (2, 3), (1, 1))),
    GoldenCase("xi of (4)", _xi_case(4, (4,), (3,))),
    GoldenCase("xi of (3)", _xi_case(4, (3,), (2,))),
    GoldenCase("xi of (2,4)", _xi_case(4, (2, 4), (2, 1))),
    GoldenCase("xi of (1,3,4,5)", _xi_case(5, (1, 3, 4, 5), (1, 1, 1))),
    GoldenCase("xi of (3,5)", _xi_case(5, (3, 5), (3, 2))),
    GoldenCase("xi of (3,4)", _xi_case(5, (3, 4), (2, 2))),
    GoldenCase("xi of (1,3)", _xi_case(5, (1, 3), (1,))),
    GoldenCase("xi of (2,4), n=5", _xi_case(5, (2, 4), (2, 1))),
    GoldenCase("xi of (5)", _xi_case(5, (5,), (4,))),
    GoldenCase("qch Sp of (2,3)", _qch_case(4, (2, 3), [(1, 2)])),
    GoldenCase("qch Sp of (4)", _qch_case(4, (4,), [(3, 2, 1)])),
    GoldenCase("qch Sp of (3)", _qch_case(4, (3,), [(2, 1)])),
    GoldenCase("qch Sp of (2,4)", _qch_case(4, (2, 4), [(3, 1, 2), (1, 3, 2)])),
    GoldenCase("qch Sp of (1,3,4,5)", _qch_case(5, (1, 3, 4, 5), [(2, 3, 4)])),
    GoldenCase("qch Sp of (3,5)", _qch_case(5, (3, 5), [
        (2, 1, 4, 3, 2), (2, 4, 1, 3, 2), (2, 4, 3, 1, 2), (4, 2, 1, 3, 2), (4, 2, 3, 1, 2)])),
    GoldenCase("qch Sp of (3,4)", _qch_case(5, (3, 4), [(2, 3, 1, 2), (2, 1, 3, 2)])),
    GoldenCase("qch Sp of (5)", _qch_case(5, (5,), [(4, 3, 2, 1)])),
    GoldenCase("qch Sp of (1,3)", _qch_case(5, (1, 3), [(2,)])),
    GoldenCase("qch Sp of (2,4), n=5", _qch_case(5, (2, 4), [(3, 1, 2), (1, 3, 2)])),
    GoldenCase("hom degree d for (4),(2,3)", _example1_degree),
    GoldenCase("R-matrix degrees for (4),(2,3)", _example1_lambda),
    GoldenCase("head shift of T columns is 1", _head_shift(T_COLUMNS, 1)),
    GoldenCase("head shift of S columns is 2", _head_shift(S_COLUMNS, 2)),
    GoldenCase("(3,5) and (1,3,4,5) strongly commute", _commute((3, 5), (1, 3, 4, 5), True)),
    GoldenCase("(2,4) and (1,3,4,5) do not strongly commute", _commute((2, 4), (1, 3, 4, 5), False)),
    GoldenCase("(2,4),(1,3,4,5): both orders highest, not equivalent", _remark_components),
    GoldenCase("q (3,5)o(1,3,4,5) is bar-invariant", _bar_invariant_product((3, 5), (1, 3, 4, 5))),
    GoldenCase("q (5)o(3,4) is bar-invariant", _bar_invariant_product((5,), (3, 4))),
    GoldenCase("relations hold on Sp of (3,5)", _relations(5, (3, 5))),
    GoldenCase("relations hold on Sp of (2,4)", _relations(4, (2, 4))),
    GoldenCase("transition rows of T and S", _transition_rows),
    GoldenCase("decomposition of T columns",
               _decomposition(T_COLUMNS, {"1,1,3,5/2,2,4/3": "q^-1"})),
    GoldenCase("decomposition of S columns",
               _decomposition(S_COLUMNS, {"1,1,3,5/2,2,4/3": "q^-1", "1,1,2,5/2,3,4/3": "q^-2"})),
]


def run_all() -> list[tuple[str, bool]]:
    out = []
    for case in CASES:
        try:
            ok = bool(case.check())
        except Exception:  # a crash is a failure of the case
            ok = False
        out.append((case.name, ok))
    return out
