"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (lines are printed live) or
``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402

from klrcrystal.cartan import CartanA  # noqa: E402
from klrcrystal.crystal import (  # noqa: E402
    TensorElt,
    apply_e,
    apply_f,
    crystal_equivalent,
    in_highest_component,
    stats,
)
from klrcrystal.homogeneous import (  # noqa: E402
    all_passed,
    build_sp,
    head_shift_t,
    hom_degree_d,
    strongly_commute,
    verify_cyclotomic,
    verify_qha_relations,
)
from klrcrystal.laurent import q  # noqa: E402
from klrcrystal.permutations import bruhat_le, kl_poly, length, permutations_of  # noqa: E402
from klrcrystal.qcharacter import QChar, qch_sp, shuffle, shuffle_all, solve_unitriangular  # noqa: E402
from klrcrystal.rmatrix import LETTERS, decode, encode, format_bits, sigma, sigma_bits  # noqa: E402
from klrcrystal.tableaux import (  # noqa: E402
    ColumnTableau,
    SSYTab,
    YoungDiagram,
    beta_of_column,
    col,
    conjugate,
    enumerate_ssyt,
    hook_content_count,
    hook_length_count,
    standard_tableaux,
)
from klrcrystal.transition import graded_decomposition, transition_entry  # noqa: E402

T_ROWS = ((1, 1, 3, 5), (2, 2, 4), (3,))
S_ROWS = ((1, 1, 2, 5), (2, 3, 4), (3,))


def _columns(n, sizes=None):
    sizes = range(1, n) if sizes is None else sizes
    return [ColumnTableau(n, c) for k in sizes for c in itertools.combinations(range(1, n + 1), k)]


def _partitions(size, top=None):
    if size == 0:
        yield ()
        return
    for p in range(min(size, top or size), 0, -1):
        for rest in _partitions(size - p, p):
            yield (p,) + rest


# -- criteria ----------------------------------------------------------------------------

def sigma_reproduction():
    cases = [
        (4, (4,), (2, 3), "10 ⊗ 01 ⊗ 01 ⊗ 00", "10 ⊗ 01 ⊗ 10 ⊗ 00", ((2, 4), (3,))),
        (5, (3, 5), (1, 3, 4, 5), "11 ⊗ 01 ⊗ 11 ⊗ 00 ⊗ 01", "11 ⊗ 10 ⊗ 11 ⊗ 00 ⊗ 10",
         ((1, 3, 4, 5), (3, 5))),
        (5, (2, 4), (1, 3, 4, 5), "01 ⊗ 11 ⊗ 01 ⊗ 10 ⊗ 01", "10 ⊗ 11 ⊗ 10 ⊗ 10 ⊗ 01",
         ((2, 3, 4, 5), (1, 4))),
    ]
    ok = 0
    for n, a, b, w_in, w_out, out in cases:
        wi, wo = sigma_bits(col(*a, n=n), col(*b, n=n), n)
        ok += (format_bits(wi), format_bits(wo), decode(wo)) == (
            w_in, w_out, (col(*out[0], n=n), col(*out[1], n=n)))
    return ok == len(cases), f"{ok}/{len(cases)} instances with intermediate words"


QCH_CASES = [
    (4, (2, 3), [(1, 2)]),
    (4, (4,), [(3, 2, 1)]),
    (4, (3,), [(2, 1)]),
    (4, (2, 4), [(3, 1, 2), (1, 3, 2)]),
    (5, (1, 3, 4, 5), [(2, 3, 4)]),
    (5, (3, 5), [(2, 1, 4, 3, 2), (2, 4, 1, 3, 2), (2, 4, 3, 1, 2), (4, 2, 1, 3, 2), (4, 2, 3, 1, 2)]),
    (5, (3, 4), [(2, 3, 1, 2), (2, 1, 3, 2)]),
    (5, (5,), [(4, 3, 2, 1)]),
    (5, (1, 3), [(2,)]),
    (5, (2, 4), [(3, 1, 2), (1, 3, 2)]),
]


def q_characters():
    ok = sum(qch_sp(col(*e, n=n), CartanA(n)) == QChar(n, {w: 1 for w in words})
             for n, e, words in QCH_CASES)
    return ok == len(QCH_CASES), f"{ok}/{len(QCH_CASES)} q-characters"


def degree_formulas():
    cd4 = CartanA(4)
    L = cd4.fundamental_weight
    d = hom_degree_d(col(4, n=4), L(1), col(2, 3, n=4), L(2),
                     col(2, 4, n=4), L(2), col(3, n=4), L(1), cd4)
    cd = CartanA(5)
    shifts = []
    for rows in (T_ROWS, S_ROWS):
        cols = list(reversed(SSYTab(5, rows).columns()))  # tensor order T_r, ..., T_1
        shifts.append(head_shift_t([beta_of_column(c, cd) for c in cols],
                                   [cd.fundamental_weight(len(c)) for c in cols], cd))
    return (d, shifts) == (1, [1, 2]), f"d={d}, shifts={shifts}"


def strong_commutation():
    cd = CartanA(5)
    L = cd.fundamental_weight
    b2 = col(1, 3, 4, 5, n=5)
    results = []
    for b1, want in ((col(3, 5, n=5), True), (col(2, 4, n=5), False)):
        got = strongly_commute(b1, L(2), b2, L(4), cd)
        cross = crystal_equivalent(TensorElt(5, (b1, b2)), TensorElt(5, (b2, b1)))
        results.append(got == want and cross == want)
    return all(results), f"verdicts match expected and crystal check: {results}"


def relation_soundness():
    count = failed = 0
    for n in range(2, 6):
        cd = CartanA(n)
        for T in _columns(n):
            M = build_sp(T, cd)
            count += 1
            if not (all_passed(verify_qha_relations(M)) and all_passed(verify_cyclotomic(M))):
                failed += 1
    return failed == 0, f"{count - failed}/{count} column modules"


def kl_calibration():
    cd = CartanA(5)
    T, S = SSYTab(5, T_ROWS), SSYTab(5, S_ROWS)
    rows_ok = all(
        transition_entry(T, C) == (1 if C == T else 0)
        and transition_entry(S, C) == (q if C == T else 1 if C == S else 0)
        for C in enumerate_ssyt(T.shape, 5, T.content())
    )
    dec_t = graded_decomposition(T.columns(), cd)
    dec_s = graded_decomposition(S.columns(), cd)
    ok = rows_ok and dec_t == {T: q**-1} and dec_s == {T: q**-1, S: q**-2}
    return ok, f"rows {rows_ok}, T -> {_fmt(dec_t)}, S -> {_fmt(dec_s)}"


def _fmt(dec):
    return "{" + ", ".join(f"L({t.label()}): {v}" for t, v in dec.items()) + "}"


def positivity():
    count = bad = 0
    for n in (2, 3, 4):
        cd = CartanA(n)
        for size in range(1, 7):
            for parts in _partitions(size):
                if len(parts) >= n:
                    continue
                mu = conjugate(YoungDiagram(parts)).parts
                for cols in itertools.product(*[itertools.combinations(range(1, n + 1), k) for k in mu]):
                    dec = graded_decomposition([ColumnTableau(n, c) for c in cols], cd)
                    count += 1
                    bad += not all(v.is_nonnegative() for v in dec.values())
    return bad == 0, f"{count} column-strict tableaux, {bad} with a negative coefficient"


def bar_invariance():
    cd = CartanA(5)
    ok = []
    for first, second in (((3, 5), (1, 3, 4, 5)), ((5,), (3, 4))):
        prod = shuffle(qch_sp(col(*first, n=5), cd), qch_sp(col(*second, n=5), cd), cd)
        flipped = oracles.shift(
            oracles.qshuffle(oracles.qch_sp(first), oracles.qch_sp(second), sign=-1), 1)
        ok.append(prod.scale(q).is_bar_invariant() and not oracles.is_bar_invariant(flipped))
    return all(ok), f"both products invariant, opposite sign rejected: {ok}"


def grothendieck_consistency():
    cd = CartanA(5)
    T, S = SSYTab(5, T_ROWS), SSYTab(5, S_ROWS)
    mono_t = shuffle_all([qch_sp(c, cd) for c in reversed(T.columns())], cd).shift(1)
    triple = shuffle_all([qch_sp(c, cd) for c in reversed(S.columns())], cd)
    mono_s = triple.shift(2)
    sols = dict(solve_unitriangular([("T", mono_t), ("S", mono_s)],
                                    {"T": {"T": 1}, "S": {"T": q, "S": 1}}))
    identity = triple == sols["T"].shift(-1) + sols["S"].shift(-2)
    simple = all(c.is_bar_invariant() and c.is_nonnegative() for c in sols.values())
    return identity and simple, f"identity {identity}, simples bar-invariant and nonnegative {simple}"


def property_suites():
    results = {}
    rng = random.Random(7)
    cases = 0
    good = True
    while cases < 10_000:
        n = rng.randint(2, 6)
        cols = [tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, n - 1))))
                for _ in range(rng.randint(1, 4))]
        b = TensorElt.of(*cols, n=n)
        sb = stats(b)
        cd = CartanA(n)
        for i in range(1, n):
            cases += 1
            good &= sb.phi[i - 1] - sb.eps[i - 1] == sb.wt.coords[i - 1]
            up, down = apply_e(i, b), apply_f(i, b)
            good &= (up is None) == (sb.eps[i - 1] == 0) and (down is None) == (sb.phi[i - 1] == 0)
            if up is not None:
                good &= apply_f(i, up) == b and stats(up).wt == sb.wt + cd.simple_root(i)
            if down is not None:
                good &= apply_e(i, down) == b
    results["crystal axioms"] = good

    good = True
    for n in (2, 3, 4):
        for a, b in itertools.product(_columns(n), repeat=2):
            good &= sigma(*sigma(a, b, n), n) == (a, b)
            x, y = TensorElt(n, (a, b)), TensorElt(n, sigma(a, b, n))
            for i in range(1, n):
                for op in (apply_e, apply_f):
                    ox, oy = op(i, x), op(i, y)
                    good &= (ox is None and oy is None) or (
                        ox is not None and oy is not None and TensorElt(n, sigma(*ox.factors, n)) == oy)
    results["sigma involution/commutation"] = good

    good = True
    for n in range(1, 6):
        subsets = _columns(n, range(0, n + 1))
        good &= all(decode(encode(a, b, n)) == (a, b) for a, b in itertools.product(subsets, repeat=2))
        good &= all(encode(*decode(w), n) == w for w in itertools.product(LETTERS, repeat=n))
    results["encode/decode bijection"] = good

    good = True
    for size in range(0, 7):
        for parts in _partitions(size):
            lam = YoungDiagram(parts)
            good &= len(standard_tableaux(lam)) == hook_length_count(lam)
            for n in range(len(parts) + 1, 6):
                good &= len(enumerate_ssyt(lam, n)) == hook_content_count(lam, n)
    results["hook counts"] = good

    good = True
    for m in range(1, 5):
        for x in permutations_of(m):
            for w in permutations_of(m):
                p = kl_poly(x, w)
                good &= {e: c for e, c in enumerate(p) if c} == oracles.kl_from_r(x, w)
                if bruhat_le(x, w) and x != w:
                    good &= p[0] == 1 and 2 * (len(p) - 1) <= length(w) - length(x) - 1
    results["KL oracle and degree bounds"] = good

    good = True
    for n in (2, 3, 4):
        cd = CartanA(n)
        L = cd.fundamental_weight
        for b1, b2 in itertools.product(_columns(n), repeat=2):
            x, y = TensorElt(n, (b1, b2)), TensorElt(n, (b2, b1))
            if in_highest_component(x) and in_highest_component(y):
                good &= strongly_commute(b1, L(len(b1)), b2, L(len(b2)), cd) == crystal_equivalent(x, y)
    results["commutation criteria agree"] = good

    failed = [k for k, v in results.items() if not v]
    return not failed, "all suites pass" if not failed else f"failed: {failed}"


CRITERIA = [
    (1, "sigma reproduction", sigma_reproduction),
    (2, "q-characters", q_characters),
    (3, "degree formulas", degree_formulas),
    (4, "strong commutation", strong_commutation),
    (5, "relation soundness", relation_soundness),
    (6, "KL calibration", kl_calibration),
    (7, "positivity", positivity),
    (8, "bar-invariance oracle", bar_invariance),
    (9, "Grothendieck consistency", grothendieck_consistency),
    (10, "property suites", property_suites),
]


def _report(num, name, fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # report the crash as a failing line
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    took = time.perf_counter() - start
    line = f"criterion {num:>2} {name}: {'PASS' if ok else 'FAIL'} ({detail}; {took:.1f}s)"
    return ok, line


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, line = _report(num, name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_report(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
