from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from klrcrystal.tableaux import (
    ColumnTableau,
    SSYTab,
    TableauError,
    YoungDiagram,
    col,
    conjugate,
    enumerate_ssyt,
    hook_content_count,
    hook_length_count,
    residue_sequence,
    standard_tableaux,
    xi_of,
)
from klrcrystal.cartan import CartanA
from klrcrystal.tableaux import beta_of_column


def partitions(size, top=None):
    if size == 0:
        yield ()
        return
    for p in range(min(size, top or size), 0, -1):
        for rest in partitions(size - p, p):
            yield (p,) + rest


@pytest.mark.parametrize("size", range(0, 8))
def test_standard_count_matches_hook_length(size):
    for parts in partitions(size):
        lam = YoungDiagram(parts)
        assert len(standard_tableaux(lam)) == hook_length_count(lam)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ssyt_count_matches_hook_content(n):
    for size in range(0, 6):
        for parts in partitions(size):
            if len(parts) >= n:
                continue
            lam = YoungDiagram(parts)
            assert len(enumerate_ssyt(lam, n)) == hook_content_count(lam, n)


def test_content_filter_partitions_the_set():
    lam = YoungDiagram((3, 2))
    everything = enumerate_ssyt(lam, 4)
    by_content = Counter(tuple(sorted(t.content().elements())) for t in everything)
    for cnt, k in by_content.items():
        assert len(enumerate_ssyt(lam, 4, Counter(cnt))) == k


def test_conjugate_is_involution():
    for parts in partitions(7):
        lam = YoungDiagram(parts)
        assert conjugate(conjugate(lam)) == lam


@pytest.mark.parametrize("entries,n,parts", [
    ((2, 3), 4, (1, 1)), ((4,), 4, (3,)), ((3,), 4, (2,)), ((2, 4), 4, (2, 1)),
    ((1, 3, 4, 5), 5, (1, 1, 1)), ((3, 5), 5, (3, 2)), ((3, 4), 5, (2, 2)),
    ((5,), 5, (4,)), ((1, 3), 5, (1,)), ((1, 2, 3), 5, ()),
])
def test_xi_worked_values(entries, n, parts):
    assert xi_of(col(*entries, n=n)) == YoungDiagram(parts)


def test_residues_of_worked_tableaux():
    (S,) = standard_tableaux(YoungDiagram((1, 1)))
    assert residue_sequence(S, 2) == (1, 2)
    (S,) = standard_tableaux(YoungDiagram((3,)))
    assert residue_sequence(S, 1) == (3, 2, 1)
    words = {residue_sequence(S, 2) for S in standard_tableaux(YoungDiagram((2, 1)))}
    assert words == {(3, 1, 2), (1, 3, 2)}


columns = st.integers(2, 7).flatmap(
    lambda n: st.sets(st.integers(1, n), min_size=1, max_size=n - 1).map(
        lambda s: ColumnTableau(n, tuple(sorted(s)))))


@settings(max_examples=300)
@given(columns)
def test_residue_content_is_beta(T):
    cd = CartanA(T.n)
    beta = beta_of_column(T, cd)
    for S in standard_tableaux(xi_of(T)):
        word = residue_sequence(S, len(T), T.n)
        assert Counter(word) == Counter({i: c for i, c in enumerate(beta.coeffs, 1) if c})


def test_validation():
    with pytest.raises(TableauError):
        ColumnTableau(4, (2, 2))
    with pytest.raises(TableauError):
        ColumnTableau(4, (5,))
    with pytest.raises(TableauError):
        SSYTab(4, ((1, 2), (1,)))
    with pytest.raises(TableauError):
        SSYTab(3, ((1,), (2,), (3,)))
    with pytest.raises(TableauError):
        YoungDiagram((1, 2))


def test_json_round_trip():
    T = SSYTab(5, ((1, 1, 3, 5), (2, 2, 4), (3,)))
    assert SSYTab.from_json(T.to_json()) == T
    assert [c.entries for c in T.columns()] == [(1, 2, 3), (1, 2), (3, 4), (5,)]
    assert ColumnTableau.from_json(col(2, 4, n=5).to_json()) == col(2, 4, n=5)
