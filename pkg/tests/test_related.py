"""Multiset derangements and word enumerators tied to the Q family."""

import pytest

from eulerq import (
    ConstrainedWord,
    MonExpansion,
    MultisetDerangement,
    d_poly,
    multiset_derangements,
    q_symf,
    verify_related,
    y_poly,
)
from eulerq.related import (
    DERANGEMENT_COUNTS,
    WORD_CONSTRAINTS,
    related_registry,
    words_no_repeat_tdict,
)


def test_multiset_derangement_basics():
    d = MultisetDerangement((1, 1, 2, 2), (2, 2, 1, 1))
    assert d.n == 4
    assert d.exc() == 2
    assert d.monomial(2) == (2, 2)
    with pytest.raises(ValueError):
        MultisetDerangement((2, 1), (1, 2))  # top must weakly increase
    with pytest.raises(ValueError):
        MultisetDerangement((1, 2), (1, 2))  # equal column
    with pytest.raises(ValueError):
        MultisetDerangement((1, 2), (2, 2))  # bottom not a rearrangement


def test_constrained_word_basics():
    w = ConstrainedWord((1, 2, 1), "no_adjacent_repeat")
    assert w.des() == 1
    assert w.monomial(2) == (2, 1)
    with pytest.raises(ValueError):
        ConstrainedWord((1, 1, 2), "no_adjacent_repeat")
    with pytest.raises(ValueError):
        ConstrainedWord((1, 2), "unknown_tag")
    # equal adjacent letters are fine here; 3,1,2 has one isolated descent
    ConstrainedWord((1, 1, 2), "no_double_descent_last")
    ConstrainedWord((3, 1, 2), "no_double_descent_last")
    with pytest.raises(ValueError):
        ConstrainedWord((3, 2, 1, 1), "no_double_descent_last")  # double
    with pytest.raises(ValueError):
        ConstrainedWord((1, 3, 2), "no_double_descent_last")  # final descent
    with pytest.raises(ValueError):
        ConstrainedWord((2, 1, 3), "no_double_descent_first_last")
    assert set(WORD_CONSTRAINTS) == {
        "no_adjacent_repeat", "no_double_descent_last",
        "no_double_descent_first_last"}


def test_smallest_cases():
    assert d_poly(0, 0, 2) == MonExpansion.one(2)
    assert d_poly(1, 0, 2).is_zero()
    assert d_poly(2, 1, 2) == MonExpansion(2, {(1, 1): 1})
    assert d_poly(2, 0, 2).is_zero()
    assert y_poly(1, 0, 3) == MonExpansion(3, {(1, 0, 0): 1, (0, 1, 0): 1,
                                               (0, 0, 1): 1})
    assert y_poly(0, 0, 2) == MonExpansion.one(2)


def test_enumeration_matches_counting_kernel():
    for n in range(0, 5):
        seen = {}
        for d in multiset_derangements(n, 3):
            j = d.exc()
            seen[j] = seen.get(j, MonExpansion.zero(3)) + MonExpansion(
                3, {d.monomial(3): 1})
        for j in range(n + 1):
            assert seen.get(j, MonExpansion.zero(3)) == d_poly(n, j, 3)


def test_distinct_top_reduces_to_classical_derangements():
    for n in range(0, 7):
        got = sum(1 for d in multiset_derangements(n, n)
                  if len(set(d.top)) == n)
        assert got == DERANGEMENT_COUNTS[n]


def test_omega_bridges():
    # both enumerators are omega images of Q slices
    for n in range(0, 5):
        for j in range(n + 1):
            qd = q_symf(n, j, 0).omega().to_monomial(n) if n else \
                MonExpansion.one(0)
            assert d_poly(n, j, n) == qd
            qy = q_symf(n, j).omega().to_monomial(n) if n else \
                MonExpansion.one(0)
            assert y_poly(n, j, n) == qy


def test_no_repeat_words_des_distribution():
    # over two letters the only length-3 words are 121 and 212
    td = words_no_repeat_tdict(3, 2)
    assert sorted(td) == [1]
    assert td[1] == MonExpansion(2, {(2, 1): 1, (1, 2): 1})
    # length-2 words over three letters: all ordered pairs of distinct values
    total = sum(words_no_repeat_tdict(2, 3).values(), MonExpansion.zero(3))
    assert total == MonExpansion(3, {(1, 1, 0): 2, (1, 0, 1): 2, (0, 1, 1): 2})


def test_verify_related_small():
    rep = verify_related(4, 3)
    assert rep.ok, rep.failures()


def test_related_registry():
    assert [name for name, _ in related_registry("ci")] == ["related"]
