"""The Q family: fixed values, expansions, tables, and suite smoke runs."""

import pytest

from eulerq import (
    Partition,
    Poly,
    eulerian_number,
    parse_poly,
    parse_symf,
    partitions,
    q_fun,
    q_poly,
    q_symf,
    q_symf_type,
    sym_h,
)
from eulerq.eulerian import (
    A4_T1_COEFF,
    a_poly,
    a_poly_derangements,
    a_poly_fix,
    char_table,
    character_poly,
    character_value,
    q_poly_closed,
    q_qsym,
    q_qsym_type,
    shift_exc_by_qinv,
    suite_registry,
    t_symmetric,
    verify_character_formula,
    verify_derangement_identities,
    verify_finite_specialization,
    verify_four_stat_series,
    verify_main_generating_function,
    verify_positivity,
    verify_qexp_generating_function,
    verify_recurrences,
    verify_specializations,
    verify_structure_identities,
    verify_symmetry_unimodality,
)
from fixtures_tables import CHAR_TABLES


def test_base_cases():
    assert q_symf(0, 0) == sym_h([])
    assert q_fun(n=0, j=0, k=0).qsym.to_symf() == sym_h([])
    assert q_symf(1, 0) == sym_h([1])
    assert q_symf(2, 1) == sym_h([2])
    assert q_symf(2, 0) == sym_h([2])
    assert q_symf(3, 1) == sym_h([2, 1]) + sym_h([3])
    assert q_symf(2, 5).is_zero()


def test_zero_excedance_slice_is_hn():
    for n in range(1, 6):
        assert q_symf(n, 0) == sym_h([n])
        assert q_symf(n, n - 1) == sym_h([n])


def test_every_slice_is_symmetric():
    for n in range(0, 6):
        for j in range(n + 1):
            assert q_qsym(n, j).is_symmetric()
            for lam in partitions(n):
                assert q_qsym_type(lam, j).is_symmetric()


def test_dimensions_are_eulerian_numbers():
    for n in range(1, 6):
        for j in range(n):
            dim = q_symf(n, j).to_monomial(n).coefficient_of_squarefree()
            assert dim == eulerian_number(n, j)


def test_slice_decompositions():
    for n in range(0, 6):
        for j in range(n + 1):
            whole = q_symf(n, j)
            by_fix = sum((q_symf(n, j, k) for k in range(n + 1)), sym_h([], 0))
            assert by_fix == whole
            by_type = sum((q_symf_type(lam, j) for lam in partitions(n)),
                          sym_h([], 0))
            assert by_type == whole


def test_single_cycle_reference_expansion():
    f = q_symf_type((6,), 3)
    assert f == (sym_h([5, 1]) + 2 * sym_h([4, 2]) - sym_h([4, 1, 1])
                 + sym_h([3, 2, 1]))
    assert f.to_basis("s").render() == (
        "3*s[6] + 3*s[5,1] + 3*s[4,2] + s[3,3] + s[3,2,1]")


def test_product_difference_reference_expansion():
    f = q_symf(5, 1) ** 2 - q_symf(5, 2) * q_symf(5, 0)
    want = (sym_h([5, 4, 1]) + sym_h([5, 3, 2]) - sym_h([5, 2, 2, 1])
            + sym_h([4, 4, 1, 1]) + 4 * sym_h([4, 3, 2, 1])
            + 4 * sym_h([3, 3, 2, 2]))
    assert f.to_basis("h") == want
    assert f.to_basis("s").is_positive()
    assert not f.to_basis("h").is_positive()


@pytest.mark.parametrize("n", sorted(CHAR_TABLES))
def test_character_tables(n):
    js, rows = char_table(n)
    assert js == list(range(1, n // 2 + 1))
    assert [mu for mu, _ in rows] == list(partitions(n))
    for mu, vals in rows:
        assert tuple(vals) == CHAR_TABLES[n][tuple(mu)], tuple(mu)


def test_character_polynomial_formula():
    for n in range(2, 7):
        for lam in partitions(n):
            pred = character_poly(lam)
            for j in range(1, n // 2 + 1):
                assert character_value(n, j, lam) == pred.coefficient("t", j)


def test_four_statistic_witness():
    a4 = shift_exc_by_qinv(a_poly(4, ("maj", "des", "exc")))
    assert a4.coefficient("t", 1) == parse_poly(A4_T1_COEFF)
    assert not t_symmetric(a4.coefficients_in("t"), 3, Poly.zero())


def test_brute_force_enumerators():
    assert a_poly(0) == Poly.one()
    # specializing everything to 1 counts the class
    ones = {"q": Poly.one(), "p": Poly.one(), "t": Poly.one(), "r": Poly.one()}
    assert a_poly(4).substitute(**ones) == 24
    assert a_poly_fix(4, 4) == Poly.one()
    assert a_poly_derangements(4).substitute(**ones) == 9
    with pytest.raises(ValueError):
        a_poly(3, ("maj", "inv"))


def test_closed_formula_matches_brute_force():
    for n in range(0, 6):
        assert q_poly_closed(n) == q_poly(n)


def test_cycle_type_palindromicity_spot():
    lam = Partition([3, 1, 1])
    n, k = lam.n, lam.mult(1)
    for j in range(n):
        left = q_symf_type(lam, j)
        jj = n - k - j
        right = q_symf_type(lam, jj) if 0 <= jj < n else sym_h([], 0)
        assert left == right


def test_parse_symf_round_trip_on_q():
    f = q_symf(4, 2).to_basis("h")
    assert parse_symf(f.render(), basis="h") == f


SMALL_SUITES = [
    (verify_main_generating_function, (4,)),
    (verify_recurrences, (4,)),
    (verify_qexp_generating_function, (4,)),
    (verify_four_stat_series, (2, 2)),
    (verify_finite_specialization, (3, 3)),
    (verify_derangement_identities, (4,)),
    (verify_symmetry_unimodality, (4,)),
    (verify_positivity, (4,)),
    (verify_character_formula, (4,)),
    (verify_structure_identities, (4, 4, 4)),
    (verify_specializations, (4,)),
]


@pytest.mark.parametrize("fn,args", SMALL_SUITES,
                         ids=[f.__name__ for f, _ in SMALL_SUITES])
def test_suite_passes_at_small_bounds(fn, args):
    rep = fn(*args)
    assert rep.ok, rep.failures()


def test_suite_registry_names():
    names = [name for name, _ in suite_registry("ci")]
    assert names == [
        "genfun", "recurrences", "qexp", "series", "finite-spec",
        "derangements", "symmetry", "positivity", "characters",
        "structure", "specializations"]
    assert [n for n, _ in suite_registry("extended")] == names
