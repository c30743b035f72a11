import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandlekit.dihedral import (
    ComplexDecompositionReport,
    EBasisExpr,
    e_basis_table,
    column_periodicity_holds,
    complex_decomposition_check,
    delta_series_shapes,
    e_expr,
    e_product,
    e_product_generic,
    e_to_vector,
    odd_relations_check,
    star_relations_check,
    vector_to_e,
    verify_product_formulas,
)
from quandlekit.errors import PreconditionError, QuandleKitError
from quandlekit.lattices import AbelianGroupShape, VARIANT_LEFT

REFERENCE_CELLS_N8 = {
    (1, 2): ((3, 1), (4, -1), (7, -1)),
    (1, 4): (),
    (2, 1): ((2, -1), (6, -1)),
    (2, 2): ((2, 1), (4, -1), (6, -1)),
    (2, 3): ((4, 1), (6, -2)),
    (2, 4): (),
    (2, 5): ((2, -1), (6, -1)),
    (2, 7): ((4, 1), (6, -2)),
    (3, 2): ((1, 1), (4, -1), (5, -1)),
    (3, 4): (),
    (4, 2): ((4, -2),),
    (4, 4): (),
    (4, 6): ((4, -2),),
    (5, 2): ((3, -1), (4, -1), (7, 1)),
    (5, 4): (),
    (6, 1): ((2, -2), (4, 1)),
    (6, 2): ((2, -1), (4, -1), (6, 1)),
    (6, 3): ((2, -1), (6, -1)),
    (6, 4): (),
    (6, 5): ((2, -2), (4, 1)),
    (6, 7): ((2, -1), (6, -1)),
    (7, 2): ((1, -1), (4, -1), (5, 1)),
    (7, 4): (),
}

REFERENCE_CELLS_N10 = {
    (1, 1): ((1, 1), (2, -1), (9, -1)),
    (1, 5): (),
    (2, 1): ((2, -1), (8, -1)),
    (2, 4): ((6, 1), (8, -2)),
    (2, 5): (),
    (2, 6): ((2, -1), (8, -1)),
    (2, 9): ((6, 1), (8, -2)),
    (3, 1): ((2, -1), (7, -1), (9, 1)),
    (3, 5): (),
    (4, 1): ((2, -1), (6, -1), (8, 1)),
    (4, 2): ((4, -1), (6, -1)),
    (4, 3): ((2, 1), (6, -2)),
    (4, 5): (),
    (4, 7): ((4, -1), (6, -1)),
    (4, 8): ((2, 1), (6, -2)),
    (5, 1): ((2, -1), (5, -1), (7, 1)),
    (5, 5): (),
    (6, 1): ((2, -1), (4, -1), (6, 1)),
    (6, 2): ((4, -2), (8, 1)),
    (6, 3): ((4, -1), (6, -1)),
    (6, 5): (),
    (6, 7): ((4, -2), (8, 1)),
    (6, 8): ((4, -1), (6, -1)),
    (7, 1): ((2, -1), (3, -1), (5, 1)),
    (7, 5): (),
    (8, 1): ((2, -2), (4, 1)),
    (8, 4): ((2, -1), (8, -1)),
    (8, 5): (),
    (8, 6): ((2, -2), (4, 1)),
    (8, 9): ((2, -1), (8, -1)),
    (9, 1): ((1, -1), (2, -1), (3, 1)),
    (9, 5): (),
}


def test_e_expr_reduces_indices():
    e = e_expr(8, [(9, 1), (0, 2), (8, 3), (4, 1), (4, -1)])
    assert e == e_expr(8, [(1, 1)])


def test_e_expr_str():
    assert str(e_expr(8, [(3, 1), (4, -1), (7, -1)])) == "e_3 - e_4 - e_7"
    assert str(e_expr(8, [(4, -2)])) == "-2e_4"
    assert str(e_expr(8, [])) == "0"


def test_e_product_index_range():
    with pytest.raises(PreconditionError):
        e_product(5, 0, 1)
    with pytest.raises(PreconditionError):
        e_product(5, 1, 5)


def test_closed_form_matches_generic_exhaustively():
    for n in range(3, 13):
        for i in range(1, n):
            for j in range(1, n):
                assert e_product(n, i, j) == e_product_generic(n, i, j)


def test_diagonal_products():
    for n in (5, 8, 9):
        for i in range(1, n):
            assert e_product(n, i, i) == e_expr(n, [(i, 1), (2 * i, -1), (n - i, -1)])


def test_reference_cells_n8():
    for (i, j), pairs in REFERENCE_CELLS_N8.items():
        assert e_product(8, i, j) == e_expr(8, list(pairs)), (i, j)


def test_reference_cells_n10():
    for (i, j), pairs in REFERENCE_CELLS_N10.items():
        assert e_product(10, i, j) == e_expr(10, list(pairs)), (i, j)


def test_e_basis_table_shape():
    table = e_basis_table(8)
    assert len(table) == 7 and all(len(row) == 7 for row in table)
    assert table[0][1] == e_expr(8, [(3, 1), (4, -1), (7, -1)])


def test_middle_column_vanishes():
    for n in (8, 10, 12):
        for i in range(1, n):
            assert e_product(n, i, n // 2) == e_expr(n, [])


def test_column_periodicity():
    for n in (4, 6, 8, 10, 12, 14):
        assert column_periodicity_holds(n)
    with pytest.raises(PreconditionError):
        column_periodicity_holds(7)


def test_formula_families_pass():
    for n in (8, 12):
        report = verify_product_formulas(n)
        assert report.case == 1
        assert report.ok, report.mismatches
    for n in (10, 14):
        report = verify_product_formulas(n)
        assert report.case == 2
        assert report.ok, report.mismatches


def test_formula_families_reject_odd():
    with pytest.raises(PreconditionError):
        verify_product_formulas(9)


def test_vector_roundtrip():
    e = e_expr(6, [(1, 2), (4, -1)])
    assert vector_to_e(6, e_to_vector(e)) == e
    with pytest.raises(QuandleKitError):
        vector_to_e(6, [1, 0, 0, 0, 0, 0])


def test_delta_series_odd():
    for n in (3, 5, 7, 9):
        shapes = delta_series_shapes(n, 3)
        assert shapes == [AbelianGroupShape(0, (n,))] * 3


def test_delta_series_even_first_quotient():
    for n in (4, 6, 8, 10):
        shape = delta_series_shapes(n, 1)[0]
        assert shape == AbelianGroupShape(1, (n // 2,))


def test_delta_series_left_normed_variant_runs():
    shapes = delta_series_shapes(6, 2, VARIANT_LEFT)
    assert shapes[0] == AbelianGroupShape(1, (3,))


def test_star_relations():
    for n in (6, 8, 10, 12):
        assert star_relations_check(n)
    with pytest.raises(PreconditionError):
        star_relations_check(5)


def test_odd_relations():
    for n in (3, 5, 7, 9):
        assert odd_relations_check(n)
    with pytest.raises(PreconditionError):
        odd_relations_check(6)


def test_complex_decomposition_odd():
    report = complex_decomposition_check(5)
    assert report.ok
    assert report.total_dim == 5
    assert [s.dim for s in report.summands] == [1, 2, 2]


def test_complex_decomposition_n3_single_plane():
    report = complex_decomposition_check(3)
    assert report.ok
    assert [s.dim for s in report.summands] == [1, 2]


def test_complex_decomposition_even():
    report = complex_decomposition_check(8)
    assert report.ok
    # two orbits, each 1 + 2 + 1
    labels = [s.label for s in report.summands]
    assert labels.count("triv.even") == 1 and labels.count("triv.odd") == 1
    assert sum(s.dim for s in report.summands) == 8


def test_complex_decomposition_tolerance_guard():
    with pytest.raises(PreconditionError):
        complex_decomposition_check(5, tol=0)
    tight = complex_decomposition_check(6, tol=1e-30)
    assert not tight.ok  # float residuals cannot be exactly zero everywhere


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=3, max_value=16), st.data())
def test_closed_form_random_spot_checks(n, data):
    i = data.draw(st.integers(min_value=1, max_value=n - 1))
    j = data.draw(st.integers(min_value=1, max_value=n - 1))
    assert e_product(n, i, j) == e_product_generic(n, i, j)
