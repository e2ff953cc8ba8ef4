import pytest

from cycleres.associahedron import f_formula
from cycleres.betti import betti_closed_form
from cycleres.tableaux import (
    Tableau,
    associahedron_count,
    associahedron_shape,
    conjugate,
    enumerate_family,
    enumerate_syt,
    family_params,
    hook_count,
    involution,
    restrict_to_syzygy,
    restricts_to_syzygy,
    syzygy_count,
    syzygy_shape,
)


def test_conjugate():
    assert conjugate((2, 2, 1)) == (3, 2)
    assert conjugate((2, 2, 1, 1)) == (4, 2)
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((1, 1, 1)) == (3,)
    assert conjugate(conjugate((5, 3, 3, 1))) == (5, 3, 3, 1)


def test_syzygy_conjugate_identity():
    for n in range(5, 12):
        for d in range(1, n - 2):
            assert conjugate(syzygy_shape(n, d)) == (n - d - 1, 2) + (1,) * (d - 1)


def test_hook_count_values():
    assert hook_count((1,)) == 1
    assert hook_count((5,)) == 1
    assert hook_count((2, 2, 1)) == 5
    assert hook_count((3, 2, 1)) == 16
    assert hook_count((2, 2)) == 2


def test_hook_count_invariant_under_conjugation():
    for shape in [(3, 2), (4, 2, 1), (5, 5), (3, 3, 1, 1), (6, 2, 1, 1)]:
        assert hook_count(shape) == hook_count(conjugate(shape))


def test_shape_validation():
    with pytest.raises(ValueError):
        hook_count((2, 3))
    with pytest.raises(ValueError):
        hook_count(())
    with pytest.raises(ValueError):
        hook_count((2, 0))


def test_tableau_validation():
    Tableau(((1, 2), (3, 4), (5,)))
    with pytest.raises(ValueError):
        Tableau(((1, 3), (2, 2), (5,)))  # repeated entry
    with pytest.raises(ValueError):
        Tableau(((2, 1),))  # row not increasing
    with pytest.raises(ValueError):
        Tableau(((1, 4), (2, 3), (5,)))  # column 2 not increasing
    with pytest.raises(ValueError):
        Tableau(((1,), (2, 3)))  # rows not weakly decreasing


def test_enumerate_five_tableaux_in_reading_order():
    got = [t.rows for t in enumerate_syt((2, 2, 1))]
    assert got == [
        ((1, 2), (3, 4), (5,)),
        ((1, 2), (3, 5), (4,)),
        ((1, 3), (2, 4), (5,)),
        ((1, 3), (2, 5), (4,)),
        ((1, 4), (2, 5), (3,)),
    ]


def test_enumerate_matches_hook_count_small_shapes():
    shapes = [(1,), (3,), (2, 1), (2, 2), (3, 2, 1), (4, 4), (3, 3, 2), (2, 2, 2, 2)]
    for shape in shapes:
        assert len(enumerate_syt(shape)) == hook_count(shape)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_syt((8, 7))
    assert len(enumerate_syt((8, 7), cap=15)) == hook_count((8, 7))


def test_family_shapes():
    assert associahedron_shape(6, 2) == (3, 3, 1)
    assert associahedron_shape(7, 4) == (5, 5)
    assert syzygy_shape(6, 2) == (3, 2, 1)
    assert syzygy_shape(5, 1) == (2, 2, 1)
    with pytest.raises(ValueError):
        associahedron_shape(6, 4)
    with pytest.raises(ValueError):
        syzygy_shape(4, 1)


def test_family_params_roundtrip():
    for n in range(4, 11):
        for d in range(1, n - 2):
            assert family_params(associahedron_shape(n, d)) == (n, d)
    with pytest.raises(ValueError):
        family_params((3, 2, 1))
    with pytest.raises(ValueError):
        family_params((1, 1, 1))


def test_family_counts_match_dissections_and_betti():
    assert hook_count((2, 2, 1)) == f_formula(5, 1) == 5
    for n in range(4, 13):
        for d in range(1, n - 2):
            assert associahedron_count(n, d) == f_formula(n, d)
    for n in range(5, 13):
        for d in range(1, n - 2):
            assert syzygy_count(n, d) == betti_closed_form(n, d)


def test_syzygy_counts_frozen():
    assert syzygy_count(6, 2) == 16
    assert syzygy_count(5, 1) == 5
    assert syzygy_count(9, 4) == 189


def test_restricts_to_syzygy_examples():
    yes = Tableau(((1, 2, 3, 4), (5, 6, 8, 9), (7,)))
    no = Tableau(((1, 2, 3, 4), (5, 6, 7, 8), (9,)))
    assert family_params(yes.shape) == (7, 3)
    assert restricts_to_syzygy(yes)
    assert not restricts_to_syzygy(no)
    restricted = restrict_to_syzygy(yes)
    assert restricted.shape == syzygy_shape(7, 3)
    assert restricted.rows == ((1, 2, 3, 4), (5, 6), (7,))
    with pytest.raises(ValueError):
        restrict_to_syzygy(no)


def test_involution_fixes_restricting_tableaux():
    yes = Tableau(((1, 2, 3, 4), (5, 6, 8, 9), (7,)))
    assert involution(yes) == yes


def test_involution_grows_from_column_bottom():
    # (7, 2) tableau with 8 at the bottom of the first column
    t = Tableau(((1, 2, 3), (4, 5, 6), (7,), (8,)))
    s = involution(t)
    assert s.shape == associahedron_shape(7, 3)
    assert s.rows == ((1, 2, 3, 8), (4, 5, 6, 9), (7,))
    assert involution(s) == t


def test_involution_grows_from_singleton_bottom_row():
    # 9 sits at the bottom of column 1, so the tableau grows to the d=4 family
    t = Tableau(((1, 2, 3, 4), (5, 6, 7, 8), (9,)))
    s = involution(t)
    assert s.shape == associahedron_shape(7, 4)
    assert s.rows == ((1, 2, 3, 4, 9), (5, 6, 7, 8, 10))
    assert involution(s) == t


def test_involution_shrinks_from_row_end():
    # 8 ends row 1 while 9 ends row 2, so 8 drops to a new bottom row
    t = Tableau(((1, 3, 4, 8), (2, 5, 7, 9), (6,)))
    s = involution(t)
    assert s.shape == associahedron_shape(7, 2)
    assert s.rows == ((1, 3, 4), (2, 5, 7), (6,), (8,))
    assert involution(s) == t


def test_involution_d1_always_fixed():
    for n in (5, 6, 7):
        for t in enumerate_family(n, 1):
            assert involution(t) == t


def test_involution_exhaustive_small():
    for n in (5, 6, 7):
        for d in range(1, n - 2):
            fixed = 0
            for t in enumerate_family(n, d):
                s = involution(t)
                assert involution(s) == t
                if s == t:
                    fixed += 1
                    assert restricts_to_syzygy(t)
                else:
                    assert abs(s.size - t.size) == 1
                    assert family_params(s.shape)[0] == n
            assert fixed == betti_closed_form(n, d)


def test_tableau_render_and_json():
    t = Tableau(((1, 2), (3, 4), (5,)))
    assert t.to_json() == [[1, 2], [3, 4], [5]]
    assert t.render() == "1 2\n3 4\n5"
    assert str(t) == "12/34/5"
