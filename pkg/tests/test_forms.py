import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doubletwist.forms import (GramForm, bareiss_determinant, circulant_block,
                               determinant, direct_sum, intersection_form,
                               is_negative_definite)
from doubletwist.knotalg import DoubleTwist, alexander, branched_homology_order


def test_circulant_block_m1_p3():
    g = circulant_block(-1, 3)
    assert g.rows() == [[-3, 1, 1], [1, -3, 1], [1, 1, -3]]


def test_circulant_block_m2_p5():
    g = circulant_block(-2, 5)
    for i in range(5):
        assert g[i, i] == -5
        assert g[i, (i + 1) % 5] == 2
        assert g[i, (i - 1) % 5] == 2
    assert g[0, 2] == 0 and g[1, 4] == 0


def test_circulant_block_composite_p_far_entries_zero():
    g = circulant_block(-1, 4)
    assert g[0, 2] == 0 and g[1, 3] == 0
    assert g[0, 1] == g[0, 3] == 1


@pytest.mark.parametrize("m,p", [(0, 3), (1, 3), (-1, 2), (-1, 1)])
def test_circulant_block_rejects_bad_params(m, p):
    with pytest.raises(ValueError):
        circulant_block(m, p)


def test_intersection_form_blocks():
    g = intersection_form(-1, 2, 3)
    top = circulant_block(-1, 3)
    for i in range(3):
        for j in range(3):
            assert g[i, j] == top[i, j]
            assert g[3 + i, 3 + j] == (-2 if i == j else 0)
            assert g[i, 3 + j] == (1 if i == j else 0)


def test_intersection_form_n1_is_circulant():
    assert intersection_form(-1, 1, 3) == circulant_block(-1, 3)


def test_intersection_form_block_tridiagonal():
    g = intersection_form(-3, 4, 3)
    assert g.dim == 12
    for k in range(4):
        for l in range(4):
            for i in range(3):
                for j in range(3):
                    v = g[3 * k + i, 3 * l + j]
                    if abs(k - l) >= 2:
                        assert v == 0
                    elif abs(k - l) == 1:
                        assert v == (1 if i == j else 0)


def test_row_nonzero_counts():
    # per row: circulant rows carry diag + 2 neighbors, -2I rows only the
    # diag; each adjacent block contributes one coupling entry
    for p in (3, 4, 5, 7):
        for n in (1, 2, 3):
            g = intersection_form(-2, n, p)
            for r in range(g.dim):
                k = r // p
                expected = ((3 if k == 0 else 1)
                            + (1 if k > 0 else 0)
                            + (1 if k < n - 1 else 0))
                nz = sum(1 for x in g.entries[r] if x != 0)
                assert nz == expected, (p, n, r)


def test_direct_sum_basic():
    a = GramForm.from_rows([[-1]])
    s = direct_sum([a, a])
    assert s.rows() == [[-1, 0], [0, -1]]
    assert direct_sum([a]) == a
    with pytest.raises(ValueError):
        direct_sum([])


@given(st.integers(-4, -1), st.integers(1, 3), st.sampled_from([3, 4, 5]),
       st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_direct_sum_determinant_power(m, n, p, copies):
    g = intersection_form(m, n, p)
    assert determinant(direct_sum([g] * copies)) == determinant(g) ** copies


@given(st.integers(-4, -1), st.integers(1, 4), st.sampled_from([3, 4, 5, 7]))
@settings(max_examples=60, deadline=None)
def test_constructed_forms_are_symmetric(m, n, p):
    g = intersection_form(m, n, p)
    for i in range(g.dim):
        for j in range(g.dim):
            assert g[i, j] == g[j, i]


def test_negative_definite_examples():
    assert is_negative_definite(GramForm.from_rows([[-2, 1], [1, -2]]))
    assert not is_negative_definite(GramForm.from_rows([[-2, 2], [2, -2]]))
    assert is_negative_definite(intersection_form(-1, 3, 3))
    assert not is_negative_definite(GramForm.from_rows([[1]]))


def test_negative_definite_grid():
    for m in range(-4, 0):
        for n in range(1, 6):
            for p in (3, 5, 7):
                assert is_negative_definite(intersection_form(m, n, p))


def test_determinant_examples():
    assert determinant(GramForm.from_rows([[-1]])) == -1
    for d in (2, 3, 5):
        diag = GramForm.from_rows([[-1 if i == j else 0 for j in range(d)]
                                   for i in range(d)])
        assert determinant(diag) == (-1) ** d
    # circulant eigenvalue product (-1)(-4)(-4) = -16
    assert determinant(circulant_block(-1, 3)) == -16


def test_bareiss_matches_cofactor_small():
    rows = [[2, -1, 3], [0, 4, 1], [-2, 5, 7]]
    def cof(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] *
                   cof([r[:j] + r[j + 1:] for r in m[1:]])
                   for j in range(len(m)))
    assert bareiss_determinant(rows) == cof(rows)


def test_determinant_matches_homology_order():
    for m in range(-3, 0):
        for n in range(1, 5):
            for p in (3, 5, 7):
                g = intersection_form(m, n, p)
                delta = alexander(DoubleTwist(m, n))
                assert abs(determinant(g)) == branched_homology_order(delta, p)


def test_json_roundtrip():
    g = intersection_form(-2, 3, 5)
    blob = json.dumps(g.to_json())
    assert GramForm.from_json(json.loads(blob)) == g


def test_symmetry_enforced():
    with pytest.raises(ValueError):
        GramForm.from_rows([[0, 1], [2, 0]])
