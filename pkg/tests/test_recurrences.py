from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from alpert.exact import SurdValue
from alpert.recurrences import (
    A_I,
    B_I,
    BESSEL_RANGES,
    EQUATIONS,
    J_J,
    K_I,
    check_bessel_difference,
    check_gen_eig_i,
    check_gen_eig_j,
    check_mixed_recurrence,
    probe_gen_eig_j_boundary,
    recurrence_report,
    regenerate_via_recurrence,
)
from alpert.refinement import CoeffMatrixPair, build_coeff_matrices, sign_mirror

C3 = build_coeff_matrices(3)


def _holds(eq, C, i, j):
    lhs, rhs = EQUATIONS[eq](C, i, j)
    return lhs == rhs


def test_gen_eig_i_points():
    assert _holds("geneigi", C3, 1, 1)
    lhs, rhs = EQUATIONS["geneigi"](C3, 2, 0)
    assert not rhs and not lhs
    assert check_gen_eig_i(build_coeff_matrices(1)) == []


def test_gen_eig_j_points():
    assert _holds("geneigj", C3, 2, 1)
    assert _holds("geneigj", build_coeff_matrices(2), 1, 1)


def test_mixed_points():
    assert _holds("recurij", build_coeff_matrices(2), 1, 0)
    assert _holds("recurij", C3, 2, 2)
    assert _holds("recurij", build_coeff_matrices(1), 0, 0)


@pytest.mark.parametrize("n", range(13))
def test_suites_hold(n):
    C = build_coeff_matrices(n)
    assert check_gen_eig_i(C) == []
    assert check_gen_eig_j(C) == []
    assert check_mixed_recurrence(C) == []


def test_gen_eig_j_boundary_probe():
    for n in (3, 6, 9):
        assert probe_gen_eig_j_boundary(build_coeff_matrices(n)) == {"j=0": False, "i=n": True}


def test_bessel_difference_range():
    for n in range(3, 13):
        rep = check_bessel_difference(build_coeff_matrices(n))
        assert rep["maximal_range"] == "0<i<n, 0<j<n"
        assert "0<i<j<n" in rep["valid_ranges"] and "0<j<i<n" in rep["valid_ranges"]
        assert "0<i<n, 0<=j<n" not in rep["valid_ranges"]
        # failures at j = 0 sit on odd rows only
        bad = rep["ranges"]["0<i<n, 0<=j<n"]["violations"]
        assert bad and all(v["j"] == 0 and v["i"] % 2 == 1 for v in bad)


def test_bessel_points_n4():
    C4 = build_coeff_matrices(4)
    assert _holds("pdde", C4, 2, 1)
    assert _holds("pdde", C4, 3, 2)
    assert not any(pred(2, 2, 4) for name, pred in BESSEL_RANGES.items() if "<j<n" in name and "0<i<j" in name)


def test_violation_schema():
    C = build_coeff_matrices(3)
    rows = [list(r) for r in C.C1]
    rows[2][1] = rows[2][1] * 2
    bad = tuple(tuple(r) for r in rows)
    out = check_gen_eig_i(CoeffMatrixPair(3, bad, sign_mirror(bad)))
    assert out
    assert set(out[0]) == {"equation", "i", "j", "lhs", "rhs"}
    assert out[0]["equation"] == "geneigi"
    assert SurdValue.from_json(out[0]["lhs"]) != SurdValue.from_json(out[0]["rhs"])


@pytest.mark.parametrize("n", [0, 1, 3, 8, 12])
def test_regenerate(n):
    assert regenerate_via_recurrence(n) == build_coeff_matrices(n, "oracle")


def test_report_shape():
    rep = recurrence_report(4)
    assert rep["regenerated_equals_direct"]
    assert rep["pdde"]["maximal_range"] == "0<i<n, 0<j<n"


@given(st.integers(1, 8), st.integers(0, 8), st.integers(0, 8))
def test_operator_linearity(i, j, seed):
    C = build_coeff_matrices(9)
    M2 = tuple(tuple(x * Fraction(seed + 1, 3) for x in row) for row in C.C1)
    S = CoeffMatrixPair(9, tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(C.C1, M2)), C.Cm1)
    B = CoeffMatrixPair(9, M2, C.Cm1)
    for op in (A_I, B_I, K_I, J_J):
        assert op.apply(S.entry, i, j) == op.apply(C.entry, i, j) + op.apply(B.entry, i, j)
