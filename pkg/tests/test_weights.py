import pytest
from fractions import Fraction

from upadic.scalars import Val, val_p, vp_int
from upadic.series import QSeries
from upadic.modcurve import d_series
from upadic.weights import (s_series, s_eisenstein_character, d9_series,
                            s_over_vs, expand_in_d3, s_ratio_divisibility,
                            TwistMatrix, twist_matrix, uk_matrix,
                            uk_char_series, certified_weight_records,
                            scaled_product_row_check, weight_contact_check,
                            slope_distribution, dim_level1, dimension_gap_bound,
                            dimension_gap_infimum, congruence_check, eisenstein_unit_congruence,
                            oldform_window_check)
from upadic.charseries import parabola_floor, trunc_bound


def test_hauptmodul_tower_identity():
    d3 = d_series(3, 201)
    d9 = d9_series(201)
    rhs = d9 + (d9 * d9).scalar_mul(9) + (d9 ** 3).scalar_mul(27)
    assert d3.agrees_with(rhs, upto=200)


def test_s_is_character_eisenstein():
    assert s_series(60).agrees_with(s_eisenstein_character(60), upto=50)


def test_s_squared_weight6_unit():
    s2 = s_series(30) ** 2
    assert s2.coeff(0) == 1


def test_s_over_vs_equals_d9_over_d3():
    r = s_over_vs(80)
    assert r.agrees_with(d9_series(80) * d_series(3, 80).inv(), upto=70)


def test_s_ratio_divisibility_pattern():
    assert s_ratio_divisibility(60)
    rho = expand_in_d3(s_over_vs(24), 20)
    assert rho[0] == 1 and rho[1] == -9
    assert rho[1] % 9 == 0
    assert all(r % 27 == 0 for r in rho[2:])


def test_expand_in_d3_needs_precision():
    with pytest.raises(ValueError):
        expand_in_d3(s_over_vs(10), 30)


def test_twist_matrix_unit_diagonal_any_k():
    for k in (6, 18, -6, 54):
        t = twist_matrix(k, 12)
        assert t.rho[0] == 1
        assert t.check_bounds() == []


def test_twist_matrix_rejects_bad_weight():
    with pytest.raises(ValueError):
        TwistMatrix(4, 8)      # not divisible by 6
    with pytest.raises(ValueError):
        TwistMatrix(9, 8)


def test_twist_subdiagonal_valuations():
    # k = 18 = 2*3^2: n = 1: first subdiagonal valuation >= n - v_3(1) = 1
    t18 = twist_matrix(18, 10)
    assert t18.n_param == 1
    assert t18.scaled_entry_valuation(1) >= Val(1)
    # k = 54 = 2*3^3: n = 2: third subdiagonal >= 2 - v_3(3) = 1
    t54 = twist_matrix(54, 10)
    assert t54.n_param == 2
    assert t54.scaled_entry_valuation(3) >= Val(1)
    # odd m keeps a half-integer margin
    assert t54.scaled_entry_valuation(1).v % 1 == Fraction(1, 2)


def test_uk_matrix_weight0_is_plain():
    assert uk_matrix(0, 8).rows == uk_matrix(0, 8).rows
    from upadic.umatrix import build_matrix_genfun
    assert uk_matrix(0, 8).rows == build_matrix_genfun(3, 8).rows


def test_uk_matrix_scaled_rows_keep_bound():
    assert scaled_product_row_check(18, 10) is None
    assert scaled_product_row_check(54, 10) is None


def test_uk_trace_valuation_k18():
    q18 = uk_char_series(18, 12)
    assert val_p(q18.a(1), 3) >= Val(2)


def test_weight_contact_small():
    rep = weight_contact_check(1, 1)            # k = 18, contact at s = 1
    assert rep["pass"]
    assert rep["points"][1]["value"] == Val(2)


def test_slope_distribution_n2():
    rep = slope_distribution(2)
    assert rep["pass"]
    assert rep["bands"][0]["slopes"] == ["2"]


def test_dim_level1():
    assert dim_level1(0) == 1
    assert dim_level1(12) == 2
    assert dim_level1(2) == 0
    assert dim_level1(14) == 1
    assert dim_level1(-4) == 0
    assert dim_level1(7) == 0
    # brute-force cross-check for weight 12: E_4^3, Delta independent
    from upadic.modcurve import eisenstein, delta_series
    e43 = eisenstein(4, 6) ** 3
    d = delta_series(6)
    # they are linearly independent: q-coefficients differ
    assert e43.coeff(0) == 1 and d.coeff(0) == 0


def test_dimension_gap_bound_structure():
    v = dimension_gap_bound(5, 0, 1)
    assert isinstance(v, Val) and not v.is_infinite
    assert dimension_gap_bound(5, 0, 0) == Val(0)
    # monotone-ish: going one step right never drops by more than 1
    for m in range(1, 20):
        assert dimension_gap_bound(5, 0, m + 1).v >= dimension_gap_bound(5, 0, m).v - 1
    # boundary case m = d_v exactly: the (v+1)(m - d_v) term vanishes
    assert dimension_gap_bound(5, 0, dim_level1(0)) is not None


def test_dimension_gap_infimum_is_min():
    for m in (3, 5, 9):
        assert dimension_gap_infimum(3, m) <= dimension_gap_bound(3, 0, m)


def test_congruence_identity_case():
    with pytest.raises(ValueError):
        congruence_check(6, 6, 5, 12)


def test_congruence_small():
    rep = congruence_check(0, 18, 8, 16)
    assert rep["n"] == 2
    assert rep["pass"]
    # coefficient differences all divisible by 3^(n+1)
    for row in rep["rows"][1:]:
        assert row["v_diff"] >= Val(3)


def test_unit_congruence_n0():
    assert eisenstein_unit_congruence(5, 0, prec=30, dterms=15)["pass"]
    assert eisenstein_unit_congruence(7, 0, prec=30, dterms=15)["pass"]
    with pytest.raises(ValueError):
        eisenstein_unit_congruence(3, 0)


def test_oldform_window_n1():
    rep = oldform_window_check(1)
    assert rep["pass"]
    assert rep["entering_slope"] == "2"
    assert rep["threshold"] == "7/2"


def test_trunc_bound_covers_congruence_soundness():
    # the truncation bound exceeds every congruence requirement n+1 used
    for m in range(1, 21):
        assert trunc_bound(3, m, 30) >= Val(4)
