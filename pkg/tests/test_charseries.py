import random

import pytest
from fractions import Fraction

from upadic.scalars import Val, INF, val_p
from upadic.newton import NewtonPolygon
from upadic.umatrix import UMatrix, build_matrix_genfun
from upadic.charseries import (charpoly_leverrier, charpoly_crt,
                               char_series_trunc, p_from_q, row_bound,
                               trunc_bound, truncation_error_bound,
                               check_scaled_integrality, parabola_floor, m_index,
                               equality_indices_upto, stable_valuations,
                               equality_set, secant_line, cuspidal_char_series,
                               polygon_from_records)


def test_charpoly_zero_and_diag():
    assert charpoly_leverrier([[0, 0], [0, 0]]) == [1, 0, 0]
    assert charpoly_leverrier([[3, 0], [0, 9]]) == [1, -12, 27]


def test_charpoly_crt_matches_leverrier_random():
    random.seed(21)
    for _ in range(12):
        n = random.randint(1, 8)
        rows = [[random.randint(-50, 50) for _ in range(n)] for _ in range(n)]
        assert charpoly_crt(rows) == charpoly_leverrier(rows)


def test_charpoly_crt_big_entries():
    random.seed(22)
    rows = [[random.randint(-10 ** 40, 10 ** 40) for _ in range(5)]
            for _ in range(5)]
    assert charpoly_crt(rows) == charpoly_leverrier(rows)


def test_char_series_methods_agree_on_umatrix():
    m = build_matrix_genfun(3, 18)
    a = char_series_trunc(m, method="leverrier")
    b = char_series_trunc(m, method="crt")
    assert a.coeffs == b.coeffs
    assert a.coeffs[0] == 1


def test_trace_valuation_p3():
    q = cuspidal_char_series(3, 20)
    assert val_p(q.a(1), 3) == Val(2)
    assert val_p(q.a(4), 3) == Val(26)


def test_p_from_q():
    q = char_series_trunc(UMatrix(3, 2, [[3, 0], [0, 9]]))
    p = p_from_q(q)
    assert p.coeffs == [1, -13, 39, -27]   # (1 - t)(1 - 12t + 27t^2)
    assert val_p(p.a(1) - (q.a(1) - 1), 3).is_infinite


def test_row_bound_values():
    assert row_bound(3, 1) == 2            # 3i - 1
    assert row_bound(3, 11) == 32
    assert row_bound(2, 1) == 3            # 4i - 1
    assert row_bound(13, 7) == Fraction(6, 7) * 7 - 1


def test_trunc_bound_examples():
    assert trunc_bound(3, 2, 10) == Val(34)          # 2 + 32
    assert trunc_bound(3, 1, 10) == Val(32)          # single omitted row 3n+2
    assert trunc_bound(3, 1, 20) == Val(62)
    assert trunc_bound(3, 0, 10).is_infinite


def test_truncation_error_bound_generic():
    b = truncation_error_bound(lambda i: 3 * i - 1, 4, 15)
    assert b == Val((2 + 5 + 8) + 47)


def test_scaled_integrality_all_primes():
    for p in (2, 3, 5, 7, 13):
        assert check_scaled_integrality(p)


def test_nhat_values():
    assert parabola_floor(1) == 2
    assert parabola_floor(4) == 26
    assert parabola_floor(13) == 260
    assert parabola_floor(40) == 2420
    assert parabola_floor(45) == 3060
    # equals the running sum of the row bounds 3i - 1
    for m in range(0, 30):
        assert parabola_floor(m) == sum(3 * i - 1 for i in range(1, m + 1))


def test_m_index():
    assert [m_index(i) for i in range(5)] == [0, 1, 4, 13, 40]
    assert equality_indices_upto(45) == [0, 1, 4, 13, 40]


def test_newton_polygon_two_segments():
    np = NewtonPolygon([(0, Val(0)), (1, Val(2)), (2, Val(7))])
    assert np.slopes() == [(Fraction(2), 1), (Fraction(5), 1)]


def test_newton_polygon_single_point_and_collinear():
    assert NewtonPolygon([(0, Val(0))]).slopes() == []
    np = NewtonPolygon([(0, Val(0)), (1, Val(3)), (2, Val(6)), (3, Val(9))])
    assert np.slopes() == [(Fraction(3), 3)]


def test_newton_polygon_skips_infinite():
    np = NewtonPolygon([(0, Val(0)), (1, INF), (2, Val(4))])
    assert np.vertices == [(0, Fraction(0)), (2, Fraction(4))]


def test_newton_polygon_value_at():
    np = NewtonPolygon([(0, Val(0)), (3, Val(6))])
    assert np.value_at(2) == 4
    with pytest.raises(ValueError):
        np.value_at(5)


def test_certification_small():
    recs = stable_valuations(3, 6, 16)
    for r in recs[1:]:
        assert r.certified
    assert recs[1].v_obs == Val(2)
    assert recs[4].v_obs == Val(26)


def test_equality_set_small():
    assert equality_set(5, 16) == {0, 1, 4}


def test_secant_line():
    assert secant_line(1, 2) == 10           # between (1,2) and (4,26)
    assert secant_line(2, 5) == 52            # slope 26 from (4,26)
    assert secant_line(2, 4) == 26            # endpoint
    assert secant_line(3, 40) == 2420


def test_polygon_from_records_uses_lower_bounds():
    recs = stable_valuations(3, 10, 16)
    poly = polygon_from_records(recs)
    assert poly.vertices[0] == (0, Fraction(0))
    assert poly.value_at(1) == 2


def test_secant_upper_pinch():
    recs = stable_valuations(3, 13, 20)
    from upadic.charseries import secant_upper
    rep = secant_upper(1, 2, recs)
    assert rep["pass"] and rep["secant"] == 10 and rep["parabola"] == 7
    rep = secant_upper(2, 5, recs)
    assert rep["pass"] and rep["secant"] == 52
    with pytest.raises(ValueError):
        secant_upper(1, 4, recs)


def test_newton_polygon_helper():
    from upadic.charseries import newton_polygon
    np = newton_polygon([(0, Val(0)), (1, Val(2)), (2, Val(7))])
    assert np.slopes() == [(Fraction(2), 1), (Fraction(5), 1)]


def test_p2_polygon_floor_to_20():
    # weight-0 cuspidal polygon for p = 2 stays above 3*C(m+1,2) through
    # m = 20 (points and the truncation bound both clear the floor)
    q2 = cuspidal_char_series(2, 25)
    for m in range(1, 21):
        floor = Val(3 * m * (m + 1) // 2)
        assert val_p(q2.a(m), 2) >= floor
        assert trunc_bound(2, m, 25) >= floor
