"""Weight twists for p=3 via multiplication by (S/V(S))^(k/3), the quadratic
lower-bound function built from classical dimension gaps, congruences between
characteristic series of nearby weights, and slope-distribution reports.
"""

from fractions import Fraction
from functools import lru_cache

from .scalars import Val, INF, val_p, vp_int
from .series import QSeries, eta_quotient
from .modcurve import d_series
from .newton import NewtonPolygon
from . import umatrix
from .charseries import (char_series_trunc, certify, trunc_bound, m_index,
                         parabola_floor, p_from_q, polygon_from_records)


@lru_cache(maxsize=None)
def s_series(prec):
    """S = (Delta^3 / Delta(q^3))^(1/8) = prod (1-q^n)^9 (1-q^3n)^-3,
    the weight-3 level-3 Eisenstein series with the quadratic character."""
    return eta_quotient([(1, 9), (3, -3)], prec)


def s_eisenstein_character(prec):
    """Independent expansion of S: 1 - 9 sum (sum_{d|n} chi(d) d^2) q^n with
    chi the quadratic character mod 3."""
    sig = [0] * prec
    for d in range(1, prec):
        ch = [0, 1, -1][d % 3]
        if ch:
            dd = ch * d * d
            for n in range(d, prec, d):
                sig[n] += dd
    return QSeries(0, [1] + [-9 * s for s in sig[1:]], prec)


@lru_cache(maxsize=None)
def d9_series(prec):
    """The hauptmodul of X_0(9): (Delta(q^9)/Delta(q))^(1/8)."""
    return eta_quotient([(9, 3), (1, -3)], max(prec - 1, 0)).shift(1)


@lru_cache(maxsize=None)
def s_over_vs(prec):
    """S/V(S), equal to d_9/d_3 as q-series."""
    s = s_series(prec)
    vs = s_series(prec // 3 + 1).v_substitute(3).truncate(prec)
    return s * vs.inv()


def expand_in_d3(f, nterms):
    """Coefficients r_0..r_nterms of f = sum r_m d_3^m, by triangular solve.

    Valid for f with integer d_3-expansion; raises on non-integers.
    """
    prec = nterms + 2
    if f.prec < prec:
        raise ValueError("series precision %d too low for %d terms" % (f.prec, nterms))
    d3 = d_series(3, prec)
    res = f.truncate(prec)
    dpow = QSeries.const(1, prec)
    out = []
    for m in range(nterms + 1):
        r = res.coeff(m)
        if isinstance(r, Fraction):
            if r.denominator != 1:
                raise ValueError("non-integer d_3 coefficient %s" % r)
            r = r.numerator
        out.append(r)
        if r:
            res = res - dpow.scalar_mul(r)
        dpow = dpow * d3
    return out


def s_ratio_divisibility(nterms=60):
    """The expansion facts behind the twist bounds: S/V(S) - 1 has d_3
    coefficients with 9 | r_1 and 27 | r_m for m >= 2."""
    rho = expand_in_d3(s_over_vs(nterms + 4), nterms)
    if rho[0] != 1:
        return False
    if rho[1] % 9:
        return False
    return all(r % 27 == 0 for r in rho[2:])


class TwistMatrix:
    """Multiplication by (S/V(S))^(k/3) on the cuspidal space.

    In the plain basis of d_3 powers this is the unit lower-triangular
    Toeplitz matrix with subdiagonal coefficients rho_m; in the scaled basis
    its (j+m, j) entry is rho_m 3^(-3m/2), an element of Z[sqrt3].
    """

    def __init__(self, k, size):
        if k % 6:
            raise ValueError("twist weight must be even and divisible by 3")
        self.k = k
        self.size = size
        self.n_param = vp_int(k, 3) - 1 if k else None
        if k == 0:
            self.rho = [1] + [0] * size
        else:
            power = k // 3
            base = s_over_vs(size + 4)
            self.rho = expand_in_d3(base ** power if power >= 0
                                    else base.inv() ** (-power), size)

    def scaled_entry_valuation(self, m):
        """v_3 of the scaled-basis entry C_(j+m, j) = rho_m 3^(-3m/2)."""
        if self.rho[m] == 0:
            return INF
        return Val(vp_int(self.rho[m], 3) - Fraction(3 * m, 2))

    def check_bounds(self):
        """Unit diagonal, strict lower triangularity (by construction), the
        Z[sqrt3] membership v_3(rho_m) >= ceil(3m/2), and the subdiagonal
        bound v_3(C_(j+m,j)) >= n - v_3(m); returns the list of violations."""
        bad = []
        if self.rho[0] != 1:
            bad.append(("diag", self.rho[0]))
        for m in range(1, self.size + 1):
            r = self.rho[m]
            if r == 0:
                continue
            v = vp_int(r, 3)
            if 2 * v < 3 * m:          # v < ceil(3m/2) for integers
                bad.append(("integrality", m, r))
            if self.k and Val(v - Fraction(3 * m, 2)) < Val(self.n_param - vp_int(m, 3)):
                bad.append(("subdiagonal", m, r))
        return bad

    def plain_rows(self, n):
        return [[self.rho[i - j] if 0 <= i - j <= self.size else 0
                 for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def twist_matrix(k, size):
    t = TwistMatrix(k, size)
    bad = t.check_bounds()
    if bad:
        raise ValueError("twist bound violations for k=%d: %r" % (k, bad[:3]))
    return t


@lru_cache(maxsize=None)
def uk_matrix(k, size):
    """Matrix of the weight-k operator (up to similarity): M * C in the plain
    basis of d_3 powers.

    Row i of M vanishes beyond column 3i, so taking M as an n x 3n slab makes
    every entry of the n x n window equal to the entry of the infinite
    product; the standard truncation certificate then applies unchanged.
    """
    m = umatrix.build_matrix_genfun(3, size)
    if k == 0:
        return m
    from .modcurve import ip_poly
    wide = 3 * size
    cols = umatrix.column_recurrence(3, ip_poly(3), wide)
    rho = twist_matrix(k, wide).rho
    rows = []
    for i in range(1, size + 1):
        mrow = [cols[l].get(i, 0) for l in range(wide + 1)]   # M_il, l = 0..wide
        row = []
        for j in range(1, size + 1):
            acc = 0
            for l in range(j, min(3 * i, wide) + 1):
                x = mrow[l]
                if x:
                    acc += x * rho[l - j]
            row.append(acc)
        rows.append(row)
    return umatrix.UMatrix(3, size, rows, provenance="genfun*twist")


@lru_cache(maxsize=None)
def uk_char_series(k, size, method="auto"):
    q = char_series_trunc(uk_matrix(k, size), method=method)
    q.weight = k
    return q


def certified_weight_records(k, m_max, size):
    """Certified coefficient records for Q_k from truncations size, size+10.

    The scaled rows of M'C' obey the same bound 3i-1 as M', so the same
    truncation certificate applies.
    """
    q1 = uk_char_series(k, size)
    q2 = uk_char_series(k, size + 10)
    return certify(q1, q2, m_max)


def scaled_product_row_check(k, size):
    """Entrywise check that the scaled twisted matrix keeps row bounds:
    v_3((MC)_ij) + (3/2)(j-i) >= 3i - 1."""
    mk = uk_matrix(k, size)
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            x = mk.entry(i, j)
            if x == 0:
                continue
            if Val(vp_int(x, 3) + Fraction(3 * (j - i), 2)) < Val(3 * i - 1):
                return (i, j, x)
    return None


def weight_contact_check(l, n, size=None):
    """For k = 2*3^(n+1)*l: at every parabola-contact point s = m_i below
    2*3^(n-1), the weight-k series keeps v_3(a_s) = (3/2)s(s-1) + 2s."""
    k = 2 * 3 ** (n + 1) * l
    limit = 2 * 3 ** (n - 1)
    points = [m for m in (m_index(i) for i in range(0, 10)) if m < limit]
    if size is None:
        size = max(3 * max(points) + 12, 24)
    recs = certified_weight_records(k, max(points), size)
    report = {"k": k, "n": n, "l": l, "points": []}
    ok = True
    for s in points:
        rec = recs[s]
        want = Val(parabola_floor(s))
        good = (s == 0) or (rec.certified and rec.v_obs == want)
        ok &= good
        report["points"].append({"s": s, "value": rec.v_obs, "expected": want,
                                 "certified": rec.certified or s == 0, "pass": good})
    report["pass"] = ok
    return report


def exact_polygon_between(recs, a, b):
    """The true Newton polygon restricted to [a, b], rigorously.

    Requires every point in [a, b] certified; the polygon of the certified
    points must coincide on [a, b] with the hull of all available points
    taken at their proven lower bounds (which is a global lower envelope),
    and its endpoints must be polygon vertices.
    """
    for rec in recs[a:b + 1]:
        if rec.m and not rec.certified:
            raise ValueError("point %d not certified" % rec.m)
    inner = NewtonPolygon([(r.m, r.v_obs) for r in recs[a:b + 1]])
    outer = polygon_from_records(recs)
    for m in range(a, b + 1):
        if outer.value_at(m) != inner.value_at(m):
            raise ValueError("hull not pinned at %d" % m)
    return inner


def slope_distribution(n, l=1, size=None):
    """Slope statistics of the weight-k polygon, k = 2*3^(n+1)*l, between the
    forced vertices m_i and m_(i+1) for i < n-1: exactly 3^i slopes, lying in
    [m_(i+1)+1, m_(i+2)-2], average 3^(i+1)-1, min >= 3m_i+2, max <= 3m_(i+1)-1.
    """
    k = 2 * 3 ** (n + 1) * l
    top = m_index(n - 1)
    if size is None:
        size = max(3 * top + 12, 30)
    recs = certified_weight_records(k, min(size - 2, 3 * top + 6), size)
    report = {"k": k, "n": n, "bands": [], "pass": True}
    for i in range(0, n - 1):
        a, b = m_index(i), m_index(i + 1)
        poly = exact_polygon_between(recs, a, b)
        slopes = []
        for s, mult in poly.slopes():
            slopes.extend([s] * mult)
        lo, hi = m_index(i + 1) + 1, m_index(i + 2) - 2
        count_ok = len(slopes) == 3 ** i
        window_ok = all(lo <= s <= hi for s in slopes)
        avg = sum(slopes) / len(slopes)
        avg_ok = avg == 3 ** (i + 1) - 1
        min_ok = min(slopes) >= 3 * m_index(i) + 2
        max_ok = max(slopes) <= 3 * m_index(i + 1) - 1
        band_ok = count_ok and window_ok and avg_ok and min_ok and max_ok
        report["bands"].append({"i": i, "count": len(slopes),
                                "slopes": [str(s) for s in slopes],
                                "average": str(avg), "window": (lo, hi),
                                "pass": band_ok})
        report["pass"] &= band_ok
    return report


def dim_level1(k):
    """Dimension of the classical level-1 modular forms of weight k."""
    if k < 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


def dimension_gap_bound(p, k, m, weight_step=None, prefactor=None):
    """Quadratic lower bound for the weight-k polygon from dimension gaps.

    For p >= 5 this is the verbatim construction with steps of p-1.  For
    p in {2, 3} the classical ladder steps by weight 4 instead, and the
    prefactor (p-1)/(p+1) is kept as the analogous default; reports flag
    this variant as adapted, never as verbatim.
    """
    if weight_step is None:
        weight_step = p - 1 if p >= 5 else 4
    if prefactor is None:
        prefactor = Fraction(p - 1, p + 1)
    if m <= 0:
        return Val(0) if m == 0 else Val(-m)
    dims = [dim_level1(k)]
    while dims[-1] <= m:
        dims.append(dim_level1(k + len(dims) * weight_step))
    if m < dims[0]:
        return Val(prefactor * 0 - m)
    v = max(u for u in range(len(dims)) if dims[u] <= m)
    acc = Fraction(0)
    for u in range(1, v + 1):
        acc += u * (dims[u] - dims[u - 1])
    acc += (v + 1) * (m - dims[v])
    return Val(prefactor * acc - m)


def dimension_gap_infimum(p, m, k_samples=None):
    """Measured infimum of the weight-indexed lower bounds over a set of
    representative even weights."""
    if k_samples is None:
        k_samples = range(0, 24, 2)
    return min(dimension_gap_bound(p, k, m) for k in k_samples)


def congruence_check(k, k2, m_max, size):
    """v_3 of coefficient differences of the full series for two weights.

    With k2 - k = 2 * 3^n * l (3 not dividing l), every coefficient
    difference must have v_3 >= n+1; the margin against the strengthened
    candidate bound (adapted quadratic term + n + 1) is measured and
    reported, not asserted.
    """
    if k == k2:
        raise ValueError("weights must differ")
    diff = k2 - k
    n = vp_int(diff, 3)
    if diff % 2:
        raise ValueError("weight difference must be even")
    p1 = p_from_q(uk_char_series(k, size))
    p2 = p_from_q(uk_char_series(k2, size))
    rows = []
    ok = True
    for m in range(0, m_max + 1):
        d = p1.a(m) - p2.a(m)
        v = val_p(d, 3)
        need = Val(n + 1)
        sound = m == 0 or trunc_bound(3, m, size) >= need
        passed = v >= need and sound
        ok &= passed
        margin = None
        if m >= 2:
            cand = dimension_gap_infimum(3, m - 2).v + n + 1
            margin = (v.v - cand) if not v.is_infinite else None
        rows.append({"m": m, "v_diff": v, "required": need, "pass": passed,
                     "strengthened_candidate_margin": margin})
    return {"k": k, "k2": k2, "n": n, "rows": rows, "pass": ok}


def eisenstein_unit_congruence(p, n, prec=51, dterms=40):
    """E_(p-1)^(p^n)(q) / E_(p-1)^(p^n)(q^p) - 1 must be divisible by p^(n+1),
    both as a q-series (prec coefficients) and in its d_p-expansion."""
    from .modcurve import eisenstein
    if p not in (5, 7):
        raise ValueError("classical route needs p in {5, 7}")
    e = eisenstein(p - 1, prec)
    en = e ** (p ** n)
    env = (eisenstein(p - 1, prec // p + 2) ** (p ** n)).v_substitute(p).truncate(prec)
    phi = en * env.inv() - 1
    mod = p ** (n + 1)
    q_ok = all(Fraction(phi.coeff(i)) % mod == 0 for i in range(phi.prec))
    # d_p expansion by triangular solve
    d = d_series(p, min(dterms + 2, phi.prec))
    res = phi.truncate(d.prec)
    dpow = QSeries.const(1, d.prec)
    d_ok = True
    for m in range(min(dterms, d.prec - 2) + 1):
        r = Fraction(res.coeff(m))
        assert r.denominator == 1
        if r % mod:
            d_ok = False
            break
        if r:
            res = res - dpow.scalar_mul(r)
        dpow = dpow * d
    return {"p": p, "n": n, "q_divisible": q_ok, "d_divisible": d_ok,
            "pass": q_ok and d_ok}


def oldform_window_check(n, size=None):
    """Newton-polygon content of the oldform slope window for k = 2*3^(n+1):
    the polygon value at m_n equals the parabola, the slope entering m_n is
    below k/4 - 1, and each such slope s pairs with a mate k-1-s above 3k/4."""
    k = 2 * 3 ** (n + 1)
    mn = m_index(n)
    if size is None:
        size = max(3 * mn + 12, 24)
    recs = certified_weight_records(k, mn, size)
    rec = recs[mn]
    contact = rec.certified and rec.v_obs == Val(parabola_floor(mn))
    poly = exact_polygon_between(recs, 0, mn)
    entering = poly.slopes()[-1][0]
    threshold = Fraction(k, 4) - 1
    slope_ok = entering < threshold
    mates = [(str(s), str(k - 1 - s)) for s, _ in poly.slopes()]
    mates_ok = all(k - 1 - s > Fraction(3 * k, 4) for s, _ in poly.slopes()
                   if s < threshold)
    return {"k": k, "m_n": mn, "contact": contact,
            "entering_slope": str(entering), "threshold": str(threshold),
            "slope_below_threshold": slope_ok, "mates": mates,
            "mates_above_3k4": mates_ok,
            "pass": contact and slope_ok and mates_ok}
