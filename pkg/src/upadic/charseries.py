"""Exact characteristic series det(1 - tM) of truncated U matrices, rigorous
truncation certificates for their coefficients, Newton polygons, and the
p=3 parabola (3/2)m(m-1) + 2m with its equality set and secant upper bounds.
"""

from fractions import Fraction
from functools import lru_cache

from .scalars import Val, INF, val_p, vp_int
from .newton import NewtonPolygon
from .modcurve import e_exponent, ip_poly
from . import umatrix


def charpoly_leverrier(rows):
    """Coefficients a_0..a_n of det(1 - tA) for an integer matrix A.

    Integer-only Faddeev-LeVerrier: every division is exact (asserted).
    """
    n = len(rows)
    coeffs = [1]
    b = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        ab = _matmul(rows, b)
        tr = sum(ab[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "trace not divisible in exact Leverrier step"
        coeffs.append(q)
        if k < n:
            b = [[ab[i][j] + (q if i == j else 0) for j in range(n)]
                 for i in range(n)]
    return coeffs


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt]
            for row in a]


def _is_probable_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):        # deterministic below 3.2e9
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _prime_pool(count=4096):
    out = []
    n = (1 << 30) + 1
    while len(out) < count:
        if _is_probable_prime(n):
            out.append(n)
        n += 2
    return tuple(out)


def _charpoly_hessenberg_mod(a, p):
    """char poly coefficients c_0..c_n of det(tI - A) mod p, via similarity
    reduction to Hessenberg form; returns [1, c_1, ..., c_n]."""
    n = len(a)
    h = [[x % p for x in row] for row in a]
    for k in range(n - 2):
        piv = next((r for r in range(k + 1, n) if h[r][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[k + 1], h[piv] = h[piv], h[k + 1]
            for row in h:
                row[k + 1], row[piv] = row[piv], row[k + 1]
        inv = pow(h[k + 1][k], -1, p)
        for i in range(k + 2, n):
            if h[i][k]:
                f = h[i][k] * inv % p
                hi, hk1 = h[i], h[k + 1]
                for j in range(k, n):
                    hi[j] = (hi[j] - f * hk1[j]) % p
                for row in h:
                    row[k + 1] = (row[k + 1] + f * row[i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        hm = h[m - 1][m - 1]
        prev = polys[m - 1]
        pm = [0] + prev
        for idx in range(len(prev)):
            pm[idx] = (pm[idx] - hm * prev[idx]) % p
        prod = 1
        for i in range(1, m):
            prod = prod * h[m - i][m - i - 1] % p
            if not prod:
                break
            coef = h[m - 1 - i][m - 1] * prod % p
            if coef:
                q = polys[m - 1 - i]
                for idx in range(len(q)):
                    pm[idx] = (pm[idx] - coef * q[idx]) % p
        polys.append(pm)
    top = polys[n]
    # top is ordered by ascending degree; c_k is the coefficient of t^(n-k)
    return [top[n - k] % p for k in range(n + 1)]


def _hadamard_bits(rows):
    n = len(rows)
    bits = n + 2
    for row in rows:
        s = sum(x * x for x in row)
        if s:
            bits += (s.bit_length() + 1) // 2 + 1
    return bits


def charpoly_crt(rows):
    """Coefficients a_0..a_n of det(1 - tA), exactly, by CRT over a
    deterministic pool of word-size primes with a Hadamard coefficient bound."""
    n = len(rows)
    if n == 0:
        return [1]
    bits = _hadamard_bits(rows)
    pool = _prime_pool()
    need = bits // 29 + 2
    if need > len(pool):
        raise ValueError("matrix too large for the built-in prime pool")
    primes = pool[:need]
    residues = [_charpoly_hessenberg_mod(rows, p) for p in primes]
    coeffs = []
    for k in range(n + 1):
        x, mod = 0, 1
        for res, p in zip(residues, primes):
            r = res[k]
            x += mod * ((r - x) * pow(mod % p, -1, p) % p)
            mod *= p
        if x > mod // 2:
            x -= mod
        coeffs.append(x)
    return coeffs


class CharSeries:
    """Exact coefficients a_0..a_n of det(1 - tM) for a truncation of U."""

    def __init__(self, p, coeffs, trunc_size, weight=0):
        assert coeffs[0] == 1
        self.p = p
        self.weight = weight
        self.coeffs = list(coeffs)
        self.trunc_size = trunc_size

    def a(self, m):
        return self.coeffs[m]

    def valuations(self):
        return [val_p(c, self.p) for c in self.coeffs]

    def __len__(self):
        return len(self.coeffs)


def char_series_trunc(m, n=None, method="auto", weight=0):
    """Characteristic series of the upper n x n truncation of a UMatrix.

    method: "leverrier" | "crt" | "auto" (crt above size 24).
    """
    n = m.n if n is None else n
    rows = m.truncation(n).rows if n < m.n else m.rows
    if method == "auto":
        method = "crt" if n > 24 else "leverrier"
    if method == "leverrier":
        coeffs = charpoly_leverrier(rows)
    elif method == "crt":
        coeffs = charpoly_crt(rows)
    else:
        raise ValueError("unknown method %r" % method)
    return CharSeries(m.p, coeffs, n, weight=weight)


def p_from_q(q):
    """The full characteristic series (1 - t) * Q from the cuspidal one."""
    a = q.coeffs
    b = [1] + [a[m] - a[m - 1] for m in range(1, len(a))] + [-a[-1]]
    return CharSeries(q.p, b, q.trunc_size, weight=q.weight)


def row_bound(p, i):
    """Proven valuation lower bound e(p-1)i - 1 for row i of the scaled matrix."""
    return e_exponent(p) * (p - 1) * i - 1


def check_scaled_integrality(p):
    """The finite check behind the row bounds: every term c x^i y^j of I_p
    satisfies v_p(c) >= e(pi - j)."""
    e = e_exponent(p)
    ip = ip_poly(p)
    for (i, j), c in ip.terms.items():
        if (i, j) == (0, 0):
            continue
        if Val(vp_int(c, p)) < Val(e * (p * i - j)):
            return False
    return True


def truncation_error_bound(row_bounds, m, n_trunc):
    """Valuation below which the n-truncation cannot change a_m.

    row_bounds: nondecreasing function i -> rational bound for row i of the
    scaled matrix.  Any size-m diagonal minor using a row beyond the
    truncation has valuation at least (sum of the m-1 smallest row bounds)
    plus the bound of the first omitted row.
    """
    if m == 0:
        return INF
    s = sum(Fraction(row_bounds(i)) for i in range(1, m))
    return Val(s + Fraction(row_bounds(n_trunc + 1)))


def trunc_bound(p, m, n_trunc):
    return truncation_error_bound(lambda i: row_bound(p, i), m, n_trunc)


def parabola_floor(m):
    """The p=3 parabola (3/2)m(m-1) + 2m below the cuspidal Newton polygon."""
    return Fraction(3, 2) * m * (m - 1) + 2 * m


def m_index(i):
    """m_i = (3^i - 1)/2, the abscissas of forced polygon contact."""
    return (3 ** i - 1) // 2


def equality_indices_upto(m_max):
    out = []
    i = 0
    while m_index(i) <= m_max:
        out.append(m_index(i))
        i += 1
    return out


class CoefficientRecord:
    """Certification record for one characteristic-series coefficient."""

    __slots__ = ("m", "v_obs", "bound", "agree", "certified")

    def __init__(self, m, v_obs, bound, agree):
        self.m = m
        self.v_obs = v_obs
        self.bound = bound
        self.agree = agree
        self.certified = bool(agree and v_obs < bound)

    def lower_bound(self):
        """A valuation the true coefficient provably meets or exceeds."""
        return self.v_obs if self.certified else min(self.v_obs, self.bound)

    def __repr__(self):
        return ("CoefficientRecord(m=%d, v=%s, bound=%s, certified=%s)"
                % (self.m, self.v_obs, self.bound, self.certified))


def certify(q1, q2, m_max):
    """Certification of v_p(a_m) from two truncations (sizes n and n+10).

    Enlarging the truncation changes each coefficient by an error of
    valuation at least the truncation bound, so the observed valuation is exact
    once it sits strictly below that bound.  The second truncation is an
    independent recomputation: its observed valuation must coincide and the
    integer difference must be divisible as the certificate predicts.
    """
    p = q1.p
    assert q2.trunc_size > q1.trunc_size
    out = []
    for m in range(0, m_max + 1):
        v = val_p(q1.a(m), p)
        bound = trunc_bound(p, m, q1.trunc_size)
        agree = (v == val_p(q2.a(m), p)
                 and val_p(q1.a(m) - q2.a(m), p) >= bound)
        out.append(CoefficientRecord(m, v, bound, agree))
    return out


@lru_cache(maxsize=None)
def cuspidal_char_series(p, size, method="auto"):
    m = umatrix.build_matrix_genfun(p, size)
    return char_series_trunc(m, method=method)


def stable_valuations(p, m_max, size):
    """Certified (m, v_p(a_m)) pairs for the weight-0 cuspidal series."""
    q1 = cuspidal_char_series(p, size)
    q2 = cuspidal_char_series(p, size + 10)
    return certify(q1, q2, m_max)


def equality_set(m_max, size):
    """{m <= m_max : v_3(a_m(Q_0)) = (3/2)m(m-1) + 2m}, all certified."""
    records = stable_valuations(3, m_max, size)
    out = set()
    for rec in records:
        target = Val(parabola_floor(rec.m))
        if rec.m == 0:
            out.add(0)
        elif rec.certified and rec.v_obs == target:
            out.add(rec.m)
        elif not rec.certified and rec.lower_bound() <= target:
            raise ValueError("coefficient %d neither certified nor provably "
                             "above the parabola" % rec.m)
    return out


def newton_polygon(points):
    """Lower convex hull of (m, valuation) points."""
    return NewtonPolygon(points)


def secant_line(i, m):
    """L(m) for the secant through (m_i, parabola) and (m_{i+1}, parabola)."""
    a, b = m_index(i), m_index(i + 1)
    ya, yb = parabola_floor(a), parabola_floor(b)
    return ya + Fraction(yb - ya, b - a) * (m - a)


def secant_upper(i, m, records):
    """The two-sided pinch at m_i < m < m_(i+1): parabola < polygon <= secant.

    records must certify the relevant coefficient range; the polygon is
    evaluated on proven lower bounds, so a pass here is rigorous.
    """
    a, b = m_index(i), m_index(i + 1)
    if not a < m < b:
        raise ValueError("m must lie strictly between %d and %d" % (a, b))
    hull = polygon_from_records(records)
    low = hull.value_at(m)
    sec = secant_line(i, m)
    par = parabola_floor(m)
    return {"m": m, "parabola": par, "polygon": low, "secant": sec,
            "pass": par < low <= sec}


def polygon_from_records(records):
    """Newton polygon of the certified/lower-bounded points.

    Uncertified coefficients enter at their proven lower bound, so the hull
    computed here lies at or below the true polygon everywhere.
    """
    return NewtonPolygon([(r.m, r.lower_bound()) for r in records])
