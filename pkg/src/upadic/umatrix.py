"""The matrix of U acting on cuspidal weight-0 forms in the basis of powers
of the hauptmodul d_p, built two independent ways: by expanding U(d_p^j) in
q and re-expressing it in powers of d_p (oracle), and from the linear
recurrence induced by the bivariate polynomial I_p (genfun).  Includes the
p=3 scaled matrix over Z[sqrt3], its D*K factorization with K mod sqrt3, and
diagonal major/minor/selection utilities.
"""

from fractions import Fraction
from functools import lru_cache

from .scalars import QuadInt3, val_quad3, reduce_mod_sqrt3, vp_int, Val, INF
from .series import QSeries
from .modcurve import d_series, ip_poly, e_exponent, GENUS_ZERO_PRIMES

# the matrix generating function carries one global sign choice relative to
# the log-derivative of I_p; this build uses sum M_ij x^i y^j =
# -(y/p) d/dy log I_p(x,y), the choice validated against the oracle
SIGN_CONVENTION = "negated-log-derivative"

GUARD = 16


class UMatrix:
    """Exact n x n truncation of the U matrix, with provenance metadata.

    Entries are 1-indexed through entry(); rows[i][j] is 0-indexed storage.
    """

    def __init__(self, p, n, rows, basis="d-powers", provenance="oracle"):
        self.p = p
        self.n = n
        self.rows = rows
        self.basis = basis
        self.provenance = provenance
        self.sign_convention = SIGN_CONVENTION

    def entry(self, i, j):
        return self.rows[i - 1][j - 1]

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.n))

    def truncation(self, m):
        assert m <= self.n
        return UMatrix(self.p, m, [row[:m] for row in self.rows[:m]],
                       self.basis, self.provenance)

    def __eq__(self, other):
        return (isinstance(other, UMatrix) and self.p == other.p
                and self.n == other.n and self.rows == other.rows)

    def __repr__(self):
        return "UMatrix(p=%d, n=%d, basis=%s, provenance=%s)" % (
            self.p, self.n, self.basis, self.provenance)


def _as_int(x, what="value"):
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError("%s is not an integer: %s" % (what, x))
        return x.numerator
    return x


@lru_cache(maxsize=None)
def build_matrix_oracle(p, n, qprec=None):
    """Build M by brute force from q-expansions.

    U(d^j) is a polynomial of degree p*j in d; each column is expanded in
    full by a triangular solve against the powers of d (d = q + O(q^2)) and
    the residual must vanish on the whole guard band.  The returned matrix
    is the upper n x n truncation.
    """
    if p not in GENUS_ZERO_PRIMES:
        raise ValueError("unsupported prime %d" % p)
    if n == 0:
        return UMatrix(p, 0, [])
    # full columns reach degree p*j <= p*n, and live at q-precision p*n+GUARD;
    # before u_extract the powers d^j therefore need p*(p*n+GUARD)
    solve_prec = p * n + GUARD
    need = p * solve_prec
    qprec = max(qprec or 0, need)
    d = d_series(p, qprec)
    dpow_big = d
    dpows = [QSeries.const(1, solve_prec), d.truncate(solve_prec)]
    for _ in range(2, p * n + 1):
        dpows.append(dpows[-1] * dpows[1])
    columns = []
    for j in range(1, n + 1):
        if j > 1:
            dpow_big = dpow_big * d
        u = dpow_big.u_extract(p).truncate(solve_prec)
        residual = u
        col = {}
        for i in range(1, p * j + 1):
            m = _as_int(residual.coeff(i), "oracle entry (%d,%d)" % (i, j))
            if m:
                col[i] = m
                residual = residual - dpows[i].scalar_mul(m)
        if not residual.is_zero():
            raise ValueError("column %d residual nonzero at q^%d"
                             % (j, residual.valuation()))
        columns.append(col)
    rows = [[columns[j].get(i + 1, 0) for j in range(n)] for i in range(n)]
    return UMatrix(p, n, rows, provenance="oracle")


def column_recurrence(p, ip, jmax):
    """Columns of M as polynomials in the row index, from the recurrence
    C_j = sum_r c_r C_(j-r) + (j/p) c_j induced by I_p = 1 - sum_r c_r(x) y^r.

    Returns a list whose j-th item (j >= 1) is a dict {i: M_ij}.
    """
    c = {}
    for r in range(1, p + 1):
        c[r] = {i: -v for i, v in ip.y_part(r).items()}
    cols = [dict()]                      # C_0 = 0
    for j in range(1, jmax + 1):
        col = {}
        for r in range(1, min(p, j - 1) + 1):
            prev = cols[j - r]
            for i1, v1 in c[r].items():
                for i2, v2 in prev.items():
                    k = i1 + i2
                    col[k] = col.get(k, 0) + v1 * v2
        if j <= p:
            for i, v in c[j].items():
                col[i] = col.get(i, 0) + Fraction(j * v, p)
        col = {i: _as_int(v, "recurrence entry (%d,%d)" % (i, j))
               for i, v in col.items() if v}
        cols.append(col)
    return cols


@lru_cache(maxsize=None)
def build_matrix_genfun(p, n):
    """Build M from the generating-function recurrence of I_p."""
    if n == 0:
        return UMatrix(p, 0, [], provenance="genfun")
    cols = column_recurrence(p, ip_poly(p), n)
    rows = [[cols[j].get(i, 0) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return UMatrix(p, n, rows, provenance="genfun")


def cross_check(p, n):
    """Oracle and genfun matrices must agree entry for entry."""
    a = build_matrix_oracle(p, n)
    b = build_matrix_genfun(p, n)
    if a.rows != b.rows:
        raise ValueError("oracle and generating-function matrices disagree for p=%d" % p)
    return a


def entry_bound_violations(m):
    """Entries violating v_p(M_ij) >= e(pi - j) - 1; empty on success."""
    e = e_exponent(m.p)
    out = []
    for i in range(1, m.n + 1):
        for j in range(1, m.n + 1):
            x = m.entry(i, j)
            if x == 0:
                continue
            if Val(vp_int(x, m.p)) < Val(e * (m.p * i - j) - 1):
                out.append((i, j, x))
    return out


def _exact_shift3(m, k):
    """m * 3^k for integer m and (possibly negative) integer k, exactly."""
    if k >= 0:
        return m * 3 ** k
    q, r = divmod(m, 3 ** (-k))
    if r:
        raise ValueError("valuation bound violated: %d not divisible by 3^%d"
                         % (m, -k))
    return q


def scaled_matrix_p3(m):
    """The p=3 scaled matrix M'_ij = 3^((3/2)(j-i)) M_ij over Z[sqrt3]."""
    if m.p != 3:
        raise ValueError("scaled quadratic-ring form is specific to p=3")
    rows = []
    for i in range(1, m.n + 1):
        row = []
        for j in range(1, m.n + 1):
            x = m.entry(i, j)
            if x == 0:
                row.append(QuadInt3(0, 0))
                continue
            if i > 3 * j or j > 3 * i:
                raise ValueError("entry (%d,%d) outside the band is nonzero" % (i, j))
            k = 3 * (j - i)
            if k % 2 == 0:
                row.append(QuadInt3(_exact_shift3(x, k // 2), 0))
            else:
                row.append(QuadInt3(0, _exact_shift3(x, (k - 1) // 2)))
        rows.append(row)
    out = UMatrix(3, m.n, rows, basis="scaled-3^(3m/2)", provenance=m.provenance)
    for i in range(1, m.n + 1):
        for j in range(1, m.n + 1):
            v = val_quad3(out.entry(i, j))
            if v < Val(3 * i - 1):
                raise ValueError("scaled entry (%d,%d) has valuation %s < %d"
                                 % (i, j, v, 3 * i - 1))
    return out


def scaled_row_bound_report(mp):
    """For each row of the p=3 scaled matrix, the minimal entry valuation.

    Distinguishes the two candidate row bounds 3i-1 and 3i: the report says
    which rows attain 3i-1 exactly (making 3i-1 the tight bound) and whether
    any row violates either candidate.
    """
    report = []
    for i in range(1, mp.n + 1):
        vals = [val_quad3(x) for x in mp.rows[i - 1] if not x.is_zero()]
        vmin = min(vals) if vals else INF
        report.append({"row": i, "min_valuation": vmin,
                       "attains_3i_minus_1": vmin == Val(3 * i - 1),
                       "meets_3i": vmin >= Val(3 * i)})
    return report


class DKFactor:
    """M' = D K with D = diag(3^(3i-1)) and K over Z[sqrt3]; Kbar = K mod sqrt3."""

    def __init__(self, n, k_rows, kbar_rows):
        self.n = n
        self.d_exponents = [3 * i - 1 for i in range(1, n + 1)]
        self.K = k_rows
        self.Kbar = kbar_rows


def dk_factor(mp):
    if mp.basis != "scaled-3^(3m/2)":
        raise ValueError("factorization expects the scaled p=3 matrix")
    k_rows = []
    kbar_rows = []
    for i in range(1, mp.n + 1):
        scale = 3 ** (3 * i - 1)
        krow = []
        for j in range(1, mp.n + 1):
            x = mp.entry(i, j)
            qa, ra = divmod(x.a, scale)
            qb, rb = divmod(x.b, scale)
            if ra or rb:
                raise ValueError("entry (%d,%d) not divisible by 3^%d"
                                 % (i, j, 3 * i - 1))
            krow.append(QuadInt3(qa, qb))
        k_rows.append(krow)
        kbar_rows.append([reduce_mod_sqrt3(x) for x in krow])
    out = DKFactor(mp.n, k_rows, kbar_rows)
    # the only unit of row 1 sits in column 1
    if out.Kbar[0][0] == 0 or any(out.Kbar[0][j] for j in range(1, mp.n)):
        raise ValueError("row 1 of Kbar is not concentrated in column 1")
    return out


def diagonal_major(m, s):
    """Submatrix on the index sequence s (1-indexed, distinct)."""
    if len(set(s)) != len(s):
        raise ValueError("indices must be distinct")
    return [[m.entry(i, j) for j in s] for i in s]


def diagonal_minor(m, s):
    return exact_det(diagonal_major(m, s))


def selection(m, s, pi):
    """The entry sequence M[s_i, s_pi(i)] for a degree-len(s) permutation pi
    (pi given as a 0-indexed list on positions)."""
    if sorted(pi) != list(range(len(s))):
        raise ValueError("pi is not a permutation")
    return [m.entry(s[i], s[pi[i]]) for i in range(len(s))]


def exact_det(rows):
    """Fraction-free determinant (Bareiss) for integer matrices; exact
    rational elimination otherwise."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    if all(isinstance(x, int) for r in a for x in r):
        return _det_bareiss(a)
    a = [[Fraction(x) for x in r] for r in a]
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return det


def _det_bareiss(a):
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row = a[i]
            top = a[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * akk - aik * top[j]) // prev
            row[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]
