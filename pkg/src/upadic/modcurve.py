"""Canonical modular-form q-expansions and the genus-zero level structure:
Delta, Eisenstein series, j, the hauptmoduls d_p, the degree-(p+1) polynomial
relating d_p to j, and the bivariate polynomial I_p whose coefficients drive
the U-matrix recurrence.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .scalars import val_p
from .series import QSeries, eta_quotient
from .newton import NewtonPolygon

GENUS_ZERO_PRIMES = (2, 3, 5, 7, 13)

# weight multipliers t_p and the constants c_p with
# E_{t_p(p-1)}^{12/(t_p(p-1))} = (j - c_p) * Delta
T_P = {2: 4, 3: 3, 5: 1, 7: 1, 13: 1}
C_P = {2: 0, 3: 1728, 5: 0, 7: 1728, 13: Fraction(432000, 691)}


def e_exponent(p):
    """The scaling exponent e = 12/(p^2 - 1)."""
    return Fraction(12, p * p - 1)


@lru_cache(maxsize=None)
def bernoulli(n):
    if n == 0:
        return Fraction(1)
    s = Fraction(0)
    for j in range(n):
        s += comb(n + 1, j) * bernoulli(j)
    return -s / (n + 1)


@lru_cache(maxsize=None)
def eisenstein(k, prec):
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2:
        raise ValueError("weight must be even and at least 4")
    factor = Fraction(-2 * k) / bernoulli(k)
    sig = [0] * prec
    for d in range(1, prec):
        dk = d ** (k - 1)
        for n in range(d, prec, d):
            sig[n] += dk
    coeffs = [1] + [factor * s for s in sig[1:]]
    return QSeries(0, coeffs, prec)


@lru_cache(maxsize=None)
def delta_series(prec):
    """The discriminant cusp form q prod (1-q^n)^24."""
    return eta_quotient([(1, 24)], max(prec - 1, 0)).shift(1)


@lru_cache(maxsize=None)
def j_series(prec):
    """j = E_4^3 / Delta = q^-1 + 744 + 196884 q + ..."""
    e4 = eisenstein(4, prec + 2)
    return (e4 ** 3) * delta_series(prec + 2).inv()


@lru_cache(maxsize=None)
def d_series(p, prec):
    """The hauptmodul d_p = (Delta(q^p)/Delta(q))^(1/(p-1)) of X_0(p),
    computed as the eta quotient q prod ((1-q^pn)/(1-q^n))^(24/(p-1))."""
    if p not in GENUS_ZERO_PRIMES:
        raise ValueError("X_0(%d) is not of genus 0" % p)
    t = 24 // (p - 1)
    d = eta_quotient([(p, t), (1, -t)], max(prec - 1, 0)).shift(1)
    assert all(isinstance(x, int) for x in d.c)
    return d


class FormLibrary:
    """Cached q-expansions for one prime at one working precision."""

    def __init__(self, p, prec):
        self.p = p
        self.prec = prec
        self.t = T_P[p]
        self.c = C_P[p]
        self.e = e_exponent(p)

    def delta(self):
        return delta_series(self.prec)

    def eis(self, k):
        return eisenstein(k, self.prec)

    def j(self):
        return j_series(self.prec)

    def d(self):
        return d_series(self.p, self.prec)


@lru_cache(maxsize=None)
def form_library(p, prec):
    return FormLibrary(p, prec)


def verify_eisenstein_power(p, prec=60):
    """Check E_{t_p(p-1)}^(12/(t_p(p-1))) = (j - c_p) Delta to precision.

    Returns None on success, else (exponent, lhs, rhs) for the first mismatch.
    """
    lib = form_library(p, prec)
    k = lib.t * (p - 1)
    lhs = lib.eis(k) ** (12 // k)
    rhs = (lib.j() - lib.c) * lib.delta()
    hi = min(lhs.prec, rhs.prec)
    for n in range(0, hi):
        if lhs.coeff(n) != rhs.coeff(n):
            return (n, lhs.coeff(n), rhs.coeff(n))
    return None


class HPoly:
    """The degree-(p+1) integer polynomial with d_p * j = H_p(d_p)."""

    def __init__(self, p, coeffs):
        assert len(coeffs) == p + 2
        assert coeffs[0] == 1
        assert coeffs[-1] != 0
        assert all(isinstance(c, int) for c in coeffs)
        self.p = p
        self.coeffs = list(coeffs)

    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_series(self, f):
        acc = QSeries.const(0, f.prec)
        for c in reversed(self.coeffs):
            acc = acc * f + c
        return acc

    def __eq__(self, other):
        return (isinstance(other, HPoly) and self.p == other.p
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "HPoly(%d, %r)" % (self.p, self.coeffs)


@lru_cache(maxsize=None)
def solve_hauptmodul_poly(p, prec=None):
    """Solve d_p * j = H_p(d_p) for H_p by triangular back-substitution.

    d_p = q + O(q^2), so the coefficient of q^i pins the degree-i term.  The
    residual beyond degree p+1 must vanish through the full working precision.
    """
    if prec is None:
        prec = 3 * (p + 2) + 16
    d = d_series(p, prec)
    target = d * j_series(prec)
    dpow = QSeries.const(1, target.prec)
    coeffs = []
    residual = target
    for i in range(p + 2):
        h = residual.coeff(i)
        if isinstance(h, Fraction):
            if h.denominator != 1:
                raise ValueError("non-integer coefficient %s at degree %d" % (h, i))
            h = h.numerator
        coeffs.append(h)
        if h:
            residual = residual - dpow.scalar_mul(h)
        if i < p + 1:
            dpow = dpow * d
    if not residual.is_zero():
        raise ValueError("nonzero residual at exponent %d" % residual.valuation())
    return HPoly(p, coeffs)


def check_hauptmodul_polygon(p):
    """Newton polygon of H_p(d) - c_p d as a polynomial in d: must consist of a
    single side of slope e*p."""
    h = solve_hauptmodul_poly(p)
    coeffs = [Fraction(c) for c in h.coeffs]
    coeffs[1] -= Fraction(C_P[p])
    poly = NewtonPolygon([(i, val_p(c, p)) for i, c in enumerate(coeffs)])
    slopes = poly.slopes()
    want = e_exponent(p) * p
    if len(slopes) != 1 or slopes[0][0] != want:
        raise ValueError("polygon of H_%d - c_%d d is %r, expected single slope %s"
                         % (p, p, slopes, want))
    return poly


class BiPoly:
    """A finitely supported bivariate polynomial/Laurent polynomial in (x, y)."""

    def __init__(self, terms):
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def get(self, i, j):
        return self.terms.get((i, j), 0)

    def bidegree(self):
        if not self.terms:
            return (0, 0)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def scale(self, s):
        return BiPoly({k: s * v for k, v in self.terms.items()})

    def y_part(self, j):
        """Coefficient of y^j, as a dict i -> coefficient."""
        return {i: v for (i, jj), v in self.terms.items() if jj == j}

    def eval_series(self, fx, fy):
        """Substitute q-series for x and y."""
        di, dj = self.bidegree()
        xp = [QSeries.const(1, fx.prec + fy.prec)]
        for _ in range(di):
            xp.append(xp[-1] * fx)
        yp = [QSeries.const(1, fx.prec + fy.prec)]
        for _ in range(dj):
            yp.append(yp[-1] * fy)
        acc = None
        for (i, j), v in sorted(self.terms.items()):
            t = (xp[i] * yp[j]).scalar_mul(v)
            acc = t if acc is None else acc + t
        return acc

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __repr__(self):
        return "BiPoly(%r)" % (dict(sorted(self.terms.items())),)

    def pretty(self):
        """Human-readable layout grouped by ascending powers of y."""
        _, dj = self.bidegree()
        lines = []
        const = self.get(0, 0)
        if const:
            lines.append(str(const))
        for j in range(1, dj + 1):
            part = self.y_part(j)
            if not part:
                continue
            monos = []
            for i in sorted(part, reverse=True):
                c = part[i]
                monos.append("%s*x^%d" % (c, i) if i > 1 else "%s*x" % c)
            lines.append("+ (%s) * y^%d" % (" + ".join(monos), j))
        return "\n".join(lines)


def _as_int(x):
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError("expected integer, got %s" % x)
        return x.numerator
    return x


@lru_cache(maxsize=None)
def modular_equation_ip(p):
    """Derive I_p symbolically from H_p.

    With pi = p^(-12/(p-1)) the involution swaps d and pi/d, giving the
    two-variable relation F(x, Y) = H_p(pi Y) x - H_p(x) pi Y = 0 on
    (x, Y) = (d(q^p), 1/d(q)).  F is divisible by x - pi Y; the quotient,
    normalized to constant term 1, is I_p.
    """
    h = solve_hauptmodul_poly(p)
    pi = Fraction(1, p ** (12 // (p - 1)))
    # F as a polynomial in x whose coefficients are polynomials in Y
    f = [dict() for _ in range(p + 3)]
    for k, hk in enumerate(h.coeffs):
        f[1][k] = f[1].get(k, 0) + Fraction(hk) * pi ** k   # H_p(pi Y) * x
        f[k][1] = f[k].get(1, 0) - Fraction(hk) * pi        # - H_p(x) pi Y
    while f and not f[-1]:
        f.pop()
    deg = len(f) - 1
    # synthetic division of F by (x - pi Y)
    g = [None] * deg
    g[deg - 1] = dict(f[deg])
    for i in range(deg - 1, 0, -1):
        nxt = dict(f[i])
        for j, v in g[i].items():
            nxt[j + 1] = nxt.get(j + 1, 0) + pi * v
        g[i - 1] = nxt
    rem = dict(f[0])
    for j, v in g[0].items():
        rem[j + 1] = rem.get(j + 1, 0) + pi * v
    if any(v != 0 for v in rem.values()):
        raise ValueError("division by x - pi*y left a nonzero remainder")
    terms = {}
    for i, part in enumerate(g):
        for j, v in part.items():
            if v:
                terms[(i, j)] = v
    const = terms.get((0, 0))
    if const != 1:
        if not const:
            raise ValueError("quotient has zero constant term")
        terms = {k: v / const for k, v in terms.items()}
    out = BiPoly({k: _as_int(v) for k, v in terms.items()})
    di, dj = out.bidegree()
    if di != p or dj != p:
        raise ValueError("unexpected bidegree (%d, %d)" % (di, dj))
    return out


# deterministic word-size primes for modular kernel computations
_FIT_PRIMES = (2147483647, 2147483629, 2147483587)


@lru_cache(maxsize=None)
def practical_ip_fit(p, n_eq=None):
    """Find I_p by exact linear algebra: the bidegree-(p,p) polynomial with
    constant term 1 vanishing on (d_p(q^p), 1/d_p(q)).

    The q-expansion of sum c_ij d(q^p)^i d(q)^(p-j) gives one linear equation
    per coefficient.  A kernel computation modulo a word-size prime certifies
    the solution space is one-dimensional and locates the support; the
    supported system is then solved exactly over Q and the full residual is
    rechecked with exact integer arithmetic.
    """
    if n_eq is None:
        n_eq = p * (p + 1) + 40
    d = d_series(p, n_eq + 2)
    dp = d_series(p, n_eq // p + 2).v_substitute(p).truncate(n_eq + 2)
    dpows = [QSeries.const(1, n_eq + 2)]
    vpows = [QSeries.const(1, n_eq + 2)]
    for _ in range(p):
        dpows.append(dpows[-1] * d)
        vpows.append(vpows[-1] * dp)
    cols = [(i, j) for i in range(p + 1) for j in range(p + 1)]
    series = {}
    for (i, j) in cols:
        series[(i, j)] = (vpows[i] * dpows[p - j]).coeffs_from(0, n_eq)

    support = None
    for prime in _FIT_PRIMES:
        kern = _mod_kernel([[series[c][n] % prime for c in cols]
                            for n in range(n_eq)], prime)
        if kern is None:
            continue
        support = [c for c, v in zip(cols, kern) if v]
        break
    if support is None:
        raise ValueError("kernel dimension is not 1: precision too low")
    if (0, 0) not in support:
        raise ValueError("relation misses the constant term")

    # exact solve restricted to the detected support, with c_00 = 1
    unknowns = [c for c in support if c != (0, 0)]
    rows = []
    for n in range(n_eq):
        rows.append([Fraction(series[c][n]) for c in unknowns]
                    + [Fraction(-series[(0, 0)][n])])
    sol = _exact_solve(rows, len(unknowns))
    terms = {(0, 0): 1}
    for c, v in zip(unknowns, sol):
        terms[c] = _as_int(v)
    out = BiPoly(terms)
    # exact full-residual check over Z
    resid = [0] * n_eq
    for c, v in out.terms.items():
        col = series[c]
        for n in range(n_eq):
            resid[n] += v * col[n]
    if any(resid):
        raise ValueError("exact residual check failed")
    return out


def _mod_kernel(rows, prime):
    """Kernel vector of the column space mod prime when the kernel is
    one-dimensional; None when it is larger (or empty)."""
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    pivots = {}
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] % prime:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, prime)
        mat[rank] = [(x * inv) % prime for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % prime for a, b in zip(mat[r], mat[rank])]
        pivots[col] = rank
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    vec = [0] * ncols
    vec[fc] = 1
    for col, r in pivots.items():
        vec[col] = (-mat[r][fc]) % prime
    return vec


def _exact_solve(rows, n_unknowns):
    """Gaussian elimination over Q for an overdetermined consistent system;
    rows are [a_1 ... a_k | rhs]."""
    mat = [list(r) for r in rows]
    sol = [None] * n_unknowns
    rank = 0
    for col in range(n_unknowns):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("underdetermined system: raise the precision")
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    for col in range(n_unknowns):
        sol[col] = mat[col][-1]
    for r in range(rank, len(mat)):
        if mat[r][-1] != 0:
            raise ValueError("inconsistent system")
    return sol


def certify_ip_laurent(p, ip, prec=None):
    """Check I_p(d_p(q^p), 1/d_p(q)) = 0 to the working precision."""
    if prec is None:
        prec = p * (p + 3) + 24
    d = d_series(p, prec)
    dp = d_series(p, prec // p + 2).v_substitute(p).truncate(prec)
    val = ip.eval_series(dp, d.inv())
    return val.is_zero()


@lru_cache(maxsize=None)
def ip_poly(p):
    """The canonical I_p: both construction routes must agree exactly, and the
    Laurent-series identity must hold to working precision."""
    fit = practical_ip_fit(p)
    sym = modular_equation_ip(p)
    if fit != sym:
        raise ValueError("the two I_%d routes disagree" % p)
    if not certify_ip_laurent(p, fit):
        raise ValueError("I_%d fails its Laurent-series certificate" % p)
    return fit
