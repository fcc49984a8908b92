"""Truncated formal power/Laurent series in q with exact rational coefficients.

A QSeries stores coefficients for exponents start <= n < prec and represents
a series known modulo q^prec.  All operations propagate precision
pessimistically and never claim coefficients beyond what the operands
determine, so downstream truncation certificates stay sound.
"""

from fractions import Fraction


class PrecisionError(ValueError):
    """Raised when a coefficient beyond the known precision is requested."""


def _norm(x):
    # collapse Fraction with denominator 1 to int (keeps arithmetic on the
    # integer fast path)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class QSeries:

    __slots__ = ("start", "prec", "c")

    def __init__(self, start, coeffs, prec):
        c = [_norm(x) for x in coeffs]
        # canonical form: no leading or trailing zeros, length <= prec - start
        while c and c[0] == 0:
            c.pop(0)
            start += 1
        if start + len(c) > prec:
            c = c[:prec - start] if prec > start else []
        while c and c[-1] == 0:
            c.pop()
        if not c:
            start = prec
        if start > prec:
            raise ValueError("start exceeds precision")
        self.start = start
        self.prec = prec
        self.c = c

    @classmethod
    def const(cls, value, prec):
        return cls(0, [value], prec)

    @classmethod
    def zero(cls, prec):
        return cls(prec, [], prec)

    @classmethod
    def q_power(cls, n, prec):
        return cls(n, [1], prec)

    def coeff(self, n):
        """Coefficient of q^n; raises PrecisionError for n >= prec."""
        if n >= self.prec:
            raise PrecisionError("coefficient of q^%d unknown (precision %d)"
                                 % (n, self.prec))
        if n < self.start:
            return 0
        k = n - self.start
        return self.c[k] if k < len(self.c) else 0

    def coeffs_from(self, lo, hi):
        """Coefficients of q^lo .. q^(hi-1) as a list; hi must be <= prec."""
        if hi > self.prec:
            raise PrecisionError("range beyond precision")
        return [self.coeff(n) for n in range(lo, hi)]

    def valuation(self):
        """Exponent of the first nonzero known coefficient, or None if the
        series is zero to its precision."""
        return None if not self.c else self.start

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        """Exact equality of the stored data (same precision and coefficients)."""
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.start == other.start and self.prec == other.prec
                and self.c == other.c)

    def agrees_with(self, other, upto=None):
        """Equality of all shared known coefficients (up to q^upto if given)."""
        hi = min(self.prec, other.prec)
        if upto is not None:
            hi = min(hi, upto)
        lo = min(self.start, other.start)
        return all(self.coeff(n) == other.coeff(n) for n in range(lo, hi))

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.const(other, self.prec)
        prec = min(self.prec, other.prec)
        start = min(self.start, other.start, prec)
        out = [0] * (prec - start)
        for src in (self, other):
            for k, x in enumerate(src.c):
                n = src.start + k
                if n < prec:
                    out[n - start] += x
        return QSeries(start, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.start, [-x for x in self.c], self.prec)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.const(other, self.prec)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scalar_mul(self, s):
        if s == 0:
            return QSeries.zero(self.prec)
        return QSeries(self.start, [s * x for x in self.c], self.prec)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scalar_mul(other)
        # product of f + O(q^p1) and g + O(q^p2) is known modulo
        # q^min(p1 + start2, p2 + start1)
        prec = min(self.prec + other.start, other.prec + self.start)
        start = self.start + other.start
        if start >= prec or self.is_zero() or other.is_zero():
            return QSeries.zero(prec)
        length = prec - start
        out = [0] * length
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            seg = b[:length - i]
            out[i:i + len(seg)] = [u + ai * v for u, v in zip(out[i:i + len(seg)], seg)]
        return QSeries(start, out, prec)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q^k."""
        return QSeries(self.start + k, list(self.c), self.prec + k)

    def truncate(self, prec):
        if prec >= self.prec:
            return self
        return QSeries(self.start, self.c[:max(0, prec - self.start)], prec)

    def inv(self):
        """Multiplicative inverse; leading coefficient must be nonzero."""
        if self.is_zero():
            raise ValueError("cannot invert a series that is zero to precision")
        lead = self.c[0]
        n = self.prec - self.start          # relative precision
        u = self.c                          # unit part, u[0] = lead != 0
        inv_lead = Fraction(1, 1) / lead
        out = [0] * n
        out[0] = _norm(inv_lead)
        for k in range(1, n):
            s = 0
            for i in range(1, min(k, len(u) - 1) + 1):
                ui = u[i]
                if ui:
                    s += ui * out[k - i]
            out[k] = _norm(-s * inv_lead)
        return QSeries(-self.start, out, self.prec - 2 * self.start)

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("series exponent must be an integer")
        if e < 0:
            return self.inv() ** (-e)
        if e == 0:
            return QSeries.const(1, self.prec - self.start)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def nth_root(self, n):
        """Principal n-th root of c*q^(kn)*(1 + O(q)), by coefficient recursion.

        The lowest exponent must be divisible by n and the leading coefficient
        must be an exact rational n-th power.
        """
        if n <= 0:
            raise ValueError("root order must be positive")
        if self.is_zero():
            raise ValueError("cannot take a root of a series that is zero to precision")
        if self.start % n != 0:
            raise ValueError("lowest exponent %d not divisible by %d" % (self.start, n))
        lead = Fraction(self.c[0])
        root_lead = _rational_nth_root(lead, n)
        m = len(self.c)
        # normalized unit part f = 1 + f_1 q + ..., solve g with g^n = f via
        # n * f * g' = f' * g
        f = [_norm(Fraction(x) / lead) for x in self.c]
        g = [0] * m
        g[0] = 1
        for k in range(1, m):
            s = 0
            for j in range(1, k + 1):
                fj = f[j] if j < m else 0
                if fj:
                    s += j * fj * g[k - j]
            for i in range(1, k):
                fki = f[k - i]
                if fki:
                    s -= n * i * g[i] * fki
            g[k] = _norm(Fraction(s, n * k))
        out = [_norm(root_lead * x) for x in g]
        start = self.start // n
        return QSeries(start, out, start + m)

    def v_substitute(self, p):
        """q -> q^p on coefficients; precision scales by p."""
        out = [0] * (len(self.c) * p - (p - 1) if self.c else 0)
        for k, x in enumerate(self.c):
            out[k * p] = x
        return QSeries(self.start * p, out, self.prec * p)

    def u_extract(self, p):
        """Coefficient of q^n in the result is the coefficient of q^(pn).

        Precision becomes floor(prec/p).  Laurent inputs are accepted only
        when every negative exponent carrying a nonzero coefficient is
        divisible by p.
        """
        if self.start < 0:
            for k, x in enumerate(self.c):
                n = self.start + k
                if n >= 0:
                    break
                if x != 0 and n % p != 0:
                    raise ValueError(
                        "negative exponent %d not divisible by %d" % (n, p))
        prec = self.prec // p
        # first multiple of p at or above start
        n0 = -((-self.start) // p) * p
        out = []
        n = n0
        while n < prec * p:
            out.append(self.coeff(n) if n < self.prec else 0)
            n += p
        return QSeries(n0 // p, out, prec)


def _rational_nth_root(x, n):
    """Exact principal n-th root of a rational, or raise ValueError."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no unit n-th root here")
    if x < 0 and n % 2 == 0:
        raise ValueError("negative leading coefficient under an even root")
    sign = -1 if x < 0 else 1
    num = _int_nth_root(abs(x.numerator), n)
    den = _int_nth_root(x.denominator, n)
    if num is None or den is None:
        raise ValueError("leading coefficient %s is not an exact %d-th power" % (x, n))
    return Fraction(sign * num, den)


def _int_nth_root(m, n):
    """Integer r with r^n = m, or None."""
    if m in (0, 1):
        return m
    lo, hi = 1, 1
    while hi ** n < m:
        hi <<= 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** n < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** n == m else None


def euler_factor(scale, prec):
    """prod_{n>=1} (1 - q^(scale*n)) via the pentagonal number expansion."""
    out = [0] * max(prec, 1)
    if prec > 0:
        out[0] = 1
    k = 1
    while True:
        e1 = scale * k * (3 * k - 1) // 2
        e2 = scale * k * (3 * k + 1) // 2
        if e1 >= prec and e2 >= prec:
            break
        s = -1 if k % 2 else 1
        if e1 < prec:
            out[e1] += s
        if e2 < prec:
            out[e2] += s
        k += 1
    return QSeries(0, out, prec)


def eta_quotient(pairs, prec):
    """prod_s prod_{n>=1} (1 - q^(s n))^(e_s) for pairs of (scale s, exponent e_s).

    The q-power prefactor of an eta quotient is the caller's business.
    """
    result = QSeries.const(1, prec)
    for scale, expo in pairs:
        if expo == 0:
            continue
        base = euler_factor(scale, prec)
        result = result * (base ** expo if expo > 0 else base.inv() ** (-expo))
    return result.truncate(prec)
