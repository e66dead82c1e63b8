"""Exact arithmetic kernel: rationals, Q(zeta_5), truncated q-series,
and truncated z-series.

No floating point appears anywhere in the package; every coefficient is
an exact rational (gmpy2.mpq when available, fractions.Fraction
otherwise) or a Q(zeta_5) number built on top of them.
"""

from __future__ import annotations

from .kernels import series_inv, series_mul

try:
    from gmpy2 import mpq as _mpq

    Rat = _mpq
    RAT_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - gmpy2 is normally present
    from fractions import Fraction as _mpq

    Rat = _mpq
    RAT_BACKEND = "fractions"

R0 = Rat(0)
R1 = Rat(1)


def rat(num, den=1):
    """Exact rational num/den."""
    return Rat(num, den)


def binomial(n, k):
    """Binomial coefficient for integer or rational n, integer k >= 0."""
    if k < 0:
        return R0
    out = R1
    for i in range(k):
        out = out * (Rat(n) - i) / (i + 1)
    return out


_BERNOULLI = [R1]


def bernoulli_number(n):
    """Bernoulli number B_n with the B_1 = -1/2 convention."""
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = R0
        for j in range(m):
            acc += binomial(m + 1, j) * _BERNOULLI[j]
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def bernoulli_poly(n, x):
    """Bernoulli polynomial B_n evaluated at x (any exact ring element)."""
    acc = None
    for j in range(n + 1):
        t = binomial(n, j) * bernoulli_number(j) * x ** (n - j)
        acc = t if acc is None else acc + t
    return acc


class CycNum:
    """Element of Q(zeta), zeta a primitive fifth root of unity.

    Stored in the reduced basis {1, zeta, zeta^2, zeta^3} modulo
    1 + zeta + zeta^2 + zeta^3 + zeta^4 = 0.
    """

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (Rat(c0), Rat(c1), Rat(c2), Rat(c3))

    @staticmethod
    def _raw(tup):
        x = CycNum.__new__(CycNum)
        x.c = tup
        return x

    @staticmethod
    def zeta_pow(k):
        """zeta^k reduced to the canonical basis."""
        k %= 5
        if k < 4:
            c = [R0] * 4
            c[k] = R1
            return CycNum._raw(tuple(c))
        return CycNum._raw((-R1, -R1, -R1, -R1))

    def _coerce(self, other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, type(R0))):
            return CycNum._raw((Rat(other), R0, R0, R0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        return CycNum._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return CycNum._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        prod = [R0] * 7
        for i in range(4):
            if a[i]:
                for j in range(4):
                    if b[j]:
                        prod[i + j] += a[i] * b[j]
        # zeta^4 = -(1 + zeta + zeta^2 + zeta^3), zeta^5 = 1, zeta^6 = zeta
        c = list(prod[:4])
        if prod[4]:
            for i in range(4):
                c[i] -= prod[4]
        if prod[5]:
            c[0] += prod[5]
        if prod[6]:
            c[1] += prod[6]
        return CycNum._raw(tuple(c))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via a 4x4 exact linear solve."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        # Columns: coordinates of self * zeta^j.
        cols = [(self * CycNum.zeta_pow(j)).c for j in range(4)]
        m = [[cols[j][i] for j in range(4)] + [R1 if i == 0 else R0] for i in range(4)]
        for p in range(4):
            pr = next(r for r in range(p, 4) if m[r][p])
            m[p], m[pr] = m[pr], m[p]
            inv_p = R1 / m[p][p]
            m[p] = [x * inv_p for x in m[p]]
            for r in range(4):
                if r != p and m[r][p]:
                    f = m[r][p]
                    m[r] = [x - f * y for x, y in zip(m[r], m[p])]
        return CycNum._raw(tuple(m[i][4] for i in range(4)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = CycNum(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def rational_part(self):
        """The rational coefficient if the element lies in Q, else None."""
        if any(self.c[1:]):
            return None
        return self.c[0]

    def __repr__(self):
        return f"CycNum{self.c}"


def zeta_trace(s):
    """Sum over alpha of zeta^(alpha*s); equals 5 iff 5 | s, else 0."""
    acc = CycNum(0)
    for a in range(5):
        acc = acc + CycNum.zeta_pow(a * s)
    return acc


class QSeries:
    """Truncated formal power series in q with exact coefficients.

    ``coeffs[d]`` is the q^d coefficient; the order (largest retained
    power) is ``len(coeffs) - 1``.  Binary operations truncate to the
    smaller operand order.  Coefficients may be Rat or CycNum.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("QSeries needs at least the constant term")
        if order is not None:
            zero = coeffs[0] * 0
            if len(coeffs) < order + 1:
                coeffs += [zero] * (order + 1 - len(coeffs))
            else:
                coeffs = coeffs[: order + 1]
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(value, order):
        c = Rat(value) if isinstance(value, int) else value
        return QSeries([c] + [c * 0] * order)

    @staticmethod
    def zero(order):
        return QSeries.const(0, order)

    @staticmethod
    def one(order):
        return QSeries.const(1, order)

    @staticmethod
    def q(order):
        return QSeries.monomial(1, 1, order)

    @staticmethod
    def monomial(coeff, power, order):
        s = QSeries.zero(order)
        if power <= order:
            s.coeffs[power] = Rat(coeff) if isinstance(coeff, int) else coeff
        return s

    # -- structure ----------------------------------------------------
    @property
    def order(self):
        return len(self.coeffs) - 1

    def _zero_c(self):
        return self.coeffs[0] * 0

    def __getitem__(self, d):
        if d < 0:
            raise IndexError(d)
        return self.coeffs[d] if d < len(self.coeffs) else self._zero_c()

    def truncate(self, order):
        return QSeries(self.coeffs, order=order)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            if isinstance(other, (int, type(R0))):
                other = QSeries.const(other, self.order)
            else:
                return NotImplemented
        n = min(self.order, other.order)
        return all(self[d] == other[d] for d in range(n + 1))

    def __hash__(self):  # pragma: no cover - not used as dict key
        return hash(tuple(self.coeffs))

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, type(R0), CycNum)):
            return QSeries.const(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return QSeries([self.coeffs[d] + o.coeffs[d] for d in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            n = min(self.order, other.order)
            return QSeries(series_mul(self.coeffs, other.coeffs, n, self._zero_c()))
        if isinstance(other, (int, type(R0), CycNum)):
            return QSeries([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; requires an invertible constant term."""
        if not self.coeffs[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        one = self.coeffs[0] / self.coeffs[0]
        return QSeries(series_inv(self.coeffs, self.order, one))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("use pow_rational for non-integer exponents")
        if n < 0:
            return self.inverse() ** (-n)
        out = QSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus -----------------------------------------------------
    def qdq(self):
        """The derivation q d/dq; order is preserved."""
        return QSeries([c * d for d, c in enumerate(self.coeffs)])

    def qdq_inverse(self):
        """Antiderivative for q d/dq; requires zero constant term."""
        if self.coeffs[0]:
            raise ValueError("q d/dq antiderivative needs zero constant term")
        return QSeries(
            [self._zero_c()] + [c / d for d, c in enumerate(self.coeffs) if d > 0]
        )

    def log(self):
        """Logarithm of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        return (self.qdq() * self.inverse()).qdq_inverse()

    def exp(self):
        """Exponential of a series with constant term 0."""
        if self.coeffs[0]:
            raise ValueError("exp requires constant term 0")
        n = self.order
        out = [self._zero_c() + 1] + [self._zero_c()] * n
        da = self.qdq().coeffs
        for d in range(1, n + 1):
            acc = self._zero_c()
            for k in range(1, d + 1):
                if da[k]:
                    acc = acc + da[k] * out[d - k]
            out[d] = acc / d
        return QSeries(out)

    def pow_rational(self, r):
        """Rational power of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("pow_rational requires constant term 1")
        return (self.log() * Rat(r)).exp()

    def __repr__(self):
        shown = [f"{c}*q^{d}" for d, c in enumerate(self.coeffs[:5]) if c]
        body = " + ".join(shown) if shown else "0"
        return f"QSeries({body} + O(q^{self.order + 1}))"


class ZSeries:
    """Polynomial/truncated series in z over an arbitrary coefficient ring.

    Coefficients must support +, -, * and truth-testing; ``coeffs[k]``
    is the z^k coefficient.  Products truncate at the smaller order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("ZSeries needs at least the z^0 term")
        self.coeffs = coeffs

    @property
    def zorder(self):
        return len(self.coeffs) - 1

    def _zero_c(self):
        return self.coeffs[0] * 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self._zero_c()

    def __add__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        n = min(self.zorder, other.zorder)
        return ZSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return ZSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ZSeries):
            n = min(self.zorder, other.zorder)
            return ZSeries(series_mul(self.coeffs, other.coeffs, n, self._zero_c()))
        return ZSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def scale_z(self, factor):
        """Substitute z -> factor * z."""
        out = []
        f = 1
        for k, c in enumerate(self.coeffs):
            out.append(c * f if k else c)
            f = f * factor
        return ZSeries(out)

    def map_coeffs(self, fn):
        return ZSeries([fn(c) for c in self.coeffs])

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        n = min(self.zorder, other.zorder)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def __repr__(self):
        return f"ZSeries({self.coeffs!r})"
