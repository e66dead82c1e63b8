"""Hypergeometric mirror data for the quintic 3-fold.

Computes the components of the small I-function, the mirror map, the
normalized diagonal entries I_{k,k} (both from the Frobenius tower of
the Picard-Fuchs solutions and from their closed forms), the
equivariant I-function restricted to fixed points, and the finite
J-function polynomials used to seed the specialized S-matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import CycNum, QSeries, R0, R1, Rat, ZSeries, rat


def _w_truncated_ratio(d, wcut=4):
    """Coefficients in w of prod(1+5w/k, k<=5d) / prod(1+w/k, k<=d)^5, mod w^wcut."""
    num = [R1] + [R0] * (wcut - 1)
    for k in range(1, 5 * d + 1):
        c = rat(5, k)
        for j in range(wcut - 1, 0, -1):
            num[j] += c * num[j - 1]
    den = [R1] + [R0] * (wcut - 1)
    for k in range(1, d + 1):
        c = rat(1, k)
        for _ in range(5):
            for j in range(wcut - 1, 0, -1):
                den[j] += c * den[j - 1]
    # Multiply num by the inverse of den (den[0] = 1).
    inv = [R1] + [R0] * (wcut - 1)
    for j in range(1, wcut):
        inv[j] = -sum(den[i] * inv[j - i] for i in range(1, j + 1))
    return [sum(num[i] * inv[j - i] for i in range(i0 := 0, j + 1)) for j in range(wcut)]


class LogPoly:
    """Polynomial in log(q) with QSeries coefficients.

    ``parts[j]`` multiplies log(q)^j / j!.  Supports the operations the
    Frobenius tower needs: D = q d/dq, division by a series, and
    extraction of the log-free part.
    """

    def __init__(self, parts):
        self.parts = list(parts)

    def qdq(self):
        out = []
        for j, c in enumerate(self.parts):
            t = c.qdq()
            if j + 1 < len(self.parts):
                t = t + self.parts[j + 1]
            out.append(t)
        return LogPoly(out)

    def div_series(self, s):
        inv = s.inverse()
        return LogPoly([c * inv for c in self.parts])

    def log_free_part(self):
        for c in self.parts[1:]:
            if not c.is_zero():
                raise ValueError("unexpected log q term in Frobenius tower")
        return self.parts[0]


@dataclass(frozen=True)
class IData:
    """All q-series mirror data at a fixed truncation order."""

    order: int
    i0: QSeries
    i1: QSeries
    i2: QSeries
    i3: QSeries
    tau: QSeries  # power-series part of I_1/I_0 (log q bookkept separately)
    i11: QSeries
    i22: QSeries  # from the closed form L^5 I_0^-2 I_11^-2
    i22_tower: QSeries  # from the Frobenius tower (independent route)
    i33_tower: QSeries
    lser: QSeries  # L = (1 - 5^5 q)^(-1/5)

    def diagonal(self):
        """[I_11, I_22, I_33, I_44, I_55] with I_33 = I_11, I_44 = I_55 = I_0."""
        return [self.i11, self.i22, self.i11, self.i0, self.i0]


def build_idata(order):
    """Compute the I-function components and derived data through q^order."""
    n = order
    comps = [[R0] * (n + 1) for _ in range(4)]
    comps[0][0] = R1
    fac = R1  # (5d)!/(d!)^5, updated incrementally
    for d in range(1, n + 1):
        for j in range(5 * d - 4, 5 * d + 1):
            fac *= j
        fac /= Rat(d) ** 5
        ratio = _w_truncated_ratio(d)
        for p in range(4):
            comps[p][d] = fac * ratio[p]
    i0, i1, i2, i3 = (QSeries(c) for c in comps)

    tau = i1 / i0
    i11 = tau.qdq() + 1
    one = QSeries.one(n)
    lser = (one - QSeries.monomial(3125, 1, n)).pow_rational(rat(-1, 5))
    l5 = lser**5
    i22 = l5 * (i0**2).inverse() * (i11**2).inverse()

    # Frobenius tower: successive normalized derivatives of the PF basis
    # y_p = sum_j I_{p-j} log^j q / j! kill the log terms one at a time.
    zero = QSeries.zero(n)
    ic = [i0, i1, i2, i3]
    diag_tower = []
    for p in (2, 3):
        parts = [(ic[p - j] / i0) if p - j >= 0 else zero for j in range(p + 1)]
        t = LogPoly(parts)
        t.parts[p] = one  # log^p q / p! coefficient of y_p / y_0 is 1
        t = t.qdq()
        t.parts = t.parts[:p]
        for i in range(1, p):
            denom = [i11, i22][i - 1] if i <= 2 else None
            t = t.div_series(denom).qdq()
            t.parts = t.parts[: p - i]
        diag_tower.append(t.log_free_part())
    i22_tower, i33_tower = diag_tower

    return IData(
        order=n,
        i0=i0,
        i1=i1,
        i2=i2,
        i3=i3,
        tau=tau,
        i11=i11,
        i22=i22,
        i22_tower=i22_tower,
        i33_tower=i33_tower,
        lser=lser,
    )


def check_diagonal(data):
    """Verify the diagonal relations; returns a list of report dicts.

    Checked termwise through the data's order, with the first failing
    coefficient reported on mismatch:

    * I_22 * I_0^2 * I_11^2 = L^5 with the tower-computed I_22;
    * I_0 * I_11 * I_22 * I_33 * I_44 = L^5 with tower I_22, I_33;
    * I_33 (tower) = I_11 (the palindromic relation).
    """
    l5 = data.lser**5
    checks = [
        ("i22_relation", data.i22_tower * data.i0**2 * data.i11**2, l5),
        (
            "diagonal_product",
            data.i0 * data.i11 * data.i22_tower * data.i33_tower * data.i0,
            l5,
        ),
        ("i33_palindrome", data.i33_tower, data.i11),
    ]
    report = []
    for name, lhs, rhs in checks:
        first_bad = None
        for d in range(min(lhs.order, rhs.order) + 1):
            if lhs[d] != rhs[d]:
                first_bad = (d, str(lhs[d]), str(rhs[d]))
                break
        report.append(
            {"name": name, "status": "PASS" if first_bad is None else "FAIL",
             "first_mismatch": first_bad}
        )
    return report


def itilde_restriction(alpha, order_q, order_u):
    """Fixed-point restriction of the modified equivariant I-function.

    Returns, for the restriction H -> zeta^alpha * lambda, the list over
    q-degree d of truncated series in u = lambda/z with CycNum
    coefficients; the full restriction is

        Itilde_alpha = z * sum_d q^d * S_d(u).

    Only these restrictions are ever needed; the cohomology-valued
    series is never materialized.
    """
    za = CycNum.zeta_pow(alpha)
    out = []
    for d in range(order_q + 1):
        if d == 0:
            out.append(QSeries.const(CycNum(1), order_u))
            continue
        num = QSeries.const(CycNum(1), order_u)
        for k in range(5 * d):
            # factor 5*zeta^a*u + k
            f = QSeries([CycNum(k), za * 5], order=order_u)
            num = num * f
        den = QSeries.const(CycNum(1), order_u)
        u5 = QSeries.monomial(CycNum(1), 5, order_u)
        for k in range(1, d + 1):
            f = QSeries([CycNum(k), za], order=order_u) ** 5 - u5
            den = den * f
        out.append(num * den.inverse())
    return out


def j_at_Hdelta(delta):
    """Scalar q-polynomial multiplying H_delta in J(H_delta).

    The finite sum sum_b q^b prod_{i<=5b}(5 delta - 5 i) /
    prod_{i<=b}((delta - 5 i)^5 - delta^5); equals 1 for delta <= 5.
    """
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    top = (delta - 1) // 5
    coeffs = [R1]
    num, den = R1, R1
    for b in range(1, top + 1):
        for i in range(5 * (b - 1) + 1, 5 * b + 1):
            num *= 5 * delta - 5 * i
        den *= Rat(delta - 5 * b) ** 5 - Rat(delta) ** 5
        coeffs.append(num / den)
    return ZSeries(coeffs)
