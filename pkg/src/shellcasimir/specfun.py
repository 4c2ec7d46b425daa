"""Scalar special-function kernel.

Self-contained evaluations of the handful of special functions the orbit
sums need: integer-order Bessel J and its zeros, the modified Bessel I1,
the real Struve/Bessel combination equal to the longitudinal-momentum
integral, Dawson's integral, the Fresnel cosine/sine integrals, and the
zeta constants zeta(2), zeta(3), zeta(4).

All routines work in binary64, with one exception: the Struve/Bessel
combination is the difference of two exponentially large series and loses
roughly 0.43*x decimal digits to cancellation, so for x > 12 it is summed
in extended precision (mpmath) and rounded once at the end.
"""

from __future__ import annotations

import math
import operator

import mpmath


class DomainError(ValueError):
    """Argument outside the supported domain of a kernel routine."""


class BracketError(RuntimeError):
    """A root search failed to bracket or refine the requested zero."""


MAX_BESSEL_ORDER = 64
MAX_ZERO_ORDER = 20
MAX_ZERO_INDEX = 50

_SERIES_MILLER_SWITCH = 6.0   # ascending series below, backward recurrence above
_I1_SWITCH = 20.0             # I1: ascending series below, asymptotic above
_DAWSON_SWITCH = 5.25         # Dawson: confluent series below, asymptotic above
_FRESNEL_SWITCH = 3.0         # Fresnel: Maclaurin series below, auxiliary series above
_STRUVE_FLOAT_LIMIT = 12.0    # series difference in binary64 below, mpmath above
_STRUVE_X_MAX = 60.0
_I1_X_MAX = 700.0


def _check_order(order) -> int:
    order = operator.index(order)
    if order < 0 or order > MAX_BESSEL_ORDER:
        raise DomainError(f"Bessel order must be in [0, {MAX_BESSEL_ORDER}], got {order}")
    return order


def _check_nonneg(x, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"{name} must be finite and >= 0, got {x}")
    return x


# ---------------------------------------------------------------------------
# Bessel J of integer order
# ---------------------------------------------------------------------------

def _bessel_j_series(order: int, x: float) -> float:
    # ascending series; safe from cancellation for x < ~6
    term = (0.5 * x) ** order / math.factorial(order)
    total = term
    k = 0
    while True:
        k += 1
        term *= -(0.25 * x * x) / (k * (order + k))
        total += term
        if abs(term) <= 1e-18 * max(abs(total), 1e-300) or k > 200:
            return total


def _bessel_j_miller(order: int, x: float) -> float:
    # backward (Miller) recurrence, normalized by J0 + 2*sum J_{2k} = 1
    top = int(max(order, x) + 20 + 2.5 * math.sqrt(max(order, x)))
    if top % 2:
        top += 1
    jp = 0.0          # J_{m+2}
    jc = 1e-300       # J_{m+1}
    norm = 0.0
    result = 0.0
    for m in range(top, -1, -1):
        jm = (2.0 * (m + 1) / x) * jc - jp
        if m == order:
            result = jm
        if m % 2 == 0:
            norm += jm if m == 0 else 2.0 * jm
        jp, jc = jc, jm
        if abs(jc) > 1e250:
            jp *= 1e-250
            jc *= 1e-250
            norm *= 1e-250
            result *= 1e-250
    return result / norm


def bessel_j(order, x) -> float:
    """Bessel function of the first kind J_order(x) for integer order >= 0."""
    order = _check_order(order)
    x = _check_nonneg(x)
    if x == 0.0:
        return 1.0 if order == 0 else 0.0
    if x < _SERIES_MILLER_SWITCH:
        return _bessel_j_series(order, x)
    return _bessel_j_miller(order, x)


def bessel_j_derivative(order, x) -> float:
    """d/dx J_order(x)."""
    order = _check_order(order)
    x = _check_nonneg(x)
    if order == 0:
        return -bessel_j(1, x)
    if x == 0.0:
        return 0.5 if order == 1 else 0.0
    return 0.5 * (bessel_j(order - 1, x) - bessel_j(order + 1, x))


def _bessel_j_second_derivative(order: int, x: float) -> float:
    # from the Bessel ODE: J'' = -J'/x - (1 - n^2/x^2) J
    return (-bessel_j_derivative(order, x) / x
            - (1.0 - (order / x) ** 2) * bessel_j(order, x))


_ZERO_CACHE: dict[tuple[int, str], list[float]] = {}

_SCAN_STEP = 0.5  # consecutive zeros of J_n / J_n' are separated by > 3


def _refine_bracket(g, dg, a: float, b: float) -> float:
    fa = g(a)
    fb = g(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa < 0.0) == (fb < 0.0):
        raise BracketError(f"no sign change on [{a}, {b}]")
    # bisect to a narrow interval, then polish with Newton
    for _ in range(24):
        mid = 0.5 * (a + b)
        fm = g(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (fa < 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    x = 0.5 * (a + b)
    for _ in range(6):
        d = dg(x)
        if d == 0.0:
            break
        step = g(x) / d
        xn = x - step
        if not (a <= xn <= b):
            xn = 0.5 * (a + b)
            fm = g(xn)
            if (fm < 0.0) == (fa < 0.0):
                a, fa = xn, fm
            else:
                b = xn
        x = xn
        if abs(step) < 1e-13 * max(1.0, abs(x)):
            break
    return x


def _zeros_of(order: int, kind: str, count: int) -> list[float]:
    key = (order, kind)
    zeros = _ZERO_CACHE.setdefault(key, [])
    if len(zeros) >= count:
        return zeros
    if kind == "function":
        g = lambda t: bessel_j(order, t)
        dg = lambda t: bessel_j_derivative(order, t)
    else:
        g = lambda t: bessel_j_derivative(order, t)
        dg = lambda t: _bessel_j_second_derivative(order, t)
    x = zeros[-1] + _SCAN_STEP if zeros else 0.25
    fx = g(x)
    x_max = order + (count + 4) * math.pi + 10.0
    while len(zeros) < count:
        xn = x + _SCAN_STEP
        if xn > x_max:
            raise BracketError(
                f"failed to locate {kind} zero {len(zeros) + 1} of order "
                f"{order} below x = {x_max}")
        fn = g(xn)
        if fx == 0.0:
            zeros.append(x)
        elif (fn < 0.0) != (fx < 0.0):
            zeros.append(_refine_bracket(g, dg, x, xn))
        x, fx = xn, fn
    return zeros


def bessel_j_zero(order, k, kind: str = "function") -> float:
    """k-th positive zero of J_order (kind="function") or of its derivative.

    For (order=0, kind="derivative") the zero of J_0' = -J_1 at x = 0 counts
    as the first zero, so k=1 returns 0.0 and k=2 returns 3.8317...
    """
    order = operator.index(order)
    k = operator.index(k)
    if order < 0 or order > MAX_ZERO_ORDER:
        raise DomainError(f"zero order must be in [0, {MAX_ZERO_ORDER}], got {order}")
    if k < 1 or k > MAX_ZERO_INDEX:
        raise DomainError(f"zero index must be in [1, {MAX_ZERO_INDEX}], got {k}")
    if kind not in ("function", "derivative"):
        raise DomainError(f"kind must be 'function' or 'derivative', got {kind!r}")
    if kind == "derivative" and order == 0:
        if k == 1:
            return 0.0
        return _zeros_of(0, "derivative", k - 1)[k - 2]
    return _zeros_of(order, kind, k)[k - 1]


# ---------------------------------------------------------------------------
# Modified Bessel I1
# ---------------------------------------------------------------------------

def bessel_i1(x) -> float:
    """Modified Bessel function I_1(x) for 0 <= x <= 700."""
    x = _check_nonneg(x)
    if x > _I1_X_MAX:
        raise OverflowError(f"bessel_i1 overflows binary64 beyond x = {_I1_X_MAX}")
    if x == 0.0:
        return 0.0
    if x <= _I1_SWITCH:
        term = 0.5 * x
        total = term
        k = 0
        while True:
            k += 1
            term *= 0.25 * x * x / (k * (k + 1))
            total += term
            if term <= 1e-18 * total:
                return total
    # asymptotic expansion, truncated at the smallest term
    total = 1.0
    term = 1.0
    k = 0
    while True:
        k += 1
        nxt = -term * (4.0 - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(nxt) >= abs(term) or abs(nxt) < 1e-18:
            break
        term = nxt
        total += term
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * total


# ---------------------------------------------------------------------------
# Struve/Bessel combination
# ---------------------------------------------------------------------------

def struve_combination(x) -> float:
    """(pi/2) * (H_{-1}(ix) - I_1(x)), which is real and positive.

    Equals the longitudinal-momentum integral
    integral_0^1 exp(-x*sqrt(1 - a^2)) da, with the Struve branch fixed by
    H_{-1}(ix) = sum_k (x/2)^{2k} / (Gamma(k+3/2) Gamma(k+1/2)).

    The two halves grow like e^x while the combination decays like 1/x^2,
    so above x = 12 the sum runs in extended precision.
    """
    x = _check_nonneg(x)
    if x > _STRUVE_X_MAX:
        raise DomainError(f"struve_combination supports x <= {_STRUVE_X_MAX}, got {x}")
    if x == 0.0:
        return 1.0
    if x <= _STRUVE_FLOAT_LIMIT:
        # (pi/2) H-term: x^{2k} / ((2k-1)!! (2k+1)!!); (pi/2) I-term via I1 recurrence
        total = 0.0
        comp = 0.0
        h = 1.0
        i = 0.25 * math.pi * x
        k = 0
        while True:
            d = h - i
            y = d - comp
            t = total + y
            comp = (t - total) - y
            total = t
            k += 1
            h *= x * x / ((2 * k - 1) * (2 * k + 1))
            i *= x * x / (4.0 * k * (k + 1))
            if h < 1e-20 and i < 1e-20 and k > 3:
                return total
    dps = 30 + int(0.5 * x)
    with mpmath.workdps(dps):
        xm = mpmath.mpf(x)
        tiny = mpmath.mpf(10) ** (-dps)
        s_h = mpmath.mpf(0)
        t = mpmath.mpf(1)
        k = 0
        while True:
            s_h += t
            k += 1
            t *= xm * xm / ((2 * k - 1) * (2 * k + 1))
            if k > 3 and t < tiny * s_h:
                break
        s_i = mpmath.mpf(0)
        t = xm / 2
        k = 0
        while True:
            s_i += t
            k += 1
            t *= xm * xm / (4 * k * (k + 1))
            if k > 3 and t < tiny * s_i:
                break
        return float(s_h - mpmath.pi / 2 * s_i)


# ---------------------------------------------------------------------------
# Dawson's integral
# ---------------------------------------------------------------------------

def dawson(z) -> float:
    """Dawson's function D(z) = exp(-z^2) * integral_0^z exp(t^2) dt, z >= 0."""
    z = _check_nonneg(z, "z")
    if z == 0.0:
        return 0.0
    if z <= _DAWSON_SWITCH:
        # D(z) = exp(-z^2) * sum_k z^{2k+1} / (k! (2k+1)); all terms positive
        total = 0.0
        term = z
        k = 0
        while True:
            total += term / (2 * k + 1)
            k += 1
            term *= z * z / k
            if term / (2 * k + 1) <= 1e-18 * total:
                return math.exp(-z * z) * total
    # asymptotic sum_k (2k-1)!! / (2^{k+1} z^{2k+1}), truncated at smallest term
    total = 0.0
    term = 1.0 / (2.0 * z)
    k = 0
    while True:
        total += term
        k += 1
        nxt = term * (2 * k - 1) / (2.0 * z * z)
        if nxt >= term or nxt < 1e-18 * total:
            return total
        term = nxt


# ---------------------------------------------------------------------------
# Fresnel integrals
# ---------------------------------------------------------------------------

def fresnel_cs(gamma) -> tuple[float, float]:
    """Fresnel integrals (C(g), S(g)) with C = int_0^g cos(pi t^2/2) dt."""
    g = _check_nonneg(gamma, "gamma")
    if g == 0.0:
        return 0.0, 0.0
    if g <= _FRESNEL_SWITCH:
        u = 0.5 * math.pi * g * g
        c = 0.0
        s = 0.0
        a = 1.0       # (-1)^k u^{2k} / (2k)!
        b = u         # (-1)^k u^{2k+1} / (2k+1)!
        k = 0
        while True:
            c += a / (4 * k + 1)
            s += b / (4 * k + 3)
            k += 1
            a *= -u * u / ((2 * k - 1) * (2 * k))
            b *= -u * u / ((2 * k) * (2 * k + 1))
            if abs(a) < 1e-19 and abs(b) < 1e-19:
                return g * c, g * s
            if k > 400:
                raise BracketError("fresnel series failed to converge")
    # auxiliary asymptotic functions f, g_aux about the limit value 1/2
    pg2 = math.pi * g * g
    f = 0.0
    term = 1.0
    k = 0
    while True:
        f += term
        k += 1
        nxt = -term * (4 * k - 3) * (4 * k - 1) / (pg2 * pg2)
        if abs(nxt) >= abs(term) or abs(nxt) < 1e-18:
            break
        term = nxt
    g_aux = 0.0
    term = 1.0 / pg2
    k = 0
    while True:
        g_aux += term
        k += 1
        nxt = -term * (4 * k - 1) * (4 * k + 1) / (pg2 * pg2)
        if abs(nxt) >= abs(term) or abs(nxt) < 1e-18:
            break
        term = nxt
    f /= math.pi * g
    g_aux /= math.pi * g
    arg = 0.5 * math.pi * g * g
    si = math.sin(arg)
    co = math.cos(arg)
    return 0.5 + f * si - g_aux * co, 0.5 - f * co - g_aux * si


# ---------------------------------------------------------------------------
# Zeta constants
# ---------------------------------------------------------------------------

def _zeta3() -> float:
    # (5/2) * sum_{k>=1} (-1)^{k-1} / (k^3 binom(2k, k)); converges like 4^-k
    total = 0.0
    for k in range(1, 40):
        total += (-1) ** (k - 1) / (k ** 3 * math.comb(2 * k, k))
    return 2.5 * total


_ZETA_VALUES = {
    2: math.pi ** 2 / 6.0,
    3: _zeta3(),
    4: math.pi ** 4 / 90.0,
}


def zeta(s) -> float:
    """zeta(s) for s in {2, 3, 4}; even orders use the closed forms."""
    s = operator.index(s)
    if s not in _ZETA_VALUES:
        raise DomainError(f"zeta is only tabulated for s in (2, 3, 4), got {s}")
    return _ZETA_VALUES[s]
