"""Lommel polynomials R_{m,nu}, associated polynomials R*_{m,nu}, and their roots.

R_{m,nu} is the polynomial in 1/x generated by iterating the Bessel
three-term recurrence; explicitly

    R_{m,nu}(x) = sum_{k=0}^{floor(m/2)} (-1)^k C(m-k, k)
                  * (nu+k)(nu+k+1)...(nu+m-k-1) * (x/2)^(2k-m),

where the coefficient is the Gamma-function ratio Gamma(nu+m-k)/Gamma(nu+k)
written as a finite product so that no Gamma overflow or pole can occur.
Negative first indices follow the reflection R_{-m,nu} = -R_{m-2,nu-m+1}.

The associated polynomial is R*_{m,nu} = (R_{m,nu} - R_{m-2,nu+2}) / 2; it
links J'_nu to J_{nu+m} the same way R_{m,nu} links J_nu to J_{nu+m}.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np


class PolyKind(enum.Enum):
    PLAIN = "plain"
    ASSOCIATED = "associated"


@dataclass(frozen=True)
class LommelCoefficients:
    """Exact coefficient vector c_k multiplying (x/2)^(2k - m), k = 0..floor(m/2)."""

    m: int
    nu: float
    kind: PolyKind
    coeffs: tuple

    def as_dict(self) -> dict:
        return {"m": self.m, "nu": self.nu, "kind": self.kind.value, "coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class EtaRoot:
    """Large-order slope limits eta of the Lommel roots of R_{n,nu+1}.

    Every eta satisfies the terminating hypergeometric polynomial equation
    2F1[(1-n)/2, -n/2; -n; eta^2] = 0 and lies in (1, inf).
    """

    n: int
    roots: tuple


def _rising_product(start: float, count: int) -> float:
    out = 1.0
    for i in range(count):
        out *= start + i
    return out


def _plain_coeffs(m: int, nu: float) -> list:
    # c_k = (-1)^k C(m-k, k) * (nu+k)_(m-2k)
    return [
        (-1) ** k * math.comb(m - k, k) * _rising_product(nu + k, m - 2 * k)
        for k in range(m // 2 + 1)
    ]


def _assoc_coeffs(m: int, nu: float) -> list:
    if m == 0:
        return [1.0]
    if m == 1:
        return [nu / 2.0]
    a = _plain_coeffs(m, nu)
    b = _plain_coeffs(m - 2, nu + 2.0)
    return [(a[k] - (b[k - 1] if 1 <= k <= len(b) else 0.0)) / 2.0 for k in range(len(a))]


def lommel_coefficients(m: int, nu: float, kind: PolyKind = PolyKind.PLAIN) -> LommelCoefficients:
    if m < 0:
        raise ValueError("coefficient form requires m >= 0; use lommel_eval for negative m")
    coeffs = _plain_coeffs(m, nu) if kind is PolyKind.PLAIN else _assoc_coeffs(m, nu)
    return LommelCoefficients(m, nu, kind, tuple(coeffs))


def _poly_eval(coeffs, m: int, x):
    x = np.asarray(x, dtype=float)
    u = (x / 2.0) ** 2
    acc = np.zeros_like(u)
    for c in reversed(coeffs):
        acc = acc * u + c
    out = acc * (x / 2.0) ** (-m)
    return out if out.ndim else float(out)


def _poly_prime(coeffs, m: int, x):
    # d/dx sum c_k (x/2)^(2k-m) = (1/x) sum c_k (2k-m) (x/2)^(2k-m)
    x = np.asarray(x, dtype=float)
    u = (x / 2.0) ** 2
    acc = np.zeros_like(u)
    for k in range(len(coeffs) - 1, -1, -1):
        acc = acc * u + coeffs[k] * (2 * k - m)
    out = acc * (x / 2.0) ** (-m) / x
    return out if out.ndim else float(out)


def lommel_eval(m: int, nu: float, x):
    """R_{m,nu}(x) for any integer m; x > 0."""
    if m == -1:
        return 0.0 * np.asarray(x, dtype=float) if np.ndim(x) else 0.0
    if m < 0:
        return -lommel_eval(-m - 2, nu + m + 1.0, x)
    return _poly_eval(_plain_coeffs(m, nu), m, x)


def lommel_prime(m: int, nu: float, x):
    """d/dx R_{m,nu}(x)."""
    if m == -1:
        return 0.0 * np.asarray(x, dtype=float) if np.ndim(x) else 0.0
    if m < 0:
        return -lommel_prime(-m - 2, nu + m + 1.0, x)
    return _poly_prime(_plain_coeffs(m, nu), m, x)


def assoc_eval(m: int, nu: float, x):
    """R*_{m,nu}(x) = (R_{m,nu}(x) - R_{m-2,nu+2}(x)) / 2 for any integer m."""
    if m >= 0:
        return _poly_eval(_assoc_coeffs(m, nu), m, x)
    return 0.5 * (lommel_eval(m, nu, x) - lommel_eval(m - 2, nu + 2.0, x))


def assoc_prime(m: int, nu: float, x):
    if m >= 0:
        return _poly_prime(_assoc_coeffs(m, nu), m, x)
    return 0.5 * (lommel_prime(m, nu, x) - lommel_prime(m - 2, nu + 2.0, x))


def root_positions(n: int, lam: float, kind: PolyKind = PolyKind.PLAIN) -> np.ndarray:
    """Positive roots of R_{n,lam+1} (plain) or R*_{n,lam} (associated), ascending.

    Roots are estimated from the companion matrix of the quadratic-variable
    polynomial sum c_k u^k, u = (x/2)^2, and accepted only when a sign change
    is confirmed in a small bracket around the candidate; each accepted root
    is then refined by bisection plus a Newton polish on the original
    function.
    """
    if kind is PolyKind.PLAIN:
        if lam <= -1.0:
            raise ValueError("plain Lommel roots require lam > -1")
        coeffs = _plain_coeffs(n, lam + 1.0)
        f = lambda x: _poly_eval(coeffs, n, x)
        fp = lambda x: _poly_prime(coeffs, n, x)
    else:
        if lam <= 0.0:
            raise ValueError("associated Lommel roots require lam > 0")
        coeffs = _assoc_coeffs(n, lam)
        f = lambda x: _poly_eval(coeffs, n, x)
        fp = lambda x: _poly_prime(coeffs, n, x)

    if len(coeffs) < 2:
        return np.empty(0)
    candidates = np.polynomial.Polynomial(coeffs).roots()
    roots = []
    for u in candidates:
        if abs(u.imag) > 1e-8 * (1.0 + abs(u)) or u.real <= 0.0:
            continue
        x0 = 2.0 * math.sqrt(u.real)
        h = 1e-6 * (1.0 + x0)
        a, b = x0 - h, x0 + h
        fa, fb = f(a), f(b)
        for _ in range(60):
            if fa * fb <= 0.0:
                break
            h *= 2.0
            a, b = max(x0 - h, 1e-12), x0 + h
            fa, fb = f(a), f(b)
        if fa * fb > 0.0:
            continue
        for _ in range(80):
            mid = 0.5 * (a + b)
            fm = f(mid)
            if fa * fm <= 0.0:
                b, fb = mid, fm
            else:
                a, fa = mid, fm
        x1 = 0.5 * (a + b)
        for _ in range(4):
            d = fp(x1)
            if d == 0.0:
                break
            step = f(x1) / d
            x2 = x1 - step
            if not a - 1e-9 <= x2 <= b + 1e-9:
                break
            x1 = x2
        roots.append(x1)
    roots.sort()
    return np.asarray(roots)


def lommel_roots(n: int, lam: float, kind: PolyKind = PolyKind.PLAIN):
    """Positive roots as a ZeroList with residual metadata."""
    from .zeros import ZeroList
    from .special import FunctionId, Kind

    xs = root_positions(n, lam, kind)
    if kind is PolyKind.PLAIN:
        fid = FunctionId(Kind.LOMMEL, lam + 1.0, degree=n)
        vals = lommel_eval(n, lam + 1.0, xs) if xs.size else np.empty(0)
    else:
        fid = FunctionId(Kind.ASSOC_LOMMEL, lam, degree=n)
        vals = assoc_eval(n, lam, xs) if xs.size else np.empty(0)
    return ZeroList(
        fid=fid,
        zeros=tuple(float(x) for x in xs),
        residuals=tuple(abs(float(v)) for v in np.atleast_1d(vals)) if xs.size else (),
        method="companion-matrix + bisection/Newton",
        tolerance=1e-12,
    )


def lommel_wronskian_identity(m: int, nu: float, x: float):
    """Relative residuals of the two closed-form Wronskian identities.

    Plain:      W[R_{m-2,nu+1}, R_{m-1,nu+1}](x)
                  = -(2/x^2) sum_{k=0}^{m-2} (nu+k+1) R_{k,nu+1}^2(x),
    associated: W[R*_{m,nu}, R*_{m-1,nu}](x)
                  = sum_{k=1}^{m-1} (2(nu+k)/x^2) R*_{k,nu}^2(x) + nu/x^2.
    """
    if m < 1:
        raise ValueError("lommel_wronskian_identity requires m >= 1")
    if x <= 0.0:
        raise ValueError("lommel_wronskian_identity requires x > 0")

    w = lommel_eval(m - 2, nu + 1.0, x) * lommel_prime(m - 1, nu + 1.0, x) - lommel_prime(
        m - 2, nu + 1.0, x
    ) * lommel_eval(m - 1, nu + 1.0, x)
    s = (2.0 / (x * x)) * sum(
        (nu + k + 1.0) * lommel_eval(k, nu + 1.0, x) ** 2 for k in range(0, m - 1)
    )
    plain = abs(w + s) / max(1.0, abs(w), abs(s))

    ws = assoc_eval(m, nu, x) * assoc_prime(m - 1, nu, x) - assoc_prime(m, nu, x) * assoc_eval(
        m - 1, nu, x
    )
    ss = (
        sum((2.0 * (nu + k) / (x * x)) * assoc_eval(k, nu, x) ** 2 for k in range(1, m))
        + nu / (x * x)
    )
    assoc = abs(ws - ss) / max(1.0, abs(ws), abs(ss))
    return plain, assoc


def slope_polynomial_coeffs(n: int) -> list:
    """Coefficients of the terminating 2F1[(1-n)/2, -n/2; -n; z] in powers of z."""
    a, b, c = (1.0 - n) / 2.0, -n / 2.0, float(-n)
    coeffs = []
    term = 1.0
    k = 0
    while True:
        coeffs.append(term)
        num = (a + k) * (b + k)
        if num == 0.0:
            break
        term = term * num / ((c + k) * (k + 1.0))
        k += 1
        if k > n:
            break
    return coeffs


def eta_limit(n: int) -> EtaRoot:
    """Limiting slopes (as the order grows) of the positive roots of R_{n,nu+1}."""
    if n < 2:
        raise ValueError("eta_limit requires n >= 2")
    coeffs = slope_polynomial_coeffs(n)
    poly = np.polynomial.Polynomial(coeffs)
    dpoly = poly.deriv()
    etas = []
    for z in poly.roots():
        if abs(z.imag) > 1e-10 * (1.0 + abs(z)) or z.real <= 1.0:
            continue
        zr = z.real
        for _ in range(50):
            d = dpoly(zr)
            if d == 0.0:
                break
            step = poly(zr) / d
            zr -= step
            if abs(step) < 1e-15 * (1.0 + abs(zr)):
                break
        etas.append(math.sqrt(zr))
    etas.sort()
    return EtaRoot(n, tuple(etas))


def pochhammer_limit(m: int) -> float:
    """Large-order limit of R_{m,nu+1}(rho)/2^m along a unit-slope root path.

    Equals the slope polynomial evaluated at z = 1, which telescopes to a
    ratio of Pochhammer products: ((-(m+1)/2)_(m/2)) / ((-m)_(m/2)) for even
    m and ((-m/2)_((m-1)/2)) / ((-m)_((m-1)/2)) for odd m.
    """
    if m < 0:
        raise ValueError("pochhammer_limit requires m >= 0")
    if m == 0:
        return 1.0
    if m % 2 == 0:
        j = m // 2
        num = _rising_product(-(m + 1) / 2.0, j)
        den = _rising_product(float(-m), j)
    else:
        j = (m - 1) // 2
        num = _rising_product(-m / 2.0, j)
        den = _rising_product(float(-m), j)
    return num / den


def values_at_bessel_zero(nu: float, j: float, count: int) -> np.ndarray:
    """R_{k,nu+1}(j) for k = 0..count-1 where j is a positive zero of J_nu.

    At such points the sequence k -> R_{k,nu+1}(j) is the minimal solution of
    the three-term recurrence, so it is generated by normalized backward
    recurrence (forward recurrence is unstable there).
    """
    K = int(max(count + 10, math.ceil(j) + 60, math.ceil(abs(nu)) + 40))
    vals = np.zeros(K + 2)
    vals[K + 1] = 0.0
    vals[K] = 1e-280
    for k in range(K, 0, -1):
        vals[k - 1] = (2.0 * (nu + 1.0 + k) / j) * vals[k] - vals[k + 1]
        if abs(vals[k - 1]) > 1e250:
            vals[k - 1 :] /= 1e250
    vals /= vals[0]
    return vals[:count]
