"""Evaluation of the Bessel / cylinder function family.

Wraps the vetted backend routines (scipy.special) behind a small contract:
every public operation returns an :class:`EvalResult` carrying the value, a
conservative absolute-error estimate and the evaluation regime.  The error
estimates are validated against an independent high-precision oracle on the
fixture grid shipped with the package (see ``data/accuracy_grid.csv``).

Supported members:

* ``J_nu``            Bessel function of the first kind,
* ``Y_nu``            Bessel function of the second kind,
* ``C_nu^alpha``      cylinder function ``cos(alpha) J_nu - sin(alpha) Y_nu``,
* ``J'_nu``           derivative, computed as ``(J_{nu-1} - J_{nu+1}) / 2``,
* scaled function     ``JJ_nu(x) = Gamma(nu+1) (x/2)^{-nu} J_nu(x)``,
* ``K_0``             modified Bessel function of the second kind, order 0.

All functions are pure and thread-safe.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

MAX_ORDER = 60.0


class DomainError(ValueError):
    """Argument outside the supported domain of an operation."""


class Kind(enum.Enum):
    BESSEL_J = "j"
    BESSEL_Y = "y"
    CYLINDER = "c"
    BESSEL_J_PRIME = "jp"
    LOMMEL = "lommel"
    ASSOC_LOMMEL = "assoc-lommel"


class Method(enum.Enum):
    SERIES = "series"
    BACKWARD_RECURRENCE = "backward-recurrence"
    ASYMPTOTIC = "asymptotic"
    CONNECTION = "connection"


@dataclass(frozen=True)
class FunctionId:
    """Identifies one member of the Bessel/Lommel family.

    ``alpha`` is meaningful only for ``Kind.CYLINDER`` (angle in [0, pi)),
    ``degree`` only for the Lommel kinds.
    """

    kind: Kind
    order: float
    alpha: float | None = None
    degree: int | None = None

    def __post_init__(self):
        if self.kind is Kind.CYLINDER:
            if self.alpha is None or not 0.0 <= self.alpha < math.pi:
                raise DomainError("cylinder kind requires alpha in [0, pi)")
        elif self.alpha is not None:
            raise DomainError("alpha is only meaningful for the cylinder kind")
        if self.kind in (Kind.LOMMEL, Kind.ASSOC_LOMMEL):
            if self.degree is None:
                raise DomainError("Lommel kinds require a polynomial degree")
        elif self.degree is not None:
            raise DomainError("degree is only meaningful for Lommel kinds")

    def label(self) -> str:
        if self.kind is Kind.CYLINDER:
            return f"C[nu={self.order:g}, alpha={self.alpha:g}]"
        if self.kind in (Kind.LOMMEL, Kind.ASSOC_LOMMEL):
            base = "R*" if self.kind is Kind.ASSOC_LOMMEL else "R"
            return f"{base}[{self.degree}, nu={self.order:g}]"
        name = {Kind.BESSEL_J: "J", Kind.BESSEL_Y: "Y", Kind.BESSEL_J_PRIME: "J'"}[self.kind]
        return f"{name}[nu={self.order:g}]"


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_estimate: float
    method: Method


def _check_order(nu: float) -> None:
    if abs(nu) > MAX_ORDER:
        raise OverflowError(f"order |nu|={abs(nu):g} exceeds the supported range {MAX_ORDER:g}")


def _regime(nu: float, x: float) -> Method:
    # Regime map of the evaluation strategy: power series for small arguments,
    # normalized recurrence in the mid range, large-argument asymptotics beyond.
    if x <= 12.0:
        return Method.SERIES
    if x <= max(30.0, 2.0 * abs(nu)):
        return Method.BACKWARD_RECURRENCE
    return Method.ASYMPTOTIC


def _envelope_j(nu: float, x: float) -> float:
    # Coarse amplitude bound for J_nu, used to scale error estimates.
    if x >= max(1.0, abs(nu)):
        return math.sqrt(2.0 / (math.pi * x))
    if nu >= 0.0:
        return 1.0
    t = nu * math.log(x / 2.0) - _sp.gammaln(nu + 1.0)
    return math.exp(min(t, 700.0))


# --- raw vectorized values (no wrapping); used by the zero finder ------------

def jv(nu, x):
    return _sp.jv(nu, x)


def yv(nu, x):
    return _sp.yv(nu, x)


def jvp(nu, x):
    return 0.5 * (_sp.jv(nu - 1.0, x) - _sp.jv(nu + 1.0, x))


def jvpp(nu, x):
    # from the Bessel differential equation
    x = np.asarray(x, dtype=float)
    return -jvp(nu, x) / x - (1.0 - (nu * nu) / (x * x)) * _sp.jv(nu, x)


def cyl(alpha, nu, x):
    return math.cos(alpha) * _sp.jv(nu, x) - math.sin(alpha) * _sp.yv(nu, x)


def cylp(alpha, nu, x):
    jp = 0.5 * (_sp.jv(nu - 1.0, x) - _sp.jv(nu + 1.0, x))
    yp = 0.5 * (_sp.yv(nu - 1.0, x) - _sp.yv(nu + 1.0, x))
    return math.cos(alpha) * jp - math.sin(alpha) * yp


def jj_scaled(nu, x):
    """Scaled function JJ_nu(x) = Gamma(nu+1) (x/2)^(-nu) J_nu(x); JJ_nu(0) = 1."""
    x = np.asarray(x, dtype=float)
    scale = np.exp(_sp.gammaln(nu + 1.0) - nu * np.log(np.where(x > 0, x, 1.0) / 2.0))
    out = np.where(x > 0, scale * _sp.jv(nu, x), 1.0)
    return out if out.ndim else float(out)


def jj_scaled_prime(nu, x):
    # d/dx of the scaled function, by direct differentiation of the product
    x = np.asarray(x, dtype=float)
    scale = np.exp(_sp.gammaln(nu + 1.0) - nu * np.log(x / 2.0))
    out = scale * (jvp(nu, x) - (nu / x) * _sp.jv(nu, x))
    return out if out.ndim else float(out)


# --- contract-level operations ------------------------------------------------

def bessel_j(nu: float, x: float) -> EvalResult:
    """J_nu(x) for nu > -1 (negative integer orders served via reflection)."""
    _check_order(nu)
    if x < 0.0:
        raise DomainError("bessel_j requires x >= 0")
    if nu <= -1.0:
        if nu != round(nu):
            raise DomainError("bessel_j requires nu > -1 (or a negative integer order)")
        n = int(round(nu))
        inner = bessel_j(-float(n), x)
        sign = -1.0 if n % 2 else 1.0
        return EvalResult(sign * inner.value, inner.abs_error_estimate, Method.CONNECTION)
    if x == 0.0:
        value = 1.0 if nu == 0.0 else 0.0
        return EvalResult(value, 0.0, Method.SERIES)
    value = float(_sp.jv(nu, x))
    est = 2e-13 * (abs(value) + _envelope_j(nu, x))
    return EvalResult(value, est, _regime(nu, x))


def bessel_j_scaled(nu: float, x: float) -> EvalResult:
    """JJ_nu(x) = Gamma(nu+1) (x/2)^(-nu) J_nu(x), normalized so JJ_nu(0) = 1."""
    _check_order(nu)
    if nu <= -1.0:
        raise DomainError("bessel_j_scaled requires nu > -1")
    if x < 0.0:
        raise DomainError("bessel_j_scaled requires x >= 0")
    if x == 0.0:
        return EvalResult(1.0, 0.0, Method.SERIES)
    value = float(jj_scaled(nu, x))
    scale = math.exp(_sp.gammaln(nu + 1.0) - nu * math.log(x / 2.0))
    est = 2e-13 * (abs(value) + scale * _envelope_j(nu, x))
    return EvalResult(value, est, Method.CONNECTION)


def bessel_y(nu: float, x: float) -> EvalResult:
    """Y_nu(x) for x > 0."""
    _check_order(nu)
    if x <= 0.0:
        raise DomainError("bessel_y requires x > 0")
    value = float(_sp.yv(nu, x))
    if x >= max(1.0, abs(nu)):
        env = math.sqrt(2.0 / (math.pi * x))
    else:
        env = abs(value)
    est = 5e-13 * (abs(value) + env)
    return EvalResult(value, est, _regime(nu, x))


def bessel_j_prime(nu: float, x: float) -> EvalResult:
    """J'_nu(x) via (J_{nu-1}(x) - J_{nu+1}(x)) / 2."""
    _check_order(nu + 1.0)
    if x < 0.0:
        raise DomainError("bessel_j_prime requires x >= 0")
    if x == 0.0 and nu < 1.0:
        raise DomainError("bessel_j_prime at x = 0 requires nu >= 1")
    lo = bessel_j(nu - 1.0, x) if nu - 1.0 > -1.0 or (nu - 1.0) == round(nu - 1.0) else None
    if lo is None:
        raise DomainError("bessel_j_prime requires nu > 0 or integer nu")
    hi = bessel_j(nu + 1.0, x)
    value = 0.5 * (lo.value - hi.value)
    est = 0.5 * (lo.abs_error_estimate + hi.abs_error_estimate)
    return EvalResult(value, est, Method.CONNECTION)


def cylinder(alpha: float, nu: float, x: float) -> EvalResult:
    """C_nu^alpha(x) = cos(alpha) J_nu(x) - sin(alpha) Y_nu(x)."""
    if not 0.0 <= alpha < math.pi:
        raise DomainError("cylinder requires alpha in [0, pi)")
    if alpha == 0.0:
        return bessel_j(nu, x)
    if x <= 0.0:
        raise DomainError("cylinder requires x > 0 for alpha > 0")
    j = bessel_j(nu, x)
    y = bessel_y(nu, x)
    value = math.cos(alpha) * j.value - math.sin(alpha) * y.value
    est = abs(math.cos(alpha)) * j.abs_error_estimate + abs(math.sin(alpha)) * y.abs_error_estimate
    return EvalResult(value, est, Method.CONNECTION)


def cylinder_prime(alpha: float, nu: float, x: float) -> EvalResult:
    """d/dx of the cylinder function."""
    if not 0.0 <= alpha < math.pi:
        raise DomainError("cylinder_prime requires alpha in [0, pi)")
    if x <= 0.0:
        raise DomainError("cylinder_prime requires x > 0")
    value = float(cylp(alpha, nu, x))
    jl = bessel_j(nu - 1.0, x) if nu - 1.0 > -1.0 else bessel_j(nu + 1.0, x)
    est = jl.abs_error_estimate + 1e-13 * abs(value)
    return EvalResult(value, est, Method.CONNECTION)


def modified_k0(x: float) -> EvalResult:
    """K_0(x) for x > 0."""
    if x <= 0.0:
        raise DomainError("modified_k0 requires x > 0")
    value = float(_sp.k0(x))
    est = 1e-13 * (abs(value) + 1e-300)
    return EvalResult(value, est, _regime(0.0, x))


def watson_integrand(u, c: float, nu: float):
    """Integrand of the order-derivative integral after substituting u = sinh t.

    Equals K_0(2 c u) (u + sqrt(1 + u^2))^(-2 nu) / sqrt(1 + u^2); integrating
    over u in (0, inf) and multiplying by 2c gives the derivative of a cylinder
    zero c with respect to the order nu.
    """
    u = np.asarray(u, dtype=float)
    root = np.sqrt(1.0 + u * u)
    return _sp.k0(2.0 * c * u) * (u + root) ** (-2.0 * nu) / root


def evaluate(fid: FunctionId, x: float) -> EvalResult:
    """Evaluate any supported FunctionId at x."""
    if fid.kind is Kind.BESSEL_J:
        return bessel_j(fid.order, x)
    if fid.kind is Kind.BESSEL_Y:
        return bessel_y(fid.order, x)
    if fid.kind is Kind.CYLINDER:
        return cylinder(fid.alpha, fid.order, x)
    if fid.kind is Kind.BESSEL_J_PRIME:
        return bessel_j_prime(fid.order, x)
    from . import lommel as _lommel

    if fid.kind is Kind.LOMMEL:
        return EvalResult(_lommel.lommel_eval(fid.degree, fid.order, x), 0.0, Method.SERIES)
    return EvalResult(_lommel.assoc_eval(fid.degree, fid.order, x), 0.0, Method.SERIES)


def value_fn(fid: FunctionId):
    """Vectorized plain-value callable for a FunctionId (no error metadata)."""
    if fid.kind is Kind.BESSEL_J:
        return lambda x: jv(fid.order, x)
    if fid.kind is Kind.BESSEL_Y:
        return lambda x: yv(fid.order, x)
    if fid.kind is Kind.CYLINDER:
        return lambda x: cyl(fid.alpha, fid.order, x)
    if fid.kind is Kind.BESSEL_J_PRIME:
        return lambda x: jvp(fid.order, x)
    from . import lommel as _lommel

    if fid.kind is Kind.LOMMEL:
        return lambda x: _lommel.lommel_eval(fid.degree, fid.order, x)
    return lambda x: _lommel.assoc_eval(fid.degree, fid.order, x)


def derivative_fn(fid: FunctionId):
    """Vectorized x-derivative callable for a FunctionId."""
    if fid.kind is Kind.BESSEL_J:
        return lambda x: jvp(fid.order, x)
    if fid.kind is Kind.BESSEL_Y:
        return lambda x: 0.5 * (yv(fid.order - 1.0, x) - yv(fid.order + 1.0, x))
    if fid.kind is Kind.CYLINDER:
        return lambda x: cylp(fid.alpha, fid.order, x)
    if fid.kind is Kind.BESSEL_J_PRIME:
        return lambda x: jvpp(fid.order, x)
    from . import lommel as _lommel

    if fid.kind is Kind.LOMMEL:
        return lambda x: _lommel.lommel_prime(fid.degree, fid.order, x)
    return lambda x: _lommel.assoc_prime(fid.degree, fid.order, x)
