"""Shared numerical services: quadrature, curve differentiation, frame ODE.

Derivatives default to dual-scalar forward differentiation: a curve closure
is evaluated at ``u + eps`` and the dual slot is read back, so catalog
closed forms differentiate to roundoff.  Central finite differences remain
available as an independent cross-check mode.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field

import numpy as np

from .dual import DualScalar, DualVec3
from .errors import NonFinite, StepSizeError
from .lorentz import Vec3L, lorentz_cross, lorentz_dot

QUAD_PANELS_PER_UNIT = 256
MIN_QUAD_PANELS = 2

SIMPSON = "simpson"
TRAPEZOID = "trapezoid"
DUAL_AD = "dual-ad"
CENTRAL_FD = "central-fd"


@dataclass(frozen=True)
class NumericsConfig:
    """Knobs for quadrature, differentiation, ODE stepping, and tolerances.

    ``derivative_mode`` selects how measurement derivatives are taken
    (construction-side solves always differentiate exactly via dual
    evaluation).  ``tolerance_theorem`` defaults per derivative mode:
    1e-8 for dual-ad, 1e-6 for central-fd.
    """

    quadrature: str = SIMPSON
    derivative_mode: str = DUAL_AD
    fd_step: float = 1e-4
    ode_steps_per_unit: int = 1000
    tolerance_construction: float = 1e-9
    tolerance_theorem: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.quadrature not in (SIMPSON, TRAPEZOID):
            raise ValueError(f"unknown quadrature {self.quadrature!r}")
        if self.derivative_mode not in (DUAL_AD, CENTRAL_FD):
            raise ValueError(f"unknown derivative mode {self.derivative_mode!r}")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be positive")
        if self.ode_steps_per_unit < 16:
            raise ValueError("ode_steps_per_unit must be >= 16")
        if self.tolerance_theorem is None:
            tol = 1e-8 if self.derivative_mode == DUAL_AD else 1e-6
            object.__setattr__(self, "tolerance_theorem", tol)


DEFAULT_CONFIG = NumericsConfig()


def _assert_finite(v, where: str) -> None:
    if isinstance(v, DualScalar):
        _assert_finite(v.re, where)
        _assert_finite(v.du, where)
    elif isinstance(v, numbers.Real):
        if not math.isfinite(v):
            raise NonFinite(f"non-finite value in {where}: {v!r}")


def integrate(f, a: float, b: float, cfg: NumericsConfig = DEFAULT_CONFIG):
    """Definite integral of ``f`` over [a, b] by a composite rule.

    Exact on constants; the Simpson rule is exact through cubics.  The
    integrand may return floats or dual scalars (the sum is generic).
    """
    if not a <= b:
        raise ValueError(f"integrate needs a <= b, got [{a}, {b}]")
    if a == b:
        return 0.0
    n = max(MIN_QUAD_PANELS, int(math.ceil((b - a) * QUAD_PANELS_PER_UNIT)))
    if n % 2:
        n += 1
    h = (b - a) / n
    if cfg.quadrature == TRAPEZOID:
        total = 0.5 * (f(a) + f(b))
        for i in range(1, n):
            total = total + f(a + i * h)
        result = total * h
    else:
        total = f(a) + f(b)
        for i in range(1, n):
            v = f(a + i * h)
            total = total + (4.0 * v if i % 2 else 2.0 * v)
        result = total * (h / 3.0)
    _assert_finite(result, "integrate")
    return result


def cumulative_integrate(f, grid: np.ndarray, cfg: NumericsConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Antiderivative values F(grid[i]) - F(grid[0]) on an increasing grid.

    Simpson mode takes one midpoint sample per interval, so each panel is
    exact through cubics; the nodes are shared with the caller's samples.
    """
    grid = np.asarray(grid, dtype=float)
    out = np.zeros(len(grid))
    acc = 0.0
    for i in range(len(grid) - 1):
        a, b = float(grid[i]), float(grid[i + 1])
        h = b - a
        fa, fb = f(a), f(b)
        if cfg.quadrature == TRAPEZOID:
            piece = 0.5 * h * (fa + fb)
        else:
            piece = h / 6.0 * (fa + 4.0 * f(0.5 * (a + b)) + fb)
        _assert_finite(piece, "cumulative_integrate")
        acc += piece
        out[i + 1] = acc
    return out


def differentiate(curve, u, cfg: NumericsConfig = DEFAULT_CONFIG) -> Vec3L:
    """Derivative of a Vec3L-valued curve at parameter u.

    In dual-ad mode the curve is evaluated at ``u + eps`` and the dual slot
    is the derivative; ``u`` may itself be a dual scalar, which nests one
    differentiation order deeper.
    """
    if cfg.derivative_mode == DUAL_AD:
        v = curve(DualScalar(u, 1.0))
        return DualVec3.from_components(v).du
    h = cfg.fd_step
    return (curve(u + h) - curve(u - h)) / (2.0 * h)


def value_and_derivative(curve, u, cfg: NumericsConfig = DEFAULT_CONFIG):
    """Curve value and derivative from a single dual evaluation.

    One pass through the closure carries both slots, which matters in the
    nested inner loops; fd mode falls back to three evaluations.
    """
    if cfg.derivative_mode == DUAL_AD:
        v = DualVec3.from_components(curve(DualScalar(u, 1.0)))
        return v.re, v.du
    h = cfg.fd_step
    return curve(u), (curve(u + h) - curve(u - h)) / (2.0 * h)


def scalar_derivative(f, u, cfg: NumericsConfig = DEFAULT_CONFIG):
    """Same as :func:`differentiate` for scalar-valued functions."""
    if cfg.derivative_mode == DUAL_AD:
        v = f(DualScalar(u, 1.0))
        return v.du if isinstance(v, DualScalar) else 0.0
    h = cfg.fd_step
    return (f(u + h) - f(u - h)) / (2.0 * h)


# ---------------------------------------------------------------------------
# frame ODE

@dataclass(frozen=True)
class FrameState:
    """Moving frame {e, t, g} plus striction point c."""

    e: Vec3L
    t: Vec3L
    g: Vec3L
    c: Vec3L


def frame_residual(e: Vec3L, t: Vec3L, g: Vec3L, signs=(1.0, -1.0, 1.0)) -> float:
    """Max deviation from Lorentz-orthonormality with the given signature."""
    return max(
        abs(lorentz_dot(e, e) - signs[0]),
        abs(lorentz_dot(t, t) - signs[1]),
        abs(lorentz_dot(g, g) - signs[2]),
        abs(lorentz_dot(e, t)),
        abs(lorentz_dot(e, g)),
        abs(lorentz_dot(t, g)),
    )


def lorentz_gram_schmidt(e: Vec3L, t: Vec3L, g: Vec3L):
    """Re-orthonormalize in the order t, e, g for signature (+, -, +).

    t is normalized timelike, e is projected off t and normalized
    spacelike, and g is completed as -e x t (the frame's own definition,
    which also pins the orientation).
    """
    qt = lorentz_dot(t, t)
    if qt >= 0.0:
        raise StepSizeError("tangent lost its timelike character")
    t = t / math.sqrt(-qt)
    e = e + lorentz_dot(e, t) * t
    qe = lorentz_dot(e, e)
    if qe <= 0.0:
        raise StepSizeError("ruling lost its spacelike character")
    e = e / math.sqrt(qe)
    g = -lorentz_cross(e, t)
    return e, t, g


def rk4_frame_step(state: FrameState, s: float, h: float,
                   gamma, delta, Delta,
                   drift_tol: float = 1e-6) -> FrameState:
    """One classical RK4 step of the frame system

        e' = t,  t' = e + gamma*g,  g' = gamma*t,  c' = delta*e + Delta*g,

    followed by Lorentzian Gram-Schmidt.  Raises StepSizeError if the raw
    step drifts from orthonormality by more than ``drift_tol``.
    """

    def rates(si, e, t, g, _c):
        ga = gamma(si)
        return (t, e + ga * g, ga * t, delta(si) * e + Delta(si) * g)

    e0, t0, g0, c0 = state.e, state.t, state.g, state.c
    k1 = rates(s, e0, t0, g0, c0)
    k2 = rates(s + 0.5 * h, e0 + 0.5 * h * k1[0], t0 + 0.5 * h * k1[1],
               g0 + 0.5 * h * k1[2], c0 + 0.5 * h * k1[3])
    k3 = rates(s + 0.5 * h, e0 + 0.5 * h * k2[0], t0 + 0.5 * h * k2[1],
               g0 + 0.5 * h * k2[2], c0 + 0.5 * h * k2[3])
    k4 = rates(s + h, e0 + h * k3[0], t0 + h * k3[1], g0 + h * k3[2], c0 + h * k3[3])

    sixth = h / 6.0
    e = e0 + sixth * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
    t = t0 + sixth * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
    g = g0 + sixth * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])
    c = c0 + sixth * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3])

    drift = frame_residual(e, t, g)
    if drift > drift_tol:
        raise StepSizeError(f"frame drift {drift:.3e} exceeds {drift_tol:.1e} at s={s}")
    e, t, g = lorentz_gram_schmidt(e, t, g)
    return FrameState(e, t, g, c)
