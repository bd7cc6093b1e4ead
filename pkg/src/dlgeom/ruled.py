"""Ruled surfaces as dual spherical curves: frames, invariants, reconstruction.

A spacelike ruled surface ``phi(s, v) = c(s) + v*e(s)`` is carried by the
dual curve ``e + eps*(c x e)``.  On an arc-length grid the moving frame
{e, t, g} with t = e', g = -e x t obeys

    e' = t,   t' = e + gamma*g,   g' = gamma*t,

and the surface is pinned up to placement by the invariant functions
gamma (conical curvature), delta = <c', e> and Delta = det(c', e, t) (the
distribution parameter; zero exactly for developable surfaces).  The same
measurement pipeline exists for timelike surfaces with timelike rulings,
which is what Mannheim offsetting produces.

Curve closures are duck-typed over dual scalars throughout, so every
derivative taken here is exact forward differentiation (finite differences
remain available through the numerics config).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from . import dual
from .dual import DualScalar, DualVec3, dual_norm, leading_real
from .errors import DegenerateIndicatrix, FrameDegeneracy, GeometryError, NullDarboux
from .lorentz import Vec3L, det3, lorentz_cross, lorentz_dot
from .numerics import (DEFAULT_CONFIG, DUAL_AD, NumericsConfig, FrameState,
                       cumulative_integrate, differentiate, frame_residual, integrate,
                       rk4_frame_step, scalar_derivative, value_and_derivative)

SPACELIKE_SURFACE = "spacelike-surface"
TIMELIKE_SURFACE = "timelike-surface"

#: below this squared indicatrix speed the ruling direction is stalling
SPEED_TOL = 1e-10

#: orthonormality ceiling for computed frames
FRAME_TOL = 1e-6


@dataclass(frozen=True)
class RuledSurfaceSpec:
    """A ruled surface given by closed-form curves.

    ``indicatrix`` is the unit ruling direction e(u) and ``base_curve`` any
    directrix; both must accept dual-scalar parameters.  ``kind`` selects
    the causal setup: a spacelike surface has a unit spacelike ruling with
    timelike indicatrix tangent, a timelike surface (timelike ruling) the
    opposite pair of characters.
    """

    indicatrix: Callable
    base_curve: Callable
    domain: tuple
    samples: int
    kind: str = SPACELIKE_SURFACE
    name: str = "custom"

    def __post_init__(self):
        if self.kind not in (SPACELIKE_SURFACE, TIMELIKE_SURFACE):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.domain[0] <= self.domain[1]:
            raise ValueError(f"empty domain {self.domain}")

    def grid(self) -> np.ndarray:
        return np.linspace(self.domain[0], self.domain[1], self.samples)

    def ruling_sign(self) -> float:
        """+1 for a spacelike ruling, -1 for a timelike one."""
        return 1.0 if self.kind == SPACELIKE_SURFACE else -1.0


@dataclass(frozen=True)
class FrameSample:
    """Frame and invariants of one ruling.

    ``s`` is the indicatrix arc length, ``s_star`` the dual slot of the
    dual arc length (the accumulated distribution parameter, anchored at
    parameter 0).  ``gamma_dual`` packs the dual conical curvature.
    """

    s: float
    e: Vec3L
    t: Vec3L
    g: Vec3L
    gamma: float
    delta: float
    Delta: float
    s_star: float
    gamma_dual: DualScalar
    striction_point: Vec3L

    def dual_e(self) -> DualVec3:
        return DualVec3(self.e, lorentz_cross(self.striction_point, self.e))

    def dual_t(self) -> DualVec3:
        return DualVec3(self.t, lorentz_cross(self.striction_point, self.t))

    def dual_g(self) -> DualVec3:
        return DualVec3(self.g, lorentz_cross(self.striction_point, self.g))


@dataclass(frozen=True)
class DualCurvature:
    """Radius of curvature data of the dual spherical image."""

    R_dual: DualScalar
    rho_dual: DualScalar
    darboux: DualVec3
    darboux_unit: DualVec3


@dataclass(frozen=True)
class InvariantProfile:
    """Invariant functions plus the initial frame that seeds reconstruction."""

    gamma: Callable
    delta: Callable
    Delta: Callable
    e0: Vec3L
    t0: Vec3L
    g0: Vec3L
    c0: Vec3L

    def __post_init__(self):
        res = frame_residual(self.e0, self.t0, self.g0)
        gref = -lorentz_cross(self.e0, self.t0)
        res = max(res, *(abs(x - y) for x, y in zip(self.g0, gref)))
        if res > 1e-9:
            raise FrameDegeneracy(f"initial frame off orthonormality by {res:.3e}")

    @classmethod
    def from_constants(cls, gamma: float, delta: float, Delta: float,
                       e0: Vec3L, t0: Vec3L, g0: Vec3L, c0: Vec3L) -> "InvariantProfile":
        return cls(lambda s: gamma, lambda s: delta, lambda s: Delta, e0, t0, g0, c0)


# ---------------------------------------------------------------------------
# parametrization and striction

def _signed_integral(f, a: float, b: float, cfg: NumericsConfig):
    if a <= b:
        return integrate(f, a, b, cfg)
    out = integrate(f, b, a, cfg)
    return -out


def speed_closure(spec: RuledSurfaceSpec, cfg: NumericsConfig = DEFAULT_CONFIG):
    """Indicatrix speed |e'(u)| as a dual-capable closure.

    The sign of <e',e'> is fixed by the surface kind, keeping the closure
    smooth; a vanishing speed raises DegenerateIndicatrix.
    """
    sign = -spec.ruling_sign()  # tangent has the opposite causal character

    def v(u):
        d = differentiate(spec.indicatrix, u, cfg)
        q = lorentz_dot(d, d) * sign
        if abs(leading_real(q)) < SPEED_TOL ** 2:
            raise DegenerateIndicatrix(f"indicatrix speed vanishes near u={leading_real(u)}")
        return dual.sqrt(q)

    return v


#: construction-side derivatives are always taken by exact dual evaluation
#: (the surface contract requires dual-capable curves); the configurable
#: derivative mode applies to the measurement layer on top.  Nesting central
#: differences three deep would sit on a roundoff floor near 1e-5.
_CONSTRUCTION_CFG = NumericsConfig()


def striction_jet(spec: RuledSurfaceSpec, cfg: NumericsConfig = DEFAULT_CONFIG):
    """Closure returning (c(u), e(u), e'(u)) with c the striction curve.

    Solves c = p + lam*e with lam = -<p', e'>/<e', e'>; the division by the
    tangent's quadratic form keeps the sign right in both causal setups.
    The solve is part of constructing the geometry, so its internal
    derivatives are exact regardless of the measurement mode.
    """
    ind, base = spec.indicatrix, spec.base_curve

    def jet(u):
        e, ep = value_and_derivative(ind, u, _CONSTRUCTION_CFG)
        q = lorentz_dot(ep, ep)
        if abs(leading_real(q)) < SPEED_TOL ** 2:
            raise DegenerateIndicatrix(f"striction undefined: e' vanishes near u={leading_real(u)}")
        p, pp = value_and_derivative(base, u, _CONSTRUCTION_CFG)
        lam = -lorentz_dot(pp, ep) / q
        return p + lam * e, e, ep

    return jet


def striction_curve(spec: RuledSurfaceSpec, cfg: NumericsConfig = DEFAULT_CONFIG):
    """The unique directrix with <c', e'> = 0, as a dual-capable closure."""
    jet = striction_jet(spec, cfg)

    def c(u):
        return jet(u)[0]

    return c


def distribution_closure(spec: RuledSurfaceSpec, cfg: NumericsConfig = DEFAULT_CONFIG):
    """Distribution parameter Delta(u) = det(c', e, e') as a dual-capable closure.

    Assumes an arc-length spec, where e' is the unit frame tangent.
    """
    jet = striction_jet(spec, cfg)

    def Delta(u):
        c_d, e_d, ep_d = jet(DualScalar(u, 1.0))
        cp = DualVec3.from_components(c_d).du
        e = DualVec3.from_components(e_d).re
        ep = DualVec3.from_components(ep_d).re
        return det3(cp, e, ep)

    return Delta


def arclength_reparametrize(spec: RuledSurfaceSpec,
                            cfg: NumericsConfig = DEFAULT_CONFIG) -> RuledSurfaceSpec:
    """Re-parametrize so the indicatrix moves at unit speed.

    Arc length is anchored at parameter 0.  The inverse map is solved by a
    dense cumulative table plus Newton refinement, and its derivative comes
    from the inverse-function rule 1/|e'|, so reparametrized curves stay
    exactly differentiable over dual scalars.  Specs already at unit speed
    are returned unchanged.
    """
    v = speed_closure(spec, _CONSTRUCTION_CFG)
    grid = spec.grid()
    speeds = np.array([v(float(u)) for u in grid])
    if np.max(np.abs(speeds - 1.0)) <= 1e-10:
        return spec

    u0, u1 = spec.domain
    n_dense = max(512, 8 * max(spec.samples - 1, 1))
    dense = np.linspace(u0, u1, n_dense + 1)
    table = _signed_integral(v, 0.0, u0, cfg) + cumulative_integrate(v, dense, cfg)

    def u_of_s(sb):
        if isinstance(sb, DualScalar):
            ub = u_of_s(sb.re)
            return DualScalar(ub, sb.du / v(ub))
        i = int(np.searchsorted(table, sb))
        i = min(max(i, 1), n_dense)
        w = (sb - table[i - 1]) / (table[i] - table[i - 1])
        u = dense[i - 1] + w * (dense[i] - dense[i - 1])
        for _ in range(8):
            s_here = table[i - 1] + _signed_integral(v, float(dense[i - 1]), float(u), cfg)
            step = (s_here - sb) / v(u)
            u = u - step
            if abs(step) <= 1e-14 * max(1.0, abs(u)):
                break
        return u

    out = RuledSurfaceSpec(
        indicatrix=lambda sb: spec.indicatrix(u_of_s(sb)),
        base_curve=lambda sb: spec.base_curve(u_of_s(sb)),
        domain=(float(table[0]), float(table[-1])),
        samples=spec.samples,
        kind=spec.kind,
        name=spec.name,
    )
    v_out = speed_closure(out, _CONSTRUCTION_CFG)
    worst = max(abs(v_out(float(sb)) - 1.0) for sb in out.grid())
    if worst > 1e-8:
        raise GeometryError(f"reparametrization failed: residual speed error {worst:.3e}")
    return out


# ---------------------------------------------------------------------------
# frames and invariants

def darboux_frame(spec: RuledSurfaceSpec,
                  cfg: NumericsConfig = DEFAULT_CONFIG) -> list[FrameSample]:
    """Frame samples of an arc-length spacelike spec on its grid.

    gamma is extracted as -<g', t> (valid because <t,t> = -1), delta as
    <c', e>, Delta as det(c', e, t); the dual conical curvature combines
    them as gamma - eps*(delta + gamma*Delta).
    """
    if spec.kind != SPACELIKE_SURFACE:
        raise ValueError("darboux_frame expects a spacelike-surface spec")
    ind = spec.indicatrix
    jet = striction_jet(spec, cfg)
    c_curve = striction_curve(spec, cfg)
    Delta_fn = distribution_closure(spec, cfg)

    def g_curve(u):
        e, ep = value_and_derivative(ind, u, cfg)
        return -lorentz_cross(e, ep)

    grid = spec.grid()
    head = _signed_integral(Delta_fn, 0.0, float(grid[0]), cfg)
    s_star = head + cumulative_integrate(Delta_fn, grid, cfg)

    out = []
    for i, s in enumerate(map(float, grid)):
        if cfg.derivative_mode == DUAL_AD:
            c_d, e_d, ep_d = jet(DualScalar(s, 1.0))
            c_pair = DualVec3.from_components(c_d)
            point, cp = c_pair.re, c_pair.du
            e = DualVec3.from_components(e_d).re
            t = DualVec3.from_components(ep_d).re
        else:
            point = jet(s)[0]
            e = ind(s)
            t = differentiate(ind, s, cfg)
            cp = differentiate(c_curve, s, cfg)
        g = -lorentz_cross(e, t)
        res = frame_residual(e, t, g)
        if res > FRAME_TOL:
            raise FrameDegeneracy(
                f"frame residual {res:.3e} at s={s}; is the spec arc-length parametrized?")
        gamma = -lorentz_dot(differentiate(g_curve, s, cfg), t)
        if abs(lorentz_dot(cp, t)) > 1e-8:
            raise FrameDegeneracy(f"striction condition violated at s={s}")
        delta = lorentz_dot(cp, e)
        Delta = det3(cp, e, t)
        out.append(FrameSample(
            s=s, e=e, t=t, g=g,
            gamma=gamma, delta=delta, Delta=Delta,
            s_star=float(s_star[i]),
            gamma_dual=DualScalar(gamma, -(delta + gamma * Delta)),
            striction_point=point,
        ))
    return out


def dual_arclength(spec: RuledSurfaceSpec, s: float,
                   cfg: NumericsConfig = DEFAULT_CONFIG) -> DualScalar:
    """Dual arc length of the dual spherical image, from parameter 0 to s.

    Integrates the dual norm of the dual curve's derivative in dual
    arithmetic; for unit-speed specs this is s + eps*int(Delta) on the
    spacelike side and s1 - eps*int(Delta1) on the timelike side (the sign
    difference falls out of the norm's causal character).
    """
    ind = spec.indicatrix
    c_curve = striction_curve(spec, cfg)

    def moment(u):
        return lorentz_cross(c_curve(u), ind(u))

    def f(u):
        return dual_norm(DualVec3(differentiate(ind, u, cfg), differentiate(moment, u, cfg)))

    val = _signed_integral(f, 0.0, s, cfg)
    if isinstance(val, DualScalar):
        return val
    return DualScalar(float(val), 0.0)


def dual_curvature_elements(fs: FrameSample) -> DualCurvature:
    """Dual radius of curvature, spherical radius, and Darboux axes.

    R = 1/sqrt(1 + gamma_dual^2); the unit Darboux vector is
    (-gamma_dual*e + g) scaled by R; the spherical radius rho solves
    sin(rho) = R, cos(rho) = -gamma_dual*R via two-argument recovery.
    """
    gbar = fs.gamma_dual
    root = dual.sqrt(1.0 + gbar * gbar)
    R = 1.0 / root
    d = (-gbar) * fs.dual_e() + fs.dual_g()
    d0 = d * R
    sin_rho = R
    cos_rho = (-gbar) * R
    rho = DualScalar(
        math.atan2(sin_rho.re, cos_rho.re),
        sin_rho.du * cos_rho.re - cos_rho.du * sin_rho.re,
    )
    return DualCurvature(R_dual=R, rho_dual=rho, darboux=d, darboux_unit=d0)


def timelike_invariants(spec: RuledSurfaceSpec,
                        cfg: NumericsConfig = DEFAULT_CONFIG) -> list[FrameSample]:
    """Frame samples of a timelike-ruling spec, measured per unit arc length.

    The spec may be parametrized arbitrarily: all derivatives are taken in
    the given parameter and normalized by the indicatrix speed pointwise
    (exact chain rule), which avoids any interpolation error an explicit
    reparametrization would add.  Reported s values are the accumulated
    arc length anchored at parameter 0; gamma_1 follows the timelike
    convention gamma_1 = -<g1', t1> with <t1,t1> = +1, and the dual slot
    of gamma_dual is +(delta_1 + gamma_1*Delta_1).
    """
    if spec.kind != TIMELIKE_SURFACE:
        raise ValueError("timelike_invariants expects a timelike-surface spec")
    ind = spec.indicatrix
    v = speed_closure(spec, cfg)
    jet = striction_jet(spec, cfg)
    c_curve = striction_curve(spec, cfg)

    def g1_curve(u):
        e1, e1p = value_and_derivative(ind, u, cfg)
        q = lorentz_dot(e1p, e1p)
        return -lorentz_cross(e1, e1p) / dual.sqrt(q)

    def arc_moment_fn(u):
        # dual slot rate of the dual arc length: -Delta1 per unit s1, i.e.
        # -det(c1', e1, t1) per unit u
        c_d, e_d, ep_d = jet(DualScalar(u, 1.0))
        cp = DualVec3.from_components(c_d).du
        e1 = DualVec3.from_components(e_d).re
        e1p = DualVec3.from_components(ep_d).re
        return -det3(cp, e1, e1p) / dual.sqrt(lorentz_dot(e1p, e1p))

    grid = spec.grid()
    s1 = _signed_integral(v, 0.0, float(grid[0]), cfg) + cumulative_integrate(v, grid, cfg)
    s1_star = (_signed_integral(arc_moment_fn, 0.0, float(grid[0]), cfg)
               + cumulative_integrate(arc_moment_fn, grid, cfg))

    out = []
    for i, u in enumerate(map(float, grid)):
        if cfg.derivative_mode == DUAL_AD:
            c_d, e_d, ep_d = jet(DualScalar(u, 1.0))
            c_pair = DualVec3.from_components(c_d)
            point, cp = c_pair.re, c_pair.du
            e1 = DualVec3.from_components(e_d).re
            e1p = DualVec3.from_components(ep_d).re
        else:
            point = jet(u)[0]
            e1 = ind(u)
            e1p = differentiate(ind, u, cfg)
            cp = differentiate(c_curve, u, cfg)
        q = lorentz_dot(e1p, e1p)
        if q <= 0.0:
            raise FrameDegeneracy(f"offset indicatrix tangent not spacelike at u={u}")
        sp = math.sqrt(q)
        t1 = e1p / sp
        g1 = -lorentz_cross(e1, t1)
        res = frame_residual(e1, t1, g1, signs=(-1.0, 1.0, 1.0))
        if res > FRAME_TOL:
            raise FrameDegeneracy(f"offset frame residual {res:.3e} at u={u}")
        gamma1 = -lorentz_dot(differentiate(g1_curve, u, cfg), t1) / sp
        if abs(lorentz_dot(cp, t1)) > 1e-8:
            raise FrameDegeneracy(f"offset striction condition violated at u={u}")
        delta1 = lorentz_dot(cp, e1) / sp
        Delta1 = det3(cp, e1, t1) / sp
        out.append(FrameSample(
            s=float(s1[i]), e=e1, t=t1, g=g1,
            gamma=gamma1, delta=delta1, Delta=Delta1,
            s_star=float(s1_star[i]),
            gamma_dual=DualScalar(gamma1, delta1 + gamma1 * Delta1),
            striction_point=point,
        ))
    return out


BRANCH_SPACELIKE_DARBOUX = "|gamma1|<1"
BRANCH_TIMELIKE_DARBOUX = "|gamma1|>1"


class TimelikeRadius(NamedTuple):
    radius: DualScalar
    branch: str


def timelike_radius(gamma1_dual: DualScalar, tol: float = 1e-10) -> TimelikeRadius:
    """Dual radius of curvature 1/sqrt(|1 - gamma1^2|) of a timelike surface.

    The branch flag records which side of |gamma1| = 1 the Darboux vector
    sits on; at |gamma1| = 1 it is lightlike and the radius blows up.
    """
    g = gamma1_dual
    if abs(abs(g.re) - 1.0) < tol:
        raise NullDarboux(f"|gamma1| = {abs(g.re)} is at the lightlike-Darboux boundary")
    q = 1.0 - g * g
    if q.re > 0.0:
        return TimelikeRadius(1.0 / dual.sqrt(q), BRANCH_SPACELIKE_DARBOUX)
    return TimelikeRadius(1.0 / dual.sqrt(-q), BRANCH_TIMELIKE_DARBOUX)


# ---------------------------------------------------------------------------
# reconstruction from invariants

_QUINTIC = (
    # Horner tails of the quintic Hermite basis over tau in [0, 1]
    lambda tau: 1.0 + tau * tau * tau * (-10.0 + tau * (15.0 - 6.0 * tau)),
    lambda tau: tau + tau * tau * tau * (-6.0 + tau * (8.0 - 3.0 * tau)),
    lambda tau: 0.5 * tau * tau + tau * tau * tau * (-1.5 + tau * (1.5 - 0.5 * tau)),
    lambda tau: tau * tau * tau * (10.0 + tau * (-15.0 + 6.0 * tau)),
    lambda tau: tau * tau * tau * (-4.0 + tau * (7.0 - 3.0 * tau)),
    lambda tau: tau * tau * tau * (0.5 + tau * (-1.0 + 0.5 * tau)),
)

_CUBIC = (
    lambda tau: 1.0 + tau * tau * (-3.0 + 2.0 * tau),
    lambda tau: tau * (1.0 + tau * (-2.0 + tau)),
    lambda tau: tau * tau * (3.0 - 2.0 * tau),
    lambda tau: tau * tau * (-1.0 + tau),
)


class _HermiteCurve:
    """Piecewise Hermite interpolant on uniform nodes, dual-evaluable.

    Quintic when second derivatives are supplied (node accuracy carries
    through two derivative orders), cubic otherwise.  Evaluation outside
    the node span extrapolates with the end segment.
    """

    def __init__(self, s0: float, h: float, values: Sequence[Vec3L],
                 deriv1: Sequence[Vec3L], deriv2: Sequence[Vec3L] | None = None):
        self.s0 = s0
        self.h = h
        self.values = list(values)
        self.deriv1 = list(deriv1)
        self.deriv2 = None if deriv2 is None else list(deriv2)

    def __call__(self, u):
        x = (u - self.s0) / self.h
        i = int(math.floor(leading_real(x)))
        i = min(max(i, 0), len(self.values) - 2)
        tau = x - i
        h = self.h
        f0, f1 = self.values[i], self.values[i + 1]
        d0, d1 = self.deriv1[i], self.deriv1[i + 1]
        if self.deriv2 is None:
            b0, b1, b2, b3 = (basis(tau) for basis in _CUBIC)
            return f0 * b0 + (h * d0) * b1 + f1 * b2 + (h * d1) * b3
        a0, a1 = self.deriv2[i], self.deriv2[i + 1]
        h0, h1, h2, h3, h4, h5 = (basis(tau) for basis in _QUINTIC)
        return (f0 * h0 + (h * d0) * h1 + ((h * h) * a0) * h2
                + f1 * h3 + (h * d1) * h4 + ((h * h) * a1) * h5)


class _TaylorCurve:
    """Second-order expansion around a single node (zero-span grids)."""

    def __init__(self, s0: float, f: Vec3L, d: Vec3L, a: Vec3L):
        self.s0 = s0
        self.f = f
        self.d = d
        self.a = a

    def __call__(self, u):
        x = u - self.s0
        return self.f + self.d * x + self.a * (0.5 * x * x)


def reconstruct_from_invariants(profile: InvariantProfile, s_grid,
                                cfg: NumericsConfig = DEFAULT_CONFIG) -> RuledSurfaceSpec:
    """Integrate the frame system to a surface with the given invariants.

    Runs fixed-step RK4 with per-step Lorentzian re-orthonormalization on

        e' = t,  t' = e + gamma*g,  g' = gamma*t,  c' = delta*e + Delta*g,

    then packages the dense solution as quintic Hermite curves whose node
    derivatives come from the ODE rates themselves.  Feeding the result
    back through darboux_frame reproduces the profile.
    """
    s_grid = np.asarray(s_grid, dtype=float)
    if len(s_grid) == 0:
        raise ValueError("empty reconstruction grid")
    s0, s_end = float(s_grid[0]), float(s_grid[-1])
    state = FrameState(profile.e0, profile.t0, profile.g0, profile.c0)

    def accel(si: float, st: FrameState) -> Vec3L:
        return st.e + profile.gamma(si) * st.g

    def cdot(si: float, st: FrameState) -> Vec3L:
        return profile.delta(si) * st.e + profile.Delta(si) * st.g

    def cddot(si: float, st: FrameState) -> Vec3L:
        # (delta*e + Delta*g)' with the frame rates substituted in
        dd = scalar_derivative(profile.delta, si, cfg)
        DD = scalar_derivative(profile.Delta, si, cfg)
        return (dd * st.e + DD * st.g
                + (profile.delta(si) + profile.Delta(si) * profile.gamma(si)) * st.t)

    span = s_end - s0
    if span == 0.0:
        ind = _TaylorCurve(s0, state.e, state.t, accel(s0, state))
        base = _TaylorCurve(s0, state.c, cdot(s0, state), cddot(s0, state))
        return RuledSurfaceSpec(ind, base, (s0, s_end), max(1, len(s_grid)),
                                SPACELIKE_SURFACE, "reconstructed")

    n_steps = max(1, int(math.ceil(span * cfg.ode_steps_per_unit)))
    h = span / n_steps
    values_e, d1_e, d2_e = [state.e], [state.t], [accel(s0, state)]
    values_c, d1_c, d2_c = [state.c], [cdot(s0, state)], [cddot(s0, state)]
    for k in range(n_steps):
        sk = s0 + k * h
        state = rk4_frame_step(state, sk, h, profile.gamma, profile.delta, profile.Delta)
        sk1 = sk + h
        values_e.append(state.e)
        d1_e.append(state.t)
        d2_e.append(accel(sk1, state))
        values_c.append(state.c)
        d1_c.append(cdot(sk1, state))
        d2_c.append(cddot(sk1, state))

    ind = _HermiteCurve(s0, h, values_e, d1_e, d2_e)
    base = _HermiteCurve(s0, h, values_c, d1_c, d2_c)
    return RuledSurfaceSpec(ind, base, (s0, s_end), len(s_grid),
                            SPACELIKE_SURFACE, "reconstructed")
