"""Floating-point validation of the integral identities behind the decay
calculus: semiflat coordinates, the rho-kernel, recursive propagator
quadrature, the Ooguri-Vafa magnetic coordinate and finite-difference
identity checks.

All BPS-ray integrals use the substitution zeta' = -(Z/|Z|) e^t, under
which the semiflat factor decays like exp(-2 pi R |Z| cosh t); truncating
at |t| <= T and applying Gauss-Legendre nodes gives controllable absolute
error.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# quadrature on BPS rays

@dataclass(frozen=True)
class QuadratureSpec:
    nodes: int = 400
    T: float = 6.0
    tol: float = 1e-10

    def grid(self) -> tuple[np.ndarray, np.ndarray]:
        t, w = np.polynomial.legendre.leggauss(self.nodes)
        return t * self.T, w * self.T

    def truncation_error(self, R: float, absZ: float) -> float:
        """Bound on the discarded tails exp(-2 pi R |Z| cosh T)."""
        return math.exp(-TWO_PI * R * absZ * (math.cosh(self.T) - 1.0))


DEFAULT_SPEC = QuadratureSpec()


def ray_points(direction: complex, spec: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    """Nodes zeta' = -(d/|d|) e^t on the ray of -direction, and dzeta' weights.

    direction is Z_gamma; the BPS ray ell_gamma points along -Z_gamma.
    dzeta' = zeta' dt, so the returned weights already include the zeta'
    factor.
    """
    t, w = spec.grid()
    unit = -direction / abs(direction)
    z = unit * np.exp(t)
    return z, z * w


def rho(sigma: complex | np.ndarray, tau: complex | np.ndarray):
    """Kernel (1/tau)(tau+sigma)/(tau-sigma); residue at tau=sigma is 2."""
    return (tau + sigma) / (tau * (tau - sigma))


# ---------------------------------------------------------------------------
# semiflat coordinates

@dataclass(frozen=True)
class ZContext:
    """Numeric central charges and angles for the basis of a charge lattice."""
    zs: tuple[complex, ...]
    thetas: tuple[float, ...]
    R: float

    def z(self, gamma: tuple[int, ...]) -> complex:
        return sum(n * z for n, z in zip(gamma, self.zs))

    def theta(self, gamma: tuple[int, ...]) -> float:
        return sum(n * t for n, t in zip(gamma, self.thetas))

    def x_sf(self, gamma: tuple[int, ...], zeta):
        z = self.z(gamma)
        if np.any(zeta == 0):
            raise ZeroDivisionError("x_sf has an essential singularity at zeta=0")
        return np.exp(math.pi * self.R * z / zeta + 1j * self.theta(gamma)
                      + math.pi * self.R * zeta * np.conjugate(z))


# ---------------------------------------------------------------------------
# propagators

def propagator(zctx: ZContext, tree, zeta, spec: QuadratureSpec = DEFAULT_SPEC,
               ray_z: complex | None = None):
    """G value of a rooted decorated tree (gamma, [subtrees]), recursively.

    ray_z overrides the integration-ray direction of the root (used when
    probing contour moves); the integrand still uses the true Z.
    """
    gamma, children = tree
    z = zctx.z(gamma)
    pts, dz = ray_points(ray_z if ray_z is not None else z, spec)
    integrand = rho(zeta, pts) * zctx.x_sf(gamma, pts)
    for ch in children:
        integrand = integrand * propagator(zctx, ch, pts, spec)
    return np.sum(integrand * dz) / (4j * math.pi)


def chain_tree(charges: list[tuple[int, ...]]):
    """Path diagram rooted at charges[0]."""
    tree = (charges[-1], [])
    for g in reversed(charges[:-1]):
        tree = (g, [tree])
    return tree


def decay_slope(zctx: ZContext, charges: list[tuple[int, ...]], zeta,
                spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Least-squares slope of log|G_n| against n for chain prefixes."""
    ns, logs = [], []
    for n in range(1, len(charges) + 1):
        val = abs(propagator(zctx, chain_tree(charges[:n]), zeta, spec))
        ns.append(float(n))
        logs.append(math.log(val))
    return float(np.polyfit(ns, logs, 1)[0])


# ---------------------------------------------------------------------------
# contour-move identity

def residue_move_check(zctx: ZContext, delta: tuple[int, ...],
                       gm: tuple[int, ...], ray_plus: complex,
                       ray_minus: complex, zeta,
                       spec: QuadratureSpec = DEFAULT_SPEC):
    """Moving the inner ray across the outer one picks up a residue.

    lhs: the double integral over (ell_delta, inner ray) evaluated with the
    inner contour on either side of ell_delta, then subtracted.  rhs: the
    single integral of x_sf of the sum along ell_delta.  ray_plus and
    ray_minus are Z-values whose rays straddle ell_delta, ray_plus
    counterclockwise of it (the two near-wall positions of the gm-ray).
    Returns (lhs, rhs, |lhs-rhs|).
    """
    p1, d1 = ray_points(zctx.z(delta), spec)

    def double(ray_z):
        p2, d2 = ray_points(ray_z, spec)
        inner = (rho(p1[:, None], p2[None, :]) * zctx.x_sf(gm, p2)[None, :]
                 * d2[None, :]).sum(axis=1) / (4j * math.pi)
        integrand = rho(zeta, p1) * zctx.x_sf(delta, p1) * inner
        return np.sum(integrand * d1) * 2 / (4j * math.pi)

    lhs = double(ray_plus) - double(ray_minus)
    total = tuple(a + b for a, b in zip(delta, gm))
    rhs = np.sum(rho(zeta, p1) * zctx.x_sf(total, p1) * d1) * 2 / (4j * math.pi)
    return lhs, rhs, abs(lhs - rhs)


# ---------------------------------------------------------------------------
# Ooguri-Vafa model

@dataclass(frozen=True)
class OVModel:
    """Single electric state of charge q on the disc |a| < |Lambda|."""
    Lam: complex = 1.0
    q: int = 1
    R: float = 3.0
    a: complex = 0.3 + 0.1j
    theta_e: float = 0.7
    theta_m: float = 0.3

    def __post_init__(self):
        if abs(self.a) >= abs(self.Lam):
            raise ValueError("a must lie inside the disc of radius |Lambda|")
        if self.R <= 0:
            raise ValueError("R must be positive")

    @property
    def a_D(self) -> complex:
        return self.q ** 2 * (self.a * cmath.log(self.a / self.Lam) - self.a) \
            / (2j * math.pi)

    @property
    def tau(self) -> complex:
        return self.q ** 2 * cmath.log(self.a / self.Lam) / (2j * math.pi)

    def context(self) -> ZContext:
        """Basis order (gamma_e, gamma_m)."""
        return ZContext(zs=(self.a, self.a_D),
                        thetas=(self.theta_e, self.theta_m), R=self.R)


def ov_magnetic(model: OVModel, zeta, spec: QuadratureSpec = DEFAULT_SPEC):
    """Corrected magnetic coordinate via the two log-kernel quadratures."""
    zctx = model.context()
    q = model.q
    corr = 0.0 + 0.0j
    for sign in (+1, -1):
        pts, dz = ray_points(sign * zctx.z((1, 0)), spec)
        xe = zctx.x_sf((sign * q, 0), pts)
        if np.max(np.abs(xe)) >= 1.0:
            raise ValueError("|x_sf_e^q| >= 1 on the ray; principal log invalid")
        corr += sign * (1j * q / (4 * math.pi)) * np.sum(
            rho(zeta, pts) * np.log(1.0 - xe) * dz)
    return zctx.x_sf((0, 1), zeta) * np.exp(corr)


def ov_tba_rhs(model: OVModel, zeta, spec: QuadratureSpec = DEFAULT_SPEC):
    """Right side of the integral equation for x_m with x_e semiflat.

    Written from the generic form: for each state (gamma', Omega') the
    exponent gains -(Omega'/4 pi i) <gamma_m, gamma'> Int_{ell_gamma'}
    rho log(1 - x_gamma').
    """
    zctx = model.context()
    q = model.q
    expo = 0.0 + 0.0j
    for gp in ((q, 0), (-q, 0)):
        pairing = gp[0]             # <gamma_m, gamma'>, orientation fixed by
        # requiring agreement with the closed-form magnetic coordinate
        pts, dz = ray_points(zctx.z(gp), spec)
        xq = zctx.x_sf(gp, pts)
        expo += -pairing / (4j * math.pi) * np.sum(rho(zeta, pts)
                                                   * np.log(1.0 - xq) * dz)
    return zctx.x_sf((0, 1), zeta) * np.exp(expo)


def ov_instanton_magnetic(model: OVModel, zeta,
                          spec: QuadratureSpec = DEFAULT_SPEC, K: int = 30):
    """Magnetic coordinate from the single-vertex propagator sum.

    Sums (q/4 pi i) G_{k q gamma_e} / k over 0 < |k| <= K, the expansion
    of the log-kernel form (the sign follows from the tree weights: the
    single-vertex weight is -f^{kq gamma_e} and the magnetic pairing
    contributes another -1); an independent code path for consistency
    checks.
    """
    zctx = model.context()
    q = model.q
    expo = 0.0 + 0.0j
    for sign in (+1, -1):
        pts, dz = ray_points(sign * zctx.z((1, 0)), spec)
        ker = rho(zeta, pts) * dz
        for k in range(1, K + 1):
            xk = zctx.x_sf((sign * k * q, 0), pts)
            expo += q / (4j * math.pi) * np.sum(ker * xk) / (sign * k)
    return zctx.x_sf((0, 1), zeta) * np.exp(expo)


def ov_fixed_point_residual(model: OVModel, zeta,
                            spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """|x_m - RHS(x_m)| for the quadrature fixed point (x_e needs no update).

    x_m is built from the instanton sum, the right side from the log-kernel
    integral equation, so the two sides take different code paths.
    """
    xm = ov_instanton_magnetic(model, zeta, spec)
    return abs(xm - ov_tba_rhs(model, zeta, spec))


# ---------------------------------------------------------------------------
# finite-difference identity check

def scale_invariance_check(model: OVModel, zeta: complex, h: float = 1e-5,
                           spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Relative error of zeta d/dzeta X = (-L dL + Lb dLb - a da + ab dab) X.

    Central differences; the anti-holomorphic derivatives act through the
    conjugated copies baked into x_sf, so we vary Lam and a along real and
    imaginary directions and combine.
    """
    def X(Lam, a, z):
        m = OVModel(Lam=Lam, q=model.q, R=model.R, a=a,
                    theta_e=model.theta_e, theta_m=model.theta_m)
        return ov_magnetic(m, z, spec)

    def wirtinger(f, w0):
        # (df/dw, df/dwbar) at w0 by central differences
        fx = (f(w0 + h) - f(w0 - h)) / (2 * h)
        fy = (f(w0 + 1j * h) - f(w0 - 1j * h)) / (2 * h)
        return (fx - 1j * fy) / 2, (fx + 1j * fy) / 2

    lhs = zeta * (X(model.Lam, model.a, zeta * (1 + h))
                  - X(model.Lam, model.a, zeta * (1 - h))) / (2 * h * zeta)
    dL, dLb = wirtinger(lambda w: X(w, model.a, zeta), model.Lam)
    da, dab = wirtinger(lambda w: X(model.Lam, w, zeta), model.a)
    rhs = (-model.Lam * dL + np.conjugate(model.Lam) * dLb
           - model.a * da + np.conjugate(model.a) * dab)
    return abs(lhs - rhs) / abs(lhs)


# ---------------------------------------------------------------------------
# near-wall numeric charges

def near_wall_context(R: float = 3.0, scale: float = 0.2,
                      side: str = "mid") -> ZContext:
    """Numeric Z's echoing the exact phase model, scaled to |Z| about 2.

    side 'plus'/'minus' give the two near-wall positions; 'mid' puts both
    charges symmetrically about the wall at 90 degrees.
    """
    if side == "plus":
        zd, zm = -1 + 10j, 1 + 10j
    elif side == "minus":
        zd, zm = 0.5 + 10j, -0.5 + 10j
    elif side == "mid":
        zd, zm = 0.25 + 10j, -0.25 + 10j
    else:
        raise ValueError(f"side must be plus/minus/mid, got {side!r}")
    return ZContext(zs=(zd * scale, zm * scale), thetas=(0.7, 0.3), R=R)
