"""Algebraic relative-equilibrium conditions.

Three families of geodesic/non-geodesic RE tests:

* non-geodesic (triangle) shapes: the three eigenvalue-scale quantities
  lambda_k must coincide for the shape to admit a rigid rotation,
* all bodies on the equator: two residuals built from the azimuthal
  spacings,
* all bodies on a rotating meridian: the pairwise balance between the
  centrifugal term s*omega^2/(2A) * sin(2 tau_k) and the attraction
  sin(tau_k)/|sin(tau_k)|^3, where A is the norm of the mass-weighted sum of
  double-angle unit vectors.

The meridian machinery also recovers (s, omega^2) from a shape and maps a
shape to the configuration {theta_k} oriented relative to the rotation axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    EPS_A,
    EPS_SING,
    AZeroError,
    GeneralShape,
    MassTriple,
    MeridianShape,
    SingularConfigurationError,
    SphericalConfiguration,
    in_uphys,
    reduce_angle,
)


def _q(x):
    """Attraction kernel sin(x)/|sin(x)|^3 (odd, 2pi-periodic)."""
    s = np.sin(x)
    return s / np.abs(s) ** 3


@dataclass(frozen=True)
class LambdaTriple:
    """The three eigenvalue-scale quantities tested for a triangle RE shape."""

    lambda1: float
    lambda2: float
    lambda3: float

    def as_array(self) -> np.ndarray:
        return np.array([self.lambda1, self.lambda2, self.lambda3], dtype=float)

    def max_spread(self) -> float:
        lam = self.as_array()
        return float(np.max(lam) - np.min(lam))


def lambda_triple_arrays(m: MassTriple, sigma12, sigma23, sigma31):
    """Vectorized evaluation of the three lambda quantities.

    Accepts scalars or broadcastable arrays of arcs in (0, pi); returns the
    triple (lambda1, lambda2, lambda3).
    """
    m1, m2, m3 = m.m1, m.m2, m.m3
    c12, c23, c31 = np.cos(sigma12), np.cos(sigma23), np.cos(sigma31)
    s12 = np.sin(sigma12) ** 3
    s23 = np.sin(sigma23) ** 3
    s31 = np.sin(sigma31) ** 3
    lam1 = ((m2 + m3) * s23 - m2 * c12 * s31 - m3 * c31 * s12) / s23
    lam2 = ((m3 + m1) * s31 - m3 * c23 * s12 - m1 * c12 * s23) / s31
    lam3 = ((m1 + m2) * s12 - m1 * c31 * s23 - m2 * c23 * s31) / s12
    return lam1, lam2, lam3


def lambda_triple(m: MassTriple, shape: GeneralShape) -> LambdaTriple:
    """The lambda triple of a shape; all three equal iff the shape can rotate rigidly
    as a (non-geodesic) relative equilibrium for these masses."""
    lam1, lam2, lam3 = lambda_triple_arrays(
        m, shape.sigma12, shape.sigma23, shape.sigma31
    )
    return LambdaTriple(float(lam1), float(lam2), float(lam3))


def is_lagrange_shape(m: MassTriple, shape: GeneralShape, tol: float = 1e-10) -> bool:
    """True iff the lambda triple is equal within tol*(1 + max |lambda_i|)."""
    lam = lambda_triple(m, shape).as_array()
    spread = np.max(lam) - np.min(lam)
    return bool(spread < tol * (1.0 + np.max(np.abs(lam))))


def inertia_matrix(m: MassTriple, shape: GeneralShape) -> np.ndarray:
    """Symmetric 3x3 inertia-tensor form whose eigenvectors give rotation axes.

    Diagonal (m2+m3, m3+m1, m1+m2); off-diagonal (i, j) entry
    -sqrt(m_i m_j) cos(sigma_ij).
    """
    m1, m2, m3 = m.m1, m.m2, m.m3
    c12, c23, c31 = (
        math.cos(shape.sigma12),
        math.cos(shape.sigma23),
        math.cos(shape.sigma31),
    )
    return np.array(
        [
            [m2 + m3, -math.sqrt(m1 * m2) * c12, -math.sqrt(m1 * m3) * c31],
            [-math.sqrt(m2 * m1) * c12, m3 + m1, -math.sqrt(m2 * m3) * c23],
            [-math.sqrt(m3 * m1) * c31, -math.sqrt(m3 * m2) * c23, m1 + m2],
        ]
    )


def equator_residuals(m: MassTriple, dphi12, dphi23, validate: bool = True):
    """Residuals of the equator RE condition at azimuthal spacings.

    Returns the two independent differences of the three quantities
    m_i m_j sin(dphi_ij)/|sin(dphi_ij)|^3 with dphi31 = -(dphi12 + dphi23).
    Scalars or broadcastable arrays accepted; validation applies to scalars.
    """
    dphi12 = np.asarray(dphi12, dtype=float)
    dphi23 = np.asarray(dphi23, dtype=float)
    dphi31 = -(dphi12 + dphi23)
    if validate and dphi12.ndim == 0 and dphi23.ndim == 0:
        for d in (float(dphi12), float(dphi23), float(dphi31)):
            if abs(math.sin(d)) < EPS_SING:
                raise SingularConfigurationError(
                    "equator spacing is singular (coincident or antipodal pair)"
                )
    t12 = m.m1 * m.m2 * _q(dphi12)
    t23 = m.m2 * m.m3 * _q(dphi23)
    t31 = m.m3 * m.m1 * _q(dphi31)
    r1 = t12 - t23
    r2 = t23 - t31
    if r1.ndim == 0:
        return float(r1), float(r2)
    return r1, r2


def big_a_taus(m: MassTriple, tau1, tau2):
    """Meridian norm A from raw relative arcs (vectorized).

    A^2 = sum_l m_l^2 + 2 (m1 m2 cos 2*tau3 + m2 m3 cos 2*tau1
          + m3 m1 cos 2*tau2), tau3 = -(tau1 + tau2).  Tiny negative
    radicands (floating dust above -1e-14) clamp to zero.
    """
    tau1 = np.asarray(tau1, dtype=float)
    tau2 = np.asarray(tau2, dtype=float)
    tau3 = -(tau1 + tau2)
    m1, m2, m3 = m.m1, m.m2, m.m3
    a2 = (
        m1 * m1
        + m2 * m2
        + m3 * m3
        + 2.0 * (m1 * m2 * np.cos(2.0 * tau3)
                 + m2 * m3 * np.cos(2.0 * tau1)
                 + m3 * m1 * np.cos(2.0 * tau2))
    )
    if np.any(a2 < -1e-14):
        raise ValueError("negative radicand in A^2: inputs are corrupted")
    a = np.sqrt(np.maximum(a2, 0.0))
    if a.ndim == 0:
        return float(a)
    return a


def big_a(m: MassTriple, shape: MeridianShape) -> float:
    """Norm of the mass-weighted sum of double-angle unit vectors for a shape."""
    return big_a_taus(m, shape.tau1, shape.tau2)


def _fg_entries(m: MassTriple, shape: MeridianShape):
    """Pairwise G (centrifugal) and F (attraction) entries, pair (i,j) <-> arc tau_k."""
    t1, t2, t3 = shape.tau1, shape.tau2, shape.tau3
    g12 = m.m1 * m.m2 * math.sin(2.0 * t3)
    g23 = m.m2 * m.m3 * math.sin(2.0 * t1)
    g31 = m.m3 * m.m1 * math.sin(2.0 * t2)
    f12 = m.m1 * m.m2 * float(_q(t3))
    f23 = m.m2 * m.m3 * float(_q(t1))
    f31 = m.m3 * m.m1 * float(_q(t2))
    return (g12, g23, g31), (f12, f23, f31)


def meridian_residuals(
    m: MassTriple,
    shape: MeridianShape,
    s: int,
    omega2: float,
    eps_a: float = EPS_A,
) -> np.ndarray:
    """Residuals of the meridian RE condition for a candidate (s, omega^2).

    The three pair terms m_i m_j (s omega^2/(2A) sin(2 tau_k) - q(tau_k))
    must coincide; returns their two independent differences.  Raises
    AZeroError when A <= eps_a (the A=0 machinery applies there instead).
    """
    a = big_a(m, shape)
    if a <= eps_a:
        raise AZeroError(
            "A ~ 0 for this shape; the generic meridian condition does not apply"
        )
    x = s * omega2 / (2.0 * a)
    (g12, g23, g31), (f12, f23, f31) = _fg_entries(m, shape)
    e12 = x * g12 - f12
    e23 = x * g23 - f23
    e31 = x * g31 - f31
    return np.array([e12 - e23, e23 - e31])


def solve_s_omega2(
    m: MassTriple,
    shape: MeridianShape,
    eps_a: float = EPS_A,
    tol_d: float = 1e-9,
):
    """Recover (s, omega^2) making the shape a meridian RE, if possible.

    The equal-triple condition is linear in x = s*omega^2/(2A): two
    independent equations, one unknown.  Solved by least squares; the system
    counts as consistent when the normalized 2x2 determinant of the
    coefficient/right-hand-side rows is below tol_d.  Returns None when
    inconsistent (the shape is not an RE shape), (+1, 0.0) when the solved
    spin vanishes.  Raises AZeroError for A <= eps_a.
    """
    a = big_a(m, shape)
    if a <= eps_a:
        raise AZeroError("A ~ 0 for this shape; spin is not determined by this route")
    (g12, g23, g31), (f12, f23, f31) = _fg_entries(m, shape)
    a1, a2 = g12 - g23, g23 - g31
    b1, b2 = f12 - f23, f23 - f31
    na = math.hypot(a1, a2)
    nb = math.hypot(b1, b2)
    mm = m.m1 * m.m2 + m.m2 * m.m3 + m.m3 * m.m1
    if na <= 1e-14 * mm:
        if nb <= 1e-14 * mm:
            return 1, 0.0
        return None
    if abs(a1 * b2 - a2 * b1) > tol_d * na * nb:
        return None
    x = (a1 * b1 + a2 * b2) / (na * na)
    omega2 = 2.0 * a * abs(x)
    if omega2 < 1e-12:
        return 1, 0.0
    return (1 if x > 0 else -1), omega2


def config_norm_identity(m: MassTriple, shape: MeridianShape) -> float:
    """The normalization (C^2 + S^2)/A^2 behind the shape -> configuration map.

    C and S are the mass-weighted cosine/sine sums that define cos(2 theta1)
    and sin(2 theta1); the identity evaluates to 1 for every shape with
    A > 0, which is what makes the configuration map well defined.
    """
    c, sv, a = _config_components(m, shape)
    return (c * c + sv * sv) / (a * a)


def _config_components(m: MassTriple, shape: MeridianShape):
    t2, t3 = shape.tau2, shape.tau3
    c = m.m1 + m.m2 * math.cos(2.0 * t3) + m.m3 * math.cos(2.0 * t2)
    sv = m.m2 * math.sin(2.0 * t3) - m.m3 * math.sin(2.0 * t2)
    a = big_a(m, shape)
    return c, sv, a


def configuration_from_meridian_shape(
    m: MassTriple,
    shape: MeridianShape,
    s: int,
    eps_a: float = EPS_A,
) -> SphericalConfiguration:
    """Place a meridian shape relative to the rotation axis.

    2*theta1 = atan2(s*S, s*C) with C, S the mass-weighted double-angle sums;
    theta2 = theta1 - tau3, theta3 = theta1 + tau2, all phi_k = 0.  The pair
    (C/A, S/A) lies on the unit circle by construction, which is checked.
    Raises AZeroError when A <= eps_a: the map is then not determined.
    """
    if s not in (1, -1):
        raise ValueError("s must be +1 or -1")
    c, sv, a = _config_components(m, shape)
    if a <= eps_a:
        raise AZeroError(
            "A ~ 0: the shape does not determine a configuration uniquely"
        )
    norm = math.hypot(c, sv)
    if abs(norm / a - 1.0) > 1e-9:
        raise RuntimeError("normalization identity violated; inputs are corrupted")
    theta1 = 0.5 * math.atan2(s * sv, s * c)
    theta2 = reduce_angle(theta1 - shape.tau3)
    theta3 = reduce_angle(theta1 + shape.tau2)
    return SphericalConfiguration(theta1=theta1, theta2=theta2, theta3=theta3)
