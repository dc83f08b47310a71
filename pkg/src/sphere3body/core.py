"""Domain types and angle arithmetic for the three-body problem on the unit sphere.

Positions live on S^2 in spherical coordinates (theta, phi) with
q = (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)).  For work on a
rotating meridian the polar angle is extended to (-pi, pi].  The mutual arc
sigma_ij between two bodies is always kept strictly inside (0, pi): the
cotangent pair potential is singular at coincident (sigma=0) and antipodal
(sigma=pi) positions.

Meridian shapes are described by the two relative arcs (tau1, tau2) with
tau1 = theta2 - theta3, tau2 = theta3 - theta1 and the derived
tau3 = theta1 - theta2 = -(tau1 + tau2).  The physical shape space is

    U_phys = { (tau1, tau2) : tau1 in (-pi, pi), tau2 in (0, pi),
               sin(tau1) sin(tau2) sin(tau1 + tau2) != 0 }.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

# Exclusion radius (radians) around the zeros of sin(.) when testing shape
# space membership numerically; keeps floating-point dust near the potential
# poles from being accepted as a valid shape.
EPS_SING = 1e-9

# Below this, the meridian norm A counts as zero: the spin condition and the
# shape -> configuration map degenerate and the A=0 machinery applies.
EPS_A = 1e-10


class SingularConfigurationError(ValueError):
    """A pair of bodies is coincident or antipodal (mutual arc outside (0, pi))."""


class AZeroError(ValueError):
    """A ~ 0: the generic spin and configuration formulas do not apply."""


class NoSpinSolutionError(ValueError):
    """No angular speed makes the given geometry a relative equilibrium."""


class DegenerateSaddleError(ValueError):
    """Equal masses: three curve branches cross the equilateral point, not two."""


def reduce_angle(x):
    """Reduce an angle (scalar or array) to the representative in (-pi, pi]."""
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("angle must be finite")
    out = np.pi - np.remainder(np.pi - arr, TWO_PI)
    if out.ndim == 0:
        return float(out)
    return out


def in_uphys(tau1: float, tau2: float, eps: float = EPS_SING) -> bool:
    """Membership test for the meridian shape space U_phys.

    True iff tau1 in (-pi, pi), tau2 in (0, pi) and none of sin(tau1),
    sin(tau2), sin(tau1+tau2) vanishes within the exclusion radius ``eps``.
    """
    if not (np.isfinite(tau1) and np.isfinite(tau2)):
        return False
    if not (-np.pi < tau1 < np.pi and 0.0 < tau2 < np.pi):
        return False
    sines = (math.sin(tau1), math.sin(tau2), math.sin(tau1 + tau2))
    return all(abs(s) >= eps for s in sines)


@dataclass(frozen=True)
class MassTriple:
    """Three positive masses in scale-free units."""

    m1: float
    m2: float
    m3: float

    def __post_init__(self):
        for name in ("m1", "m2", "m3"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.m1, self.m2, self.m3], dtype=float)

    @property
    def total(self) -> float:
        return self.m1 + self.m2 + self.m3


@dataclass(frozen=True)
class MeridianShape:
    """A meridian shape: the pair of relative arcs (tau1, tau2).

    On construction both angles are reduced to (-pi, pi] and, when tau2 < 0,
    the whole meridian is rotated by pi (tau_k -> -tau_k), which brings tau2
    into (0, pi) without changing the shape.  Construction fails outside
    U_phys.
    """

    tau1: float
    tau2: float

    def __post_init__(self):
        t1 = reduce_angle(self.tau1)
        t2 = reduce_angle(self.tau2)
        if t2 < 0.0:
            t1, t2 = reduce_angle(-t1), -t2
        object.__setattr__(self, "tau1", t1)
        object.__setattr__(self, "tau2", t2)
        if not in_uphys(t1, t2):
            raise ValueError(f"({t1}, {t2}) is not in U_phys")

    @property
    def tau3(self) -> float:
        return reduce_angle(-(self.tau1 + self.tau2))

    def taus(self) -> np.ndarray:
        return np.array([self.tau1, self.tau2, self.tau3], dtype=float)

    def close_to(self, other: "MeridianShape", tol: float = 1e-9) -> bool:
        return (
            abs(self.tau1 - other.tau1) <= tol and abs(self.tau2 - other.tau2) <= tol
        )


def tau3(shape: MeridianShape) -> float:
    """Third relative arc tau3 = -(tau1 + tau2), reduced to (-pi, pi]."""
    return shape.tau3


@dataclass(frozen=True)
class GeneralShape:
    """Unordered mutual-arc data {sigma12, sigma23, sigma31}, each in (0, pi)."""

    sigma12: float
    sigma23: float
    sigma31: float

    def __post_init__(self):
        for name in ("sigma12", "sigma23", "sigma31"):
            v = getattr(self, name)
            if not (np.isfinite(v) and 0.0 < v < np.pi):
                raise ValueError(f"{name} must lie strictly inside (0, pi), got {v!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.sigma12, self.sigma23, self.sigma31], dtype=float)

    def is_realizable(self, tol: float = 1e-12) -> bool:
        """Whether three points on S^2 can realize these arcs.

        Spherical triangle inequalities, equality permitted (collinear
        shapes are legitimate).  Checked on demand rather than at
        construction time.
        """
        s = self.as_array()
        for k in range(3):
            sk = s[k]
            si, sj = s[(k + 1) % 3], s[(k + 2) % 3]
            lo = abs(si - sj) - tol
            hi = min(si + sj, TWO_PI - si - sj) + tol
            if not (lo <= sk <= hi):
                return False
        return True


def _cos_arc(theta_i, theta_j, dphi):
    return math.cos(theta_i) * math.cos(theta_j) + math.sin(theta_i) * math.sin(
        theta_j
    ) * math.cos(dphi)


@dataclass(frozen=True)
class SphericalConfiguration:
    """Placement of the three bodies: polar angles theta_k and azimuths phi_k.

    theta may take values in (-pi, pi] (extended range used for meridian
    configurations).  Any pair whose induced arc leaves (0, pi) is rejected.
    """

    theta1: float
    theta2: float
    theta3: float
    phi1: float = 0.0
    phi2: float = 0.0
    phi3: float = 0.0

    def __post_init__(self):
        vals = [getattr(self, n) for n in
                ("theta1", "theta2", "theta3", "phi1", "phi2", "phi3")]
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("all angles must be finite")
        th = self.thetas()
        ph = self.phis()
        for i in range(3):
            for j in range(i + 1, 3):
                c = _cos_arc(th[i], th[j], ph[i] - ph[j])
                if abs(c) >= 1.0 - 1e-15:
                    raise SingularConfigurationError(
                        f"bodies {i + 1} and {j + 1} are coincident or antipodal"
                    )

    def thetas(self) -> np.ndarray:
        return np.array([self.theta1, self.theta2, self.theta3], dtype=float)

    def phis(self) -> np.ndarray:
        return np.array([self.phi1, self.phi2, self.phi3], dtype=float)


def shape_from_config(config: SphericalConfiguration) -> GeneralShape:
    """Mutual arcs of a configuration, sigma_ij = arccos(q_i . q_j)."""
    th = config.thetas()
    ph = config.phis()
    sig = {}
    for i, j in ((0, 1), (1, 2), (2, 0)):
        c = _cos_arc(th[i], th[j], ph[i] - ph[j])
        c = min(1.0, max(-1.0, c))
        sigma = math.acos(c)
        if sigma <= EPS_SING or sigma >= np.pi - EPS_SING:
            raise SingularConfigurationError(
                f"bodies {i + 1} and {j + 1} are coincident or antipodal"
            )
        sig[(i, j)] = sigma
    return GeneralShape(sigma12=sig[(0, 1)], sigma23=sig[(1, 2)], sigma31=sig[(2, 0)])


@dataclass(frozen=True)
class ReSolution:
    """A relative-equilibrium candidate: configuration, sign s and squared speed.

    The rotation axis is the polar axis by construction.  omega2 = 0 means a
    true equilibrium (every right-hand side of the equations of motion
    vanishes).
    """

    config: SphericalConfiguration
    s: int
    omega2: float

    def __post_init__(self):
        if self.s not in (1, -1):
            raise ValueError("s must be +1 or -1")
        if not (np.isfinite(self.omega2) and self.omega2 >= 0.0):
            raise ValueError("omega2 must be finite and nonnegative")

    @property
    def omega(self) -> float:
        return math.sqrt(self.omega2)
