"""Finite Blaschke products and the boundary root structure of z*phi(z) = 1.

A degree-m product maps the disk to itself and the circle to the circle;
z*phi(z) then winds m+1 times around the circle with strictly increasing
phase, so z*phi(z) = 1 has exactly m+1 simple roots there.  Those roots and
their partial-fraction residues are what the disk-family correspondence
consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexfn import TWO_PI, ConvergenceError, DomainError, _require_finite

_BOUNDARY_MARGIN = 1e-12  # zeros closer than this to the circle are rejected


@dataclass(frozen=True)
class BlaschkeProduct:
    """prefactor * prod_k (z - b_k) / (1 - conj(b_k) z), all |b_k| < 1.

    The prefactor must be unimodular (within 1e-12; it is renormalized to
    exact unit modulus).  Zeros within 1e-12 of the circle are rejected:
    the roots of z*phi(z) = 1 collide with poles in that limit and the
    residues degenerate.
    """

    zeros: np.ndarray
    prefactor: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        zeros = np.atleast_1d(np.asarray(self.zeros, dtype=complex))
        _require_finite("zeros", zeros)
        if zeros.size and np.max(np.abs(zeros)) >= 1.0 - _BOUNDARY_MARGIN:
            raise ValueError("every zero must satisfy |b| < 1 - 1e-12")
        pre = complex(self.prefactor)
        _require_finite("prefactor", pre)
        if abs(abs(pre) - 1.0) > 1e-12:
            raise ValueError("prefactor must be unimodular within 1e-12")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "prefactor", pre / abs(pre))

    @property
    def degree(self) -> int:
        return int(self.zeros.size)

    def __call__(self, z):
        """Evaluate the product for |z| <= 1 + 1e-9 (poles raise DomainError)."""
        z = np.asarray(z, dtype=complex)
        _require_finite("z", z)
        if np.any(np.abs(z) > 1.0 + 1e-9):
            raise DomainError("evaluation is restricted to |z| <= 1 + 1e-9")
        out = np.full(z.shape, self.prefactor, dtype=complex)
        for b in self.zeros:
            denom = 1.0 - np.conj(b) * z
            if np.any(np.abs(denom) < 1e-12):
                raise DomainError("z coincides with a pole 1/conj(b)")
            out = out * (z - b) / denom
        return out[()] if out.ndim == 0 else out

    def log_derivative(self, z):
        """phi'(z)/phi(z) = sum_k 1/(z - b_k) + conj(b_k)/(1 - conj(b_k) z)."""
        z = np.asarray(z, dtype=complex)
        _require_finite("z", z)
        out = np.zeros(z.shape, dtype=complex)
        for b in self.zeros:
            num, denom = z - b, 1.0 - np.conj(b) * z
            if np.any(np.abs(num) < 1e-12) or np.any(np.abs(denom) < 1e-12):
                raise DomainError("log_derivative undefined at zeros and poles")
            out = out + 1.0 / num + np.conj(b) / denom
        return out[()] if out.ndim == 0 else out

    def boundary_speed(self, theta):
        """d/dtheta of arg(phi(e^(i theta))) = sum_k (1-|b_k|^2)/|e^(i theta)-b_k|^2.

        Real and strictly positive for degree >= 1; this is also
        Re(z phi'(z)/phi(z)) on the circle.
        """
        z = np.exp(1j * np.asarray(theta, dtype=float))
        out = np.zeros(z.shape, dtype=float)
        for b in self.zeros:
            out = out + (1.0 - abs(b) ** 2) / np.abs(z - b) ** 2
        return out[()] if out.ndim == 0 else out

    def taylor_coefficients(self, n_max: int) -> np.ndarray:
        """c_0..c_n_max of the Maclaurin series, by exact factor convolution.

        Each factor expands as -b + (1-|b|^2) sum_{k>=1} conj(b)^(k-1) z^k;
        convolving the truncated factor series is exact to roundoff, unlike
        circle quadrature which would need a radius near 1 for high orders.
        """
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        coeffs = np.zeros(n_max + 1, dtype=complex)
        coeffs[0] = self.prefactor
        for b in self.zeros:
            factor = np.zeros(n_max + 1, dtype=complex)
            factor[0] = -b
            if n_max >= 1:
                factor[1:] = (1.0 - abs(b) ** 2) * np.conj(b) ** np.arange(n_max)
            coeffs = np.convolve(coeffs, factor)[: n_max + 1]
        return coeffs

    def rotated(self, theta: float) -> "BlaschkeProduct":
        """The product induced by the rotation z -> e^(i theta) z.

        phi_theta(z) = e^(i theta) phi(e^(i theta) z): zeros rotate to
        b_k e^(-i theta) and the prefactor picks up e^(i (m+1) theta).
        """
        rot = np.exp(1j * theta)
        return BlaschkeProduct(zeros=self.zeros / rot,
                               prefactor=self.prefactor * rot ** (self.degree + 1))


def normalized_prefactor(phi: BlaschkeProduct) -> tuple[BlaschkeProduct, float]:
    """Rotate so the prefactor becomes 1; returns (rotated product, angle used)."""
    theta = -np.angle(phi.prefactor) / (phi.degree + 1)
    return phi.rotated(theta), float(theta)


@dataclass(frozen=True)
class BoundaryRootSet:
    """The m+1 roots of z*phi(z) = 1 on the circle with their residues.

    Residues t_k = 1/(1 + z_k phi'(z_k)/phi(z_k)) are the partial-fraction
    weights of phi/(z phi - 1); each lies in (0, 1) and they sum to 1.
    """

    roots: np.ndarray
    residues: np.ndarray

    def __post_init__(self) -> None:
        roots = np.asarray(self.roots, dtype=complex)
        residues = np.asarray(self.residues, dtype=float)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "residues", residues)
        if roots.shape != residues.shape or roots.ndim != 1 or roots.size == 0:
            raise ValueError("roots and residues must be matching 1-d arrays")
        _require_finite("roots", roots)
        _require_finite("residues", residues)
        if np.any(np.abs(np.abs(roots) - 1.0) > 1e-9):
            raise ValueError("roots must be unimodular")
        ang = np.sort(np.angle(roots) % TWO_PI)
        gaps = np.diff(np.concatenate([ang, [ang[0] + TWO_PI]]))
        if roots.size > 1 and np.min(gaps) <= 1e-9:
            raise ValueError("roots must be pairwise distinct (separation > 1e-9)")
        # degree-0 products have the single residue exactly 1
        if np.any(residues <= 1e-12) or np.any(residues > 1.0):
            raise ValueError("residues must lie in (0, 1]")
        if abs(residues.sum() - 1.0) > 1e-10:
            raise ValueError("residues must sum to 1 within 1e-10")


def phase_function(phi: BlaschkeProduct, theta: float) -> float:
    """Continuous lift of arg(e^(i t) phi(e^(i t))) from 0 to theta.

    Normalized so phase(0) is the principal argument at t = 0; strictly
    increasing in theta with phase(2 pi) - phase(0) = 2 pi (degree + 1).
    """
    theta = float(theta)
    if theta == 0.0:
        return float(np.angle(phi(1.0 + 0.0j)))
    speed_cap = 1.0 + _speed_cap(phi)
    steps = max(8, int(math.ceil(abs(theta) * speed_cap / 1.0)))
    if steps > 1 << 22:
        raise ConvergenceError("zeros too close to the unit circle for "
                               "phase lifting")
    ts = np.linspace(0.0, theta, steps + 1)
    vals = np.exp(1j * ts) * phi(np.exp(1j * ts))
    lift = float(np.angle(vals[0]))
    lift += float(np.sum(np.angle(vals[1:] / vals[:-1])))
    return lift


def _speed_cap(phi: BlaschkeProduct) -> float:
    """Upper bound for sum_k (1-|b_k|^2)/|z - b_k|^2 on the circle."""
    if phi.degree == 0:
        return 0.0
    mod = np.abs(phi.zeros)
    return float(np.sum((1.0 + mod) / (1.0 - mod)))


def boundary_roots(phi: BlaschkeProduct) -> BoundaryRootSet:
    """Solve z*phi(z) = 1 on the circle and extract residues.

    The lifted phase of B(z) = z*phi(z) increases strictly by
    2 pi (m+1) over a full turn, so the roots are the crossings of the
    lift through multiples of 2 pi.  Each crossing is bracketed on a
    sampled lift table (increments kept below 0.5 rad) and polished with
    safeguarded Newton steps on the local principal-branch residual.
    """
    m = phi.degree
    speed_cap = 1.0 + _speed_cap(phi)
    n_nodes = max(64, int(math.ceil(TWO_PI * speed_cap / 0.5)))
    if n_nodes > 1 << 20:
        raise ConvergenceError("zeros too close to the unit circle for "
                               "boundary root solving")
    pad = max(2, n_nodes // 128)
    idx = np.arange(-pad, n_nodes + pad + 1)
    ts = TWO_PI * idx / n_nodes
    vals = np.exp(1j * ts) * phi(np.exp(1j * ts))
    incs = np.angle(vals[1:] / vals[:-1])
    if np.any(np.abs(incs) >= 0.5 * math.pi):
        raise ConvergenceError("phase increments too large; zeros too close to the circle")
    base = float(np.angle(vals[pad]))  # lift anchored at t = 0
    lift = base + np.concatenate([[0.0], np.cumsum(incs)]) \
        - float(np.sum(incs[:pad]))
    total = lift[pad + n_nodes] - lift[pad]
    if abs(total - TWO_PI * (m + 1)) > 1e-6:
        raise ConvergenceError("boundary phase did not wind degree+1 times")

    def residual(t: float, level: float) -> float:
        # valid while the true lift is within pi of level
        v = np.exp(1j * t) * phi(np.exp(1j * t))
        return float(np.angle(v * np.exp(-1j * level)))

    def speed(t: float) -> float:
        return 1.0 + float(phi.boundary_speed(t))

    angles = []
    floors = np.floor(lift / TWO_PI + 1e-13)
    for i in np.nonzero(np.diff(floors) > 0)[0]:
        level = TWO_PI * floors[i + 1]
        # residual is <= 0 at lo and >= 0 at hi; increments < pi/2 keep the
        # principal-branch residual equal to lift - level on the bracket
        lo, hi = float(ts[i]), float(ts[i + 1])
        t = 0.5 * (lo + hi)
        for _ in range(80):
            g = residual(t, level)
            if g < 0.0:
                lo = t
            else:
                hi = t
            t_new = t - g / speed(t)
            if not lo <= t_new <= hi:
                t_new = 0.5 * (lo + hi)  # safeguarded bisection step
            if abs(t_new - t) < 1e-15 or abs(g) < 1e-14:
                t = t_new
                break
            t = t_new
        angles.append(t % TWO_PI)

    angles = np.sort(np.asarray(angles))
    # padding can duplicate roots near the 0 / 2 pi seam
    if angles.size:
        keep = [0]
        for j in range(1, angles.size):
            if angles[j] - angles[keep[-1]] > 1e-7:
                keep.append(j)
        if len(keep) > 1 and (angles[keep[0]] + TWO_PI) - angles[keep[-1]] <= 1e-7:
            keep.pop()
        angles = angles[keep]
    if angles.size != m + 1:
        raise ConvergenceError(
            f"expected {m + 1} boundary roots, located {angles.size}")

    roots = np.exp(1j * angles)
    residues = 1.0 / (1.0 + phi.boundary_speed(angles))
    return BoundaryRootSet(roots=roots, residues=residues)
