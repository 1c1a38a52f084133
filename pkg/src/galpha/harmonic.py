"""Sheared harmonic mappings f = h + conj(g) with analytic part in the family.

The second part g is determined by the dilatation omega = g'/h' (with
g(0) = 0), so a map is specified by a family member plus a dilatation.
Sense-preservation requires sup |omega| < 1; the univalence criterion
implemented here is |omega(z)| <= 1 - alpha |z| (1 + |z|), which for
alpha < 1/2 guarantees the shear is injective, and in particular holds
whenever |omega| <= 1 - 2 alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .blaschke import BlaschkeProduct
from .complexfn import (TWO_PI, DiskGrid, DomainError, _require_finite,
                        default_grid)
from .family import GAlphaFunction

_SENSE_MARGIN = 1e-9
_BOUNDARY_RING_SAMPLES = 1024
_BOUNDARY_RING_RADIUS = 1.0 - 1e-4
_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))

_KINDS = ("constant", "monomial", "polynomial", "blaschke_scaled")


class InconclusiveProbeError(RuntimeError):
    """A winding target fell too close to the sampled image curve."""


@dataclass(frozen=True)
class DilatationSpec:
    """An analytic dilatation with sup |omega| <= 1 - 1e-9 over the default grid.

    Construct through the classmethods.  Validation samples the default
    grid plus a 1024-point ring at r = 1 - 1e-4, since monomial and
    Blaschke-scaled dilatations peak at the boundary.
    """

    kind: str
    scale: complex = 1.0 + 0.0j
    degree: int = 0
    poly_coefficients: np.ndarray | None = None
    blaschke: BlaschkeProduct | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}")
        _require_finite("scale", self.scale)
        object.__setattr__(self, "scale", complex(self.scale))
        if self.poly_coefficients is not None:
            coeffs = np.atleast_1d(np.asarray(self.poly_coefficients, dtype=complex))
            _require_finite("poly_coefficients", coeffs)
            object.__setattr__(self, "poly_coefficients", coeffs)
        if self.kind == "monomial" and self.degree < 1:
            raise ValueError("monomial degree must be at least 1")
        grid = default_grid()
        ring = _BOUNDARY_RING_RADIUS * np.exp(
            1j * TWO_PI * np.arange(_BOUNDARY_RING_SAMPLES) / _BOUNDARY_RING_SAMPLES)
        sup = max(float(np.max(np.abs(self(grid.points())))),
                  float(np.max(np.abs(self(ring)))))
        if sup > 1.0 - _SENSE_MARGIN:
            raise ValueError("dilatation must satisfy sup |omega| <= 1 - 1e-9 "
                             "(sense-preserving)")

    @classmethod
    def constant(cls, value: complex) -> "DilatationSpec":
        return cls(kind="constant", scale=value)

    @classmethod
    def monomial(cls, scale: complex, degree: int) -> "DilatationSpec":
        """omega(z) = scale * z^degree."""
        return cls(kind="monomial", scale=scale, degree=degree)

    @classmethod
    def polynomial(cls, coefficients) -> "DilatationSpec":
        """omega(z) = sum_j c_j z^j with the given coefficients c_0.."""
        return cls(kind="polynomial", poly_coefficients=coefficients)

    @classmethod
    def blaschke_scaled(cls, scale: complex, phi: BlaschkeProduct) -> "DilatationSpec":
        """omega(z) = scale * phi(z)."""
        return cls(kind="blaschke_scaled", scale=scale, blaschke=phi)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if self.kind == "constant":
            out = np.full(z.shape, self.scale, dtype=complex)
        elif self.kind == "monomial":
            out = self.scale * z ** self.degree
        elif self.kind == "polynomial":
            out = np.polynomial.polynomial.polyval(z, self.poly_coefficients)
            out = np.asarray(out, dtype=complex)
        else:
            out = self.scale * np.asarray(self.blaschke(z), dtype=complex)
        return out[()] if out.ndim == 0 else out

    def taylor_coefficients(self, n_max: int) -> np.ndarray:
        """Maclaurin coefficients c_0..c_n_max of the dilatation."""
        coeffs = np.zeros(n_max + 1, dtype=complex)
        if self.kind == "constant":
            coeffs[0] = self.scale
        elif self.kind == "monomial":
            if self.degree <= n_max:
                coeffs[self.degree] = self.scale
        elif self.kind == "polynomial":
            upto = min(n_max + 1, self.poly_coefficients.size)
            coeffs[:upto] = self.poly_coefficients[:upto]
        else:
            coeffs = self.scale * self.blaschke.taylor_coefficients(n_max)
        return coeffs


@dataclass(frozen=True)
class HarmonicMap:
    """f = h + conj(g), g' = omega * h', g(0) = 0, evaluated by series."""

    analytic_part: GAlphaFunction
    dilatation: DilatationSpec
    series_terms: int = 256
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.series_terms < 2:
            raise ValueError("series_terms must be at least 2")
        # J(0) = 1 - |omega(0)|^2; the dilatation invariant keeps it positive
        if self.jacobian(0.0 + 0.0j) <= 0.0:
            raise ValueError("Jacobian must be positive at the origin")

    def g_coefficients(self) -> np.ndarray:
        """Coefficients g_0..g_series_terms of g: Cauchy product of omega
        and h' coefficients, antidifferentiated (g_0 = 0)."""
        key = "g"
        if key not in self._cache:
            n = self.series_terms
            hp = self.analytic_part.hprime_coefficients(n - 1)
            om = self.dilatation.taylor_coefficients(n - 1)
            gp = np.convolve(om, hp)[:n]
            g = np.zeros(n + 1, dtype=complex)
            g[1:] = gp / np.arange(1, n + 1)
            self._cache[key] = g
        return self._cache[key]

    def g(self, z):
        """g(z) from its truncated series."""
        z = np.asarray(z, dtype=complex)
        _require_finite("z", z)
        if np.any(np.abs(z) > 1.0 - 1e-6):
            raise DomainError("series evaluation requires |z| <= 1 - 1e-6")
        out = np.polynomial.polynomial.polyval(z, self.g_coefficients())
        return out[()] if np.ndim(out) == 0 else out

    def evaluate(self, z):
        """f(z) = h(z) + conj(g(z))."""
        return self.analytic_part.h(z, self.series_terms) + np.conj(self.g(z))

    def jacobian(self, z):
        """J(z) = |h'|^2 - |g'|^2 with g' = omega h'; equals |h'|^2 (1 - |omega|^2)."""
        hp = self.analytic_part.hprime(z)
        gp = self.dilatation(z) * hp
        out = np.abs(hp) ** 2 - np.abs(gp) ** 2
        return out[()] if np.ndim(out) == 0 else out


def univalence_criterion(map_: HarmonicMap,
                         grid: DiskGrid | None = None) -> tuple[bool, float]:
    """Check |omega(z)| <= 1 - alpha |z| (1 + |z|) over a grid.

    Returns (holds, worst_margin) where worst_margin is the minimum of
    (1 - alpha |z| (1 + |z|)) - |omega(z)|; the criterion guarantees
    univalence of the shear when alpha < 1/2.
    """
    grid = grid if grid is not None else default_grid()
    z = grid.points()
    r = np.abs(z)
    alpha = map_.analytic_part.alpha
    margin = (1.0 - alpha * r * (1.0 + r)) - np.abs(map_.dilatation(z))
    worst = float(margin.min())
    return worst >= 0.0, worst


def winding_number(curve: np.ndarray, target: complex) -> float:
    """Winding of a sampled closed curve about target, in full turns.

    Sums principal-branch argument increments; accurate when consecutive
    samples subtend less than pi about the target.
    """
    rel = curve - target
    closed = np.concatenate([rel, rel[:1]])
    return float(np.sum(np.angle(closed[1:] / closed[:-1])) / TWO_PI)


def winding_injectivity_probe(map_, radius: float, targets: int = 20,
                              curve_samples: int = 4096) -> bool:
    """Heuristic injectivity check via winding numbers of an image circle.

    Samples w = f(rho e^(i phi)) at deterministic interior points with
    rho < 0.8 * radius and verifies the image of |z| = radius winds exactly
    once about each.  map_ may be a HarmonicMap or any callable on complex
    arrays.  Raises InconclusiveProbeError when a target comes within 1e-6
    of the sampled curve.
    """
    if not 0.0 < radius < 1.0:
        raise ValueError("radius must lie in (0, 1)")
    if targets < 1:
        raise ValueError("targets must be positive")
    evaluate = map_.evaluate if isinstance(map_, HarmonicMap) else map_
    theta = TWO_PI * np.arange(curve_samples) / curve_samples
    curve = np.asarray(evaluate(radius * np.exp(1j * theta)))

    idx = np.arange(targets)
    rho = 0.8 * radius * (idx + 1.0) / (targets + 1.0)
    phi = np.mod(_GOLDEN_ANGLE * idx, TWO_PI)
    points = np.asarray(evaluate(rho * np.exp(1j * phi)))

    for w in np.atleast_1d(points):
        if np.min(np.abs(curve - w)) < 1e-6:
            raise InconclusiveProbeError("target within 1e-6 of the image curve")
        turns = winding_number(curve, complex(w))
        if abs(turns - round(turns)) > 0.1 or round(turns) != 1:
            return False
    return True
