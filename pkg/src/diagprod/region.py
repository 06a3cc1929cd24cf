"""Membership oracles for the diagonal-product images.

Two independent tests for the SU(n) region: a polar comparison of |z| against
the boundary radius at arg z (the region is star-shaped about 0), and a
winding-number test against a polygonal approximation of the boundary curve.
The unitary image is the closed unit disk and the special orthogonal image is
a real interval, both handled by direct distance tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .boundary import alpha_of_theta, gamma, _radius_from_alpha, _radius_many

__all__ = [
    "Membership",
    "MembershipVerdict",
    "su_region_contains",
    "su_region_contains_winding",
    "u_region_contains",
    "so_interval",
]


class Membership(Enum):
    INSIDE = "Inside"
    ON_BOUNDARY = "OnBoundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class MembershipVerdict:
    """Three-way region verdict with a signed margin (positive = inside).

    For the polar test the margin is r(theta) - |z|; for the winding test it
    is the distance to the boundary polyline signed by the winding number; for
    the degenerate images (n = 1 point, n = 2 segment) it is tol - distance.
    """

    status: Membership
    signed_margin: float


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    return tol


def _segment_distance(z: complex) -> float:
    """Distance from z to the real segment [0, 1]."""
    x = min(max(z.real, 0.0), 1.0)
    return math.hypot(z.real - x, z.imag)


def su_region_contains(n: int, z, tol: float = 1e-9) -> MembershipVerdict:
    """Classify z against the diagonal-product image of SU(n).

    n = 1: the image is the single point 1 (Inside iff within tol).
    n = 2: the image is the real segment [0, 1] (its own boundary).
    n >= 3: polar star-shaped test, |z| versus the boundary radius at arg z.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_tol(tol)
    z = complex(z)
    if n == 1:
        d = abs(z - 1.0)
        status = Membership.INSIDE if d <= tol else Membership.OUTSIDE
        return MembershipVerdict(status, tol - d)
    if n == 2:
        d = _segment_distance(z)
        status = Membership.ON_BOUNDARY if d <= tol else Membership.OUTSIDE
        return MembershipVerdict(status, tol - d)
    mod = abs(z)
    theta = 0.0 if mod <= tol else math.atan2(z.imag, z.real)
    radius = float(_radius_from_alpha(n, alpha_of_theta(n, theta)))
    margin = radius - mod
    if margin > tol:
        status = Membership.INSIDE
    elif margin < -tol:
        status = Membership.OUTSIDE
    else:
        status = Membership.ON_BOUNDARY
    return MembershipVerdict(status, margin)


@lru_cache(maxsize=32)
def _boundary_polyline(n: int, samples: int) -> np.ndarray:
    alphas = np.linspace(-np.pi, np.pi, samples, endpoint=False)
    pts = gamma(n, alphas)
    pts.flags.writeable = False
    return pts


def su_region_contains_winding(
    n: int, z, samples: int = 8192, tol: float = 1e-9
) -> MembershipVerdict:
    """Independent SU(n) membership oracle via the winding number of a
    polygonal boundary approximation around z.

    Points within ``tol`` of the polyline (including its vertices) classify as
    OnBoundary; otherwise Inside iff the winding number is nonzero.
    """
    if n < 3:
        raise ValueError("the winding oracle needs n >= 3")
    if samples < 1024:
        raise ValueError("samples must be at least 1024")
    _check_tol(tol)
    z = complex(z)
    pts = _boundary_polyline(n, int(samples))
    nxt = np.roll(pts, -1)
    seg = nxt - pts
    rel = z - pts
    seg2 = seg.real**2 + seg.imag**2
    t = np.clip((rel.real * seg.real + rel.imag * seg.imag) / seg2, 0.0, 1.0)
    proj = pts + t * seg
    dist = float(np.abs(z - proj).min())
    if dist <= tol:
        return MembershipVerdict(Membership.ON_BOUNDARY, dist)
    ratio = (nxt - z) / (pts - z)
    total = float(np.angle(ratio).sum())
    winding = int(round(total / (2.0 * math.pi)))
    if winding != 0:
        return MembershipVerdict(Membership.INSIDE, dist)
    return MembershipVerdict(Membership.OUTSIDE, -dist)


def u_region_contains(n: int, z, tol: float = 1e-9) -> MembershipVerdict:
    """Classify z against the diagonal-product image of U(n): the closed unit
    disk for every n >= 2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_tol(tol)
    margin = 1.0 - abs(complex(z))
    if margin > tol:
        status = Membership.INSIDE
    elif margin < -tol:
        status = Membership.OUTSIDE
    else:
        status = Membership.ON_BOUNDARY
    return MembershipVerdict(status, margin)


def so_interval(n: int) -> tuple[float, float]:
    """Endpoints of the diagonal-product image of SO(n): [-(1-2/n)^n, 1].

    The formula degenerates gracefully: n = 1 gives (1, 1) and n = 2 gives
    (0, 1).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    lo = -((1.0 - 2.0 / n) ** n) + 0.0
    return (lo, 1.0)


def _winding_codes_many(
    n: int, zs: np.ndarray, samples: int = 8192, tol: float = 1e-9, block: int = 512
):
    """Vectorized form of :func:`su_region_contains_winding` over points.

    Returns (codes, margins) with the same conventions as the scalar oracle;
    points are processed in blocks to bound memory.  The winding number is
    counted through signed horizontal-ray crossings (multiplication-only, and
    exactly the integer the scalar oracle's angle accumulation rounds to for
    points off the polyline).
    """
    if n < 3:
        raise ValueError("the winding oracle needs n >= 3")
    zs = np.asarray(zs, np.complex128).reshape(-1)
    pts = _boundary_polyline(n, int(samples))
    nxt = np.roll(pts, -1)
    px, py = pts.real[None, :], pts.imag[None, :]
    sx, sy = (nxt - pts).real[None, :], (nxt - pts).imag[None, :]
    inv_seg2 = 1.0 / (sx**2 + sy**2)
    codes = np.empty(len(zs), np.int8)
    margins = np.empty(len(zs))
    for start in range(0, len(zs), block):
        zx = zs[start : start + block].real[:, None]
        zy = zs[start : start + block].imag[:, None]
        dx = zx - px
        dy = zy - py
        # signed horizontal-ray crossings: an upward edge with z strictly to
        # its left adds one turn, a downward edge with z strictly to its
        # right removes one
        is_left = sx * dy
        is_left -= sy * dx
        up = (dy >= 0.0) & (sy > dy) & (is_left > 0.0)
        down = (dy < 0.0) & (sy <= dy) & (is_left < 0.0)
        winding = up.sum(axis=1) - down.sum(axis=1)
        # nearest-segment distance, reusing the offset buffers
        t = dx * sx
        t += dy * sy
        t *= inv_seg2
        np.clip(t, 0.0, 1.0, out=t)
        dx -= t * sx
        dy -= t * sy
        dx *= dx
        dy *= dy
        dx += dy
        dist = np.sqrt(dx.min(axis=1))
        on_edge = dist <= tol
        inside = (winding != 0) & ~on_edge
        codes[start : start + block] = np.where(on_edge, 0, np.where(inside, 1, -1))
        margins[start : start + block] = np.where(
            on_edge, dist, np.where(inside, dist, -dist)
        )
    return codes, margins


def _classify_su_many(n: int, zs: np.ndarray, tol: float):
    """Vectorized form of :func:`su_region_contains` over an array of points.

    Returns (codes, margins) with codes +1 Inside, 0 OnBoundary, -1 Outside.
    """
    zs = np.asarray(zs, np.complex128)
    if n == 1:
        d = np.abs(zs - 1.0)
        margins = tol - d
        codes = np.where(d <= tol, 1, -1).astype(np.int8)
        return codes, margins
    if n == 2:
        x = np.clip(zs.real, 0.0, 1.0)
        d = np.hypot(zs.real - x, zs.imag)
        margins = tol - d
        codes = np.where(d <= tol, 0, -1).astype(np.int8)
        return codes, margins
    mod = np.abs(zs)
    theta = np.where(mod <= tol, 0.0, np.angle(zs))
    margins = _radius_many(n, theta) - mod
    codes = np.where(margins > tol, 1, np.where(margins < -tol, -1, 0)).astype(np.int8)
    return codes, margins
