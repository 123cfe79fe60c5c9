"""
Collision geometry: sigma-representation, local sigma frames and the xi+ Jacobian.
"""

from __future__ import annotations

import math

import numpy as np

from boltzmann_smoothing.kernel_ttc.tools.cross_section_tools import HALF_PI, AngularRule

_UNIT_TOLERANCE = 1e-12


def collision_geometry(
    v: np.ndarray, v_star: np.ndarray, sigma: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """
    Post-collisional velocities.

    v' = (v + v*)/2 + |v - v*| sigma / 2 and v'* = (v + v*)/2 - |v - v*| sigma / 2.
    Inputs broadcast over leading axes; the last axis has length 3.
    """
    v = np.asarray(v, dtype=float)
    v_star = np.asarray(v_star, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    if np.any(np.abs(np.linalg.norm(sigma, axis=-1) - 1.0) > _UNIT_TOLERANCE):
        raise ValueError("sigma must be a unit vector (|sigma| = 1 within 1e-12)")
    center = 0.5 * (v + v_star)
    half = 0.5 * np.linalg.norm(v - v_star, axis=-1, keepdims=True) * sigma
    return center + half, center - half


def jacobian_xi_plus(theta: float) -> float:
    """Jacobian of xi -> xi+ at deviation angle theta: cos^2(theta/2)/4, within [1/8, 1/4]."""
    if not 0.0 <= theta <= HALF_PI + 1e-15:
        raise ValueError(f"theta must lie in [0, pi/2], got {theta}")
    return math.cos(0.5 * theta) ** 2 / 4.0


def local_frames(direction: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Orthonormal frames (e1, e2, k) about each direction, shape (..., 3) each.

    The helper axis is e_z unless |k_z| > 0.9, then e_x; so the frame of -k is (-e1, e2, -k).
    Zero directions get the e_z frame.
    """
    d = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(d, axis=-1, keepdims=True)
    k = np.where(norm > 0.0, d / np.where(norm > 0.0, norm, 1.0), np.array([0.0, 0.0, 1.0]))
    helper = np.where(
        np.abs(k[..., 2:3]) > 0.9, np.array([1.0, 0.0, 0.0]), np.array([0.0, 0.0, 1.0])
    )
    e1 = np.cross(helper, k)
    e1 /= np.linalg.norm(e1, axis=-1, keepdims=True)
    e2 = np.cross(k, e1)
    return e1, e2, k


def sigma_nodes(direction: np.ndarray, rule: AngularRule) -> np.ndarray:
    """
    sigma(k, theta, phi) = cos(theta) k + sin(theta) (cos(phi) e1 + sin(phi) e2).

    Returns shape (..., S, 3) over the flattened nodes of ``rule``.
    """
    e1, e2, k = local_frames(direction)
    theta, phi, _ = rule.flat_nodes
    ct, st = np.cos(theta)[:, None], np.sin(theta)[:, None]
    cp, sp = np.cos(phi)[:, None], np.sin(phi)[:, None]
    return (
        ct * k[..., None, :]
        + st * cp * e1[..., None, :]
        + st * sp * e2[..., None, :]
    )


def xi_minus(xi: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """xi- = (xi - |xi| sigma) / 2; ``sigma`` has shape (..., S, 3) matching ``xi`` (..., 3)."""
    xi = np.asarray(xi, dtype=float)
    norm = np.linalg.norm(xi, axis=-1, keepdims=True)
    return 0.5 * (xi[..., None, :] - norm[..., None, :] * sigma)
