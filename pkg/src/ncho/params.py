"""Physical parameters and the Bopp-shift map to an equivalent commutative model.

A two-dimensional anisotropic oscillator on a noncommutative phase space,

    [X1, X2] = i theta,   [P1, P2] = i eta,   [Xi, Pj] = i hbar_e delta_ij,

with hbar_e = (1 + theta eta / 4 hbar^2) hbar, can be rewritten in terms of
canonical operators (x1, p1, x2, p2) through a linear Bopp shift

    X_i = x_i - (theta / 2 hbar) eps_ij p_j,
    P_i = p_i + (eta   / 2 hbar) eps_ij x_j.

Under that substitution the oscillator Hamiltonian

    H = P1^2/2m1 + P2^2/2m2 + m1 wt1^2 X1^2 / 2 + m2 wt2^2 X2^2 / 2

becomes a commutative two-mode Hamiltonian with effective masses mu_i,
frequencies w_i and a bilinear coupling (nu1, nu2):

    H = p1^2/2mu1 + p2^2/2mu2 + mu1 w1^2 x1^2 / 2 + mu2 w2^2 x2^2 / 2
        + 2 nu1 x2 p1 - 2 nu2 x1 p2.

This module holds the two parameter records and the map between them.
Everything downstream (spectrum, ground state, separability, Wigner
function) is computed from the commutative side.

Lengths are measured in units of the oscillator scale, so hbar defaults
to 1 and all six physical inputs are plain numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NegativeDeformation, NonPositiveParameter


@dataclass(frozen=True)
class PhysicalParams:
    """Inputs of the noncommutative oscillator.

    m1, m2     : masses (> 0)
    wt1, wt2   : oscillator frequencies in the noncommutative variables (> 0)
    theta      : position-position deformation (>= 0)
    eta        : momentum-momentum deformation (>= 0)
    hbar       : Planck constant (> 0), default 1
    """

    m1: float
    m2: float
    wt1: float
    wt2: float
    theta: float
    eta: float
    hbar: float = 1.0


@dataclass(frozen=True)
class CommutativeParams:
    """Effective commutative-model parameters produced by the Bopp shift.

    mu1, mu2 : effective masses
    w1, w2   : effective frequencies
    nu1, nu2 : coefficients of the x2 p1 and x1 p2 couplings (each enters
               the Hamiltonian with a factor 2, see module docstring)
    """

    mu1: float
    mu2: float
    w1: float
    w2: float
    nu1: float
    nu2: float


def validate(p: PhysicalParams) -> PhysicalParams:
    """Check positivity constraints, returning p unchanged if they hold.

    Raises NonPositiveParameter for m1, m2, wt1, wt2 or hbar <= 0 and
    NegativeDeformation for theta or eta < 0.  Values that are not finite
    fail the same checks.
    """
    for field in ("m1", "m2", "wt1", "wt2", "hbar"):
        v = float(getattr(p, field))
        if not np.isfinite(v) or v <= 0.0:
            raise NonPositiveParameter(field, getattr(p, field))
    for field in ("theta", "eta"):
        v = float(getattr(p, field))
        if not np.isfinite(v) or v < 0.0:
            raise NegativeDeformation(field, getattr(p, field))
    return p


def effective_planck(p: PhysicalParams) -> float:
    """Deformed Planck constant hbar_e = (1 + theta*eta/(4 hbar^2)) * hbar."""
    validate(p)
    return (1.0 + p.theta * p.eta / (4.0 * p.hbar**2)) * p.hbar


def bopp_matrix(p: PhysicalParams) -> np.ndarray:
    """Matrix T of the Bopp shift in the ordering (x1, p1, x2, p2).

    (X1, P1, X2, P2)^T = T (x1, p1, x2, p2)^T.  T is the identity when
    theta = eta = 0.  The noncommutative brackets are reproduced through

        hbar * T K T^T  with  K = [x_a, x_b] / i  of the canonical side,

    which is the content of test_params.test_bopp_commutators.
    """
    validate(p)
    a = p.theta / (2.0 * p.hbar)
    b = p.eta / (2.0 * p.hbar)
    return np.array(
        [
            [1.0, 0.0, 0.0, -a],
            [0.0, 1.0, b, 0.0],
            [0.0, a, 1.0, 0.0],
            [-b, 0.0, 0.0, 1.0],
        ]
    )


def to_commutative(p: PhysicalParams) -> CommutativeParams:
    """Map physical inputs to the effective commutative parameters.

    Substituting the Bopp shift into the oscillator Hamiltonian and
    collecting terms gives

        1/mu1 = 1/m1 + m2 wt2^2 theta^2 / 4 hbar^2
        1/mu2 = 1/m2 + m1 wt1^2 theta^2 / 4 hbar^2
        mu1 w1^2 = m1 wt1^2 + eta^2 / (4 hbar^2 m2)
        mu2 w2^2 = m2 wt2^2 + eta^2 / (4 hbar^2 m1)
        nu1 = (eta + m1 m2 wt2^2 theta) / (4 m1 hbar)
        nu2 = (eta + m1 m2 wt1^2 theta) / (4 m2 hbar)

    At theta = eta = 0 this is the identity map.
    """
    validate(p)
    h2 = 4.0 * p.hbar**2
    inv_mu1 = 1.0 / p.m1 + p.m2 * p.wt2**2 * p.theta**2 / h2
    inv_mu2 = 1.0 / p.m2 + p.m1 * p.wt1**2 * p.theta**2 / h2
    mu1 = 1.0 / inv_mu1
    mu2 = 1.0 / inv_mu2
    k1 = p.m1 * p.wt1**2 + p.eta**2 / (h2 * p.m2)
    k2 = p.m2 * p.wt2**2 + p.eta**2 / (h2 * p.m1)
    w1 = np.sqrt(k1 / mu1)
    w2 = np.sqrt(k2 / mu2)
    nu1 = (p.eta + p.m1 * p.m2 * p.wt2**2 * p.theta) / (4.0 * p.m1 * p.hbar)
    nu2 = (p.eta + p.m1 * p.m2 * p.wt1**2 * p.theta) / (4.0 * p.m2 * p.hbar)
    return CommutativeParams(mu1=mu1, mu2=mu2, w1=w1, w2=w2, nu1=nu1, nu2=nu2)
