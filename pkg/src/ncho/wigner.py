"""Wigner distribution of the Gaussian ground state.

For the correlated Gaussian ground state the phase-space distribution

    W(Z) = (1/pi^2) integral d^2t  psi*(x - t) e^{-2 i (t1 p1 + t2 p2)}
           psi(x + t),       Z = (x1, p1, x2, p2),

is again a Gaussian, W(Z) = N exp(-Z^T M Z).  The exponent matrix pairs
each position with the momentum of the *other* mode:

    x1 <-> p2 and x2 <-> p1 enter through the cross moments,

    M = 2 [[ <p1^2>,    0,       0,     -<p1 x2> ],
           [   0,     <x1^2>, -<x1 p2>,    0     ],   (crossed pairing,
           [   0,    -<x1 p2>, <p2^2>,     0     ],    see below)
           [-<p1 x2>,   0,       0,     <x2^2>  ]]

written here with the understanding that rows/columns follow
(x1, p1, x2, p2).  For any covariance matrix of this family the crossed
table is exactly inv(V)/2, so W is the standard Gaussian phase-space
density; the tests verify both that identity and the defining Fourier
integral by quadrature.

Normalization: N = sqrt(det M) / pi^2 makes the integral of W equal 1.
The constant 2/(pi hbar^2) that is conventional in front of the
two-mode convolution form is kept in the report as raw_prefactor; for a
degenerate exponent (det M = 0, e.g. the built-in illustration moments
below) the distribution is not normalizable and raw_prefactor is used
verbatim for display.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateForm, InvalidPlane
from .gaussian import CovarianceMatrix

AXIS_INDEX = {"x1": 0, "p1": 1, "x2": 2, "p2": 3}

# zero pattern shared by every covariance matrix of this family
_FAMILY_ZEROS = ((0, 1), (0, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class WignerForm:
    """Exponent matrix and prefactors of W(Z) = norm * exp(-Z^T m Z).

    norm is sqrt(det m)/pi^2 for a normalizable form; for a degenerate
    form (det m = 0) it falls back to raw_prefactor = 2/pi and the
    degenerate flag is set.
    """

    m: np.ndarray
    norm: float
    raw_prefactor: float
    degenerate: bool


@dataclass(frozen=True)
class WignerGrid:
    """W sampled on a rectangular slice of phase space.

    plane  : the two scanned axis names, e.g. ("x2", "p2")
    fixed  : clamped values of the remaining two axes
    axis1, axis2 : grid nodes along plane[0], plane[1]
    values : values[i, j] = W at axis1[i], axis2[j]
    form   : the WignerForm the grid was sampled from
    """

    plane: tuple
    fixed: dict
    axis1: np.ndarray
    axis2: np.ndarray
    values: np.ndarray
    form: WignerForm
    kind: str = "wigner"

    def csv_text(self, *, triples: bool = False) -> str:
        """Grid as CSV (matrix layout) or gnuplot-style x y w triples.

        Matrix layout: first row is ,axis2 nodes; each following row is
        an axis1 node followed by that row of W values.  Triples layout
        uses space-separated columns with a blank line between axis1
        blocks, which splot consumes directly.
        """
        if triples:
            lines = [f"# {self.plane[0]} {self.plane[1]} w"]
            for i, a in enumerate(self.axis1):
                for j, b in enumerate(self.axis2):
                    lines.append(
                        f"{float(a)!r} {float(b)!r} {float(self.values[i, j])!r}"
                    )
                lines.append("")
            return "\n".join(lines) + "\n"
        head = "," + ",".join(repr(float(b)) for b in self.axis2)
        lines = [head]
        for i, a in enumerate(self.axis1):
            row = [repr(float(a))] + [repr(float(w)) for w in self.values[i]]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def meta_obj(self) -> dict:
        return {
            "kind": self.kind,
            "plane": list(self.plane),
            "fixed": {k: self.fixed[k] for k in sorted(self.fixed)},
            "axis1": {
                "name": self.plane[0],
                "start": float(self.axis1[0]),
                "stop": float(self.axis1[-1]),
                "steps": int(self.axis1.size),
            },
            "axis2": {
                "name": self.plane[1],
                "start": float(self.axis2[0]),
                "stop": float(self.axis2[-1]),
                "steps": int(self.axis2.size),
            },
            "exponent_matrix": [[float(x) for x in row] for row in self.form.m],
            "norm": self.form.norm,
            "raw_prefactor": self.form.raw_prefactor,
            "degenerate": self.form.degenerate,
            "w_min": float(self.values.min()),
            "w_max": float(self.values.max()),
        }


def wigner_form(
    v: CovarianceMatrix | np.ndarray, *, deg_tol: float = 1e-12
) -> WignerForm:
    """Exponent matrix of W from the covariance matrix, by crossed pairing.

    Only covariance matrices with the sparsity of this family are
    meaningful here (diagonal plus the <x1 p2> and <p1 x2> crosses); a
    dense V raises ValueError.  det m below deg_tol (relative to the
    diagonal scale) marks the form degenerate.
    """
    mv = v.matrix if isinstance(v, CovarianceMatrix) else np.asarray(v)
    scale = float(np.max(np.abs(mv)))
    for i, j in _FAMILY_ZEROS:
        if abs(mv[i, j]) > 1e-12 * scale or abs(mv[j, i]) > 1e-12 * scale:
            raise ValueError(
                "covariance matrix is outside the x1p2/p1x2 family; "
                f"entry ({i},{j}) is not zero"
            )
    m = np.zeros((4, 4))
    m[0, 0] = 2.0 * mv[1, 1]
    m[1, 1] = 2.0 * mv[0, 0]
    m[2, 2] = 2.0 * mv[3, 3]
    m[3, 3] = 2.0 * mv[2, 2]
    m[0, 3] = m[3, 0] = -2.0 * mv[1, 2]
    m[1, 2] = m[2, 1] = -2.0 * mv[0, 3]
    det = float(np.linalg.det(m))
    dscale = float(np.prod(np.diag(m))) or 1.0
    raw = 2.0 / np.pi
    if det <= deg_tol * abs(dscale):
        return WignerForm(m=m, norm=raw, raw_prefactor=raw, degenerate=True)
    return WignerForm(
        m=m, norm=float(np.sqrt(det) / np.pi**2), raw_prefactor=raw, degenerate=False
    )


def evaluate(wf: WignerForm, z) -> np.ndarray:
    """W at phase-space points z of shape (..., 4) in (x1,p1,x2,p2) order."""
    z = np.asarray(z, dtype=float)
    expo = np.einsum("...i,ij,...j->...", z, wf.m, z)
    return wf.norm * np.exp(-expo)


def project(
    wf: WignerForm,
    plane: tuple,
    fixed: dict,
    axes: tuple = ((-4.0, 4.0, 201), (-4.0, 4.0, 201)),
) -> WignerGrid:
    """Sample W on a 2D slice: scan the plane axes, clamp the other two.

    plane names two distinct axes out of x1, p1, x2, p2 and fixed must
    supply values for exactly the remaining two; anything else raises
    InvalidPlane.
    """
    plane = tuple(plane)
    if (
        len(plane) != 2
        or plane[0] == plane[1]
        or any(a not in AXIS_INDEX for a in plane)
    ):
        raise InvalidPlane(f"plane must be two distinct axes, got {plane!r}")
    rest = sorted(set(AXIS_INDEX) - set(plane), key=lambda a: AXIS_INDEX[a])
    if set(fixed) != set(rest):
        raise InvalidPlane(
            f"fixed must supply exactly {rest}, got {sorted(fixed)}"
        )
    (a1, b1, n1), (a2, b2, n2) = axes
    g1 = np.linspace(float(a1), float(b1), int(n1))
    g2 = np.linspace(float(a2), float(b2), int(n2))
    z = np.zeros((g1.size, g2.size, 4))
    z[..., AXIS_INDEX[plane[0]]] = g1[:, None]
    z[..., AXIS_INDEX[plane[1]]] = g2[None, :]
    for name, value in fixed.items():
        z[..., AXIS_INDEX[name]] = float(value)
    return WignerGrid(
        plane=plane,
        fixed={k: float(v) for k, v in fixed.items()},
        axis1=g1,
        axis2=g2,
        values=evaluate(wf, z),
        form=wf,
    )


def marginal_position(
    wf: WignerForm, axes: tuple = ((-4.0, 4.0, 201), (-4.0, 4.0, 201))
) -> tuple:
    """(x1 nodes, x2 nodes, density): W integrated over both momenta.

    The momentum block is integrated in closed form; the result is the
    position density |psi0|^2 evaluated on the grid.  Raises
    DegenerateForm when the momentum block (or its Schur complement) is
    not positive definite, as for the degenerate illustration moments.
    """
    q = [AXIS_INDEX["x1"], AXIS_INDEX["x2"]]
    r = [AXIS_INDEX["p1"], AXIS_INDEX["p2"]]
    mqq = wf.m[np.ix_(q, q)]
    mqr = wf.m[np.ix_(q, r)]
    mrr = wf.m[np.ix_(r, r)]
    det_rr = float(np.linalg.det(mrr))
    if wf.degenerate or det_rr <= 0.0:
        raise DegenerateForm("momentum block is not positive definite")
    schur = mqq - mqr @ np.linalg.solve(mrr, mqr.T)
    eig = np.linalg.eigvalsh(schur)
    if eig.min() <= 1e-12 * max(eig.max(), 1.0):
        raise DegenerateForm(
            f"position marginal is not normalizable (min eig {eig.min():.3e})"
        )
    (a1, b1, n1), (a2, b2, n2) = axes
    g1 = np.linspace(float(a1), float(b1), int(n1))
    g2 = np.linspace(float(a2), float(b2), int(n2))
    x1 = g1[:, None]
    x2 = g2[None, :]
    expo = (
        schur[0, 0] * x1**2
        + 2.0 * schur[0, 1] * x1 * x2
        + schur[1, 1] * x2**2
    )
    density = wf.norm * np.pi / np.sqrt(det_rr) * np.exp(-expo)
    return g1, g2, density


def save_grid(grid: WignerGrid, prefix: str, *, triples: bool = False) -> tuple:
    """Write <prefix>.csv (the grid) and <prefix>.json (metadata).

    Returns the two paths.  Output is deterministic: repr floats, fixed
    key order, newline-terminated.
    """
    csv_path = f"{prefix}.csv"
    meta_path = f"{prefix}.json"
    with open(csv_path, "w") as f:
        f.write(grid.csv_text(triples=triples))
    with open(meta_path, "w") as f:
        f.write(json.dumps(grid.meta_obj(), indent=2) + "\n")
    return csv_path, meta_path


def illustration_covariance() -> CovarianceMatrix:
    """Built-in demonstration moments: every variance 1/2, crosses -1/2.

    These produce the maximally tilted exponent
    -(x1 + p2)^2 - (x2 + p1)^2, a degenerate (non-normalizable) form
    useful for visualizing the crossed pairing.  Not the moments of any
    physical state of this family.
    """
    v = 0.5 * np.eye(4)
    v[0, 3] = v[3, 0] = -0.5
    v[1, 2] = v[2, 1] = -0.5
    return CovarianceMatrix(matrix=v)
