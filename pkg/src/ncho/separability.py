"""Separability of the two-mode Gaussian ground state.

For a Gaussian state the Peres-Horodecki partial-transpose test is
necessary and sufficient (Simon, Phys. Rev. Lett. 84, 2726 (2000)) and
takes a determinant form.  Writing the covariance matrix in 2x2 blocks

    V = [[A, C], [C^T, B]],

the state is separable exactly when

    det A det B + (1/4 - |det C|)^2 - tr(A J C J B J C^T J)
        >= (det A + det B) / 4,                    J = [[0, 1], [-1, 0]].

The right side is sometimes quoted without the 1/4 factor; that variant
is strictly stronger than the uncertainty relation itself and classifies
every state of this family (including exact product states) as
entangled, so it cannot serve as a verdict.  Reports carry the margin of
both versions; the verdict uses the form above.  An independent check
computes the smallest symplectic eigenvalue of the partially transposed
covariance matrix, which must reach 1/2 for separable states.

For the oscillator ground state the entire question collapses onto the
imaginary cross coefficient y of the exponent: the margin works out to
-y^2 / (16 L11 L22), so the state is separable iff y = 0, which happens
at theta = eta = 0, at wt1 = wt2, and on the constraint surface
theta m1 wt1 = eta / (m2 wt2).
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateGroundState,
    DegenerateSpectrum,
    EmptyRange,
    InvalidAxisName,
)
from .gaussian import CovarianceMatrix, covariance, ground_state, require_physical
from .params import PhysicalParams, to_commutative, validate
from .symplectic import I_SIGMA_Y, J2, spectral_data

SEPARABLE = "separable"
ENTANGLED = "entangled"

# scan axes use the CLI spellings; w1/w2 address the physical frequencies
AXIS_FIELDS = {
    "m1": "m1",
    "m2": "m2",
    "w1": "wt1",
    "w2": "wt2",
    "theta": "theta",
    "eta": "eta",
}


@dataclass(frozen=True)
class SeparabilityReport:
    """Determinant-test quantities and the verdict for one state.

    margin = lhs - rhs is >= 0 (up to eps) for separable states; the
    _unscaled pair refers to the variant right side det1 + det2 kept for
    diagnostics only.  ppt_min is the smallest symplectic eigenvalue of
    the partially transposed covariance matrix (>= 1/2 means separable);
    reason tags which structural mechanism produced a separable verdict.
    """

    det1: float
    det2: float
    det12: float
    trace_term: float
    lhs: float
    rhs: float
    margin: float
    rhs_unscaled: float
    margin_unscaled: float
    verdict: str
    boundary: bool
    ppt_min: float | None = None
    ppt_verdict: str | None = None
    reason: str | None = None


def _det2(m: np.ndarray) -> float:
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def ppt_oracle(v: CovarianceMatrix | np.ndarray) -> float:
    """Smallest symplectic eigenvalue after partial transposition.

    Partial transposition of mode 2 flips the sign of p2.  The symplectic
    spectrum is read off the eigenvalues of (J2 + J2) Vt; values below
    1/2 witness entanglement, and for two-mode Gaussian states the
    witness is conclusive.
    """
    m = v.matrix if isinstance(v, CovarianceMatrix) else np.asarray(v)
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    vt = flip @ m @ flip
    return float(np.min(np.abs(np.linalg.eigvals(I_SIGMA_Y @ vt))))


def simon_report(
    v: CovarianceMatrix | np.ndarray,
    *,
    eps_sep: float = 1e-12,
    ppt: bool = True,
    check_physical: bool = True,
) -> SeparabilityReport:
    """Evaluate the determinant separability test on a covariance matrix.

    eps_sep is relative: verdicts compare margin against eps_sep * rhs,
    which keeps the decision band meaningful across parameter scales
    (margin is quartic in the state's natural units while rhs never
    drops below the vacuum value).  The boundary flag marks
    |margin| <= eps_sep * rhs.  Raises UnphysicalCovariance when V fails
    the Robertson-Schroedinger check (skipped with check_physical=False).
    """
    m = v.matrix if isinstance(v, CovarianceMatrix) else np.asarray(v)
    if check_physical:
        require_physical(m)
    a = m[:2, :2]
    b = m[2:, 2:]
    c = m[:2, 2:]
    det1 = _det2(a)
    det2 = _det2(b)
    det12 = _det2(c)
    trace_term = float(np.trace(a @ J2 @ c @ J2 @ b @ J2 @ c.T @ J2))
    lhs = det1 * det2 + (0.25 - abs(det12)) ** 2 - trace_term
    rhs = 0.25 * (det1 + det2)
    rhs_unscaled = det1 + det2
    margin = lhs - rhs
    band = eps_sep * rhs
    verdict = SEPARABLE if margin >= -band else ENTANGLED
    ppt_min = ppt_verdict = None
    if ppt:
        ppt_min = ppt_oracle(m)
        ppt_verdict = SEPARABLE if ppt_min >= 0.5 * (1.0 - eps_sep) else ENTANGLED
    return SeparabilityReport(
        det1=det1,
        det2=det2,
        det12=det12,
        trace_term=trace_term,
        lhs=float(lhs),
        rhs=float(rhs),
        margin=float(margin),
        rhs_unscaled=float(rhs_unscaled),
        margin_unscaled=float(lhs - rhs_unscaled),
        verdict=verdict,
        boundary=bool(abs(margin) <= band),
        ppt_min=ppt_min,
        ppt_verdict=ppt_verdict,
    )


def _reason(p: PhysicalParams, eps_c: float) -> str:
    if p.theta == 0.0 and p.eta == 0.0:
        return "theta_eta_zero"
    if abs(p.wt1 - p.wt2) <= eps_c * max(p.wt1, p.wt2):
        return "equal_frequencies"
    lhs = p.theta * p.m1 * p.wt1
    rhs = p.eta / (p.m2 * p.wt2)
    if abs(lhs - rhs) <= eps_c * max(lhs, rhs, 1e-300):
        return "constraint"
    return "generic"


def classify(
    p: PhysicalParams,
    *,
    eps_sep: float = 1e-12,
    eps_c: float = 1e-12,
    ppt: bool = True,
) -> SeparabilityReport:
    """Separability verdict for physical inputs, with a structural reason.

    The reason tag records which known separable surface (if any) the
    inputs lie on: "theta_eta_zero", "equal_frequencies", "constraint"
    (theta m1 wt1 = eta / (m2 wt2) within eps_c) or "generic".  The
    verdict itself always comes from the computed margin.
    """
    validate(p)
    cp = to_commutative(p)
    sd = spectral_data(cp)
    gs = ground_state(cp, sd)
    rep = simon_report(covariance(gs), eps_sep=eps_sep, ppt=ppt)
    return dataclasses.replace(rep, reason=_reason(p, eps_c))


@dataclass(frozen=True)
class AxisSpec:
    """One scan axis: a parameter name and a uniform grid over [start, stop]."""

    name: str
    start: float
    stop: float
    steps: int

    def grid(self) -> np.ndarray:
        if self.name not in AXIS_FIELDS:
            raise InvalidAxisName(
                f"axis {self.name!r} is not one of {sorted(AXIS_FIELDS)}"
            )
        if self.steps < 1:
            raise EmptyRange(f"axis {self.name!r} has {self.steps} points")
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class ScanRow:
    """One grid point: axis values, margin and verdict.

    Points where the spectrum (or the ground-state construction)
    degenerates carry degenerate=True, an empty verdict and no margin.
    """

    point: tuple
    margin: float | None
    verdict: str
    boundary: bool
    degenerate: bool


@dataclass(frozen=True)
class ScanResult:
    base: PhysicalParams
    axes: tuple
    rows: list
    eps_sep: float
    eps_c: float

    def counts(self) -> dict:
        return {
            "separable": sum(r.verdict == SEPARABLE for r in self.rows),
            "entangled": sum(r.verdict == ENTANGLED for r in self.rows),
            "boundary": sum(r.boundary for r in self.rows),
            "degenerate": sum(r.degenerate for r in self.rows),
        }

    def csv_text(self) -> str:
        """Deterministic CSV: axis columns, margin, verdict, boundary, degenerate.

        Floats use repr (shortest round-trip), booleans are true/false,
        degenerate rows leave margin and verdict empty.  Lines end in \\n.
        """
        names = [ax.name for ax in self.axes]
        lines = [",".join(names + ["margin", "verdict", "boundary", "degenerate"])]
        for r in self.rows:
            cells = [repr(float(x)) for x in r.point]
            cells.append("" if r.margin is None else repr(float(r.margin)))
            cells.append(r.verdict)
            cells.append("true" if r.boundary else "false")
            cells.append("true" if r.degenerate else "false")
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def json_obj(self) -> dict:
        return {
            "base": dataclasses.asdict(self.base),
            "axes": [dataclasses.asdict(ax) for ax in self.axes],
            "eps_sep": self.eps_sep,
            "eps_c": self.eps_c,
            "counts": self.counts(),
            "rows": [
                {
                    "point": list(r.point),
                    "margin": r.margin,
                    "verdict": r.verdict,
                    "boundary": r.boundary,
                    "degenerate": r.degenerate,
                }
                for r in self.rows
            ],
        }

    def json_text(self, *, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.json_obj(), indent=2) + "\n"
        return json.dumps(self.json_obj(), separators=(",", ":")) + "\n"


def scan(
    base: PhysicalParams,
    axis1: AxisSpec,
    axis2: AxisSpec | None = None,
    *,
    eps_sep: float = 1e-12,
    eps_c: float = 1e-12,
) -> ScanResult:
    """Margin and verdict over a 1D or 2D grid of physical parameters.

    Rows are emitted in row-major order (axis1 outer, axis2 inner).
    Points with a degenerate spectrum are recorded rather than raised;
    invalid parameter values (a grid that walks into m <= 0 or theta < 0)
    do raise, since the grid itself is at fault.  The per-point work
    skips the PPT cross-check to keep large scans fast.
    """
    axes = (axis1,) if axis2 is None else (axis1, axis2)
    grids = [ax.grid() for ax in axes]
    if len(axes) == 2 and axes[0].name == axes[1].name:
        raise InvalidAxisName(f"both axes scan {axis1.name!r}")
    rows = []
    points = (
        [(x,) for x in grids[0]]
        if axis2 is None
        else [(x, y) for x in grids[0] for y in grids[1]]
    )
    for point in points:
        fields = {AXIS_FIELDS[ax.name]: float(v) for ax, v in zip(axes, point)}
        p = dataclasses.replace(base, **fields)
        try:
            rep = classify(p, eps_sep=eps_sep, eps_c=eps_c, ppt=False)
            rows.append(
                ScanRow(
                    point=tuple(float(v) for v in point),
                    margin=rep.margin,
                    verdict=rep.verdict,
                    boundary=rep.boundary,
                    degenerate=False,
                )
            )
        except (DegenerateSpectrum, DegenerateGroundState):
            rows.append(
                ScanRow(
                    point=tuple(float(v) for v in point),
                    margin=None,
                    verdict="",
                    boundary=False,
                    degenerate=True,
                )
            )
    return ScanResult(
        base=base, axes=axes, rows=rows, eps_sep=eps_sep, eps_c=eps_c
    )
