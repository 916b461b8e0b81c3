"""Full analysis of one parameter point, serializable to JSON."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from . import __version__
from .gaussian import (
    CovarianceMatrix,
    GroundState,
    covariance,
    ground_state,
    rs_min_eigenvalue,
    variance_products,
)
from .params import (
    CommutativeParams,
    PhysicalParams,
    effective_planck,
    to_commutative,
    validate,
)
from .separability import SeparabilityReport, _reason, simon_report
from .symplectic import EigenSystem, SpectralData, assemble_eigensystem, spectral_data


@dataclass(frozen=True)
class AnalysisReport:
    params: PhysicalParams
    hbar_e: float
    commutative: CommutativeParams
    spectral: SpectralData
    eigensystem: EigenSystem
    ground: GroundState
    cov: CovarianceMatrix
    rs_min: float
    variance: tuple
    separability: SeparabilityReport
    tol: float
    eps_sep: float
    eps_c: float

    def json_obj(self) -> dict:
        """Report as a JSON-ready dict with fixed field order."""
        p, cp, sd, gs = self.params, self.commutative, self.spectral, self.ground
        nunu = cp.nu1 * cp.nu2
        cross = (sd.b - cp.w1**2 - cp.w2**2) / nunu if nunu > 0.0 else None
        rep = self.separability
        return {
            "version": __version__,
            "tolerances": {
                "identity": self.tol,
                "eps_sep": self.eps_sep,
                "eps_c": self.eps_c,
            },
            "inputs": {
                "m1": p.m1,
                "m2": p.m2,
                "w1": p.wt1,
                "w2": p.wt2,
                "theta": p.theta,
                "eta": p.eta,
                "hbar": p.hbar,
            },
            "effective_planck": self.hbar_e,
            "commutative": {
                "mu1": cp.mu1,
                "mu2": cp.mu2,
                "w1": cp.w1,
                "w2": cp.w2,
                "nu1": cp.nu1,
                "nu2": cp.nu2,
            },
            "spectral": {
                "b": sd.b,
                "c": sd.c,
                "delta": sd.delta,
                "wx2": sd.wx2,
                "wy2": sd.wy2,
                "alpha0": sd.alpha0,
                "lambda1": sd.lambda1,
                "lambda2": sd.lambda2,
                "b_cross_coefficient": cross,
            },
            "residuals": dict(self.eigensystem.residuals),
            "used_fallback": list(self.eigensystem.used_fallback),
            "ground_state": {
                "lambda11": gs.lambda11,
                "lambda22": gs.lambda22,
                "lambda12_im": gs.lambda12_im,
                "a0_mod": gs.a0_mod,
                "d": gs.d,
                "tau": gs.tau,
                "denom": gs.denom,
                "energy0": gs.energy0,
            },
            "covariance": [[float(x) for x in row] for row in self.cov.matrix],
            "rs_min_eigenvalue": self.rs_min,
            "variance_products": list(self.variance),
            "separability": {
                "det1": rep.det1,
                "det2": rep.det2,
                "det12": rep.det12,
                "trace_term": rep.trace_term,
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "margin": rep.margin,
                "rhs_unscaled": rep.rhs_unscaled,
                "margin_unscaled": rep.margin_unscaled,
                "verdict": rep.verdict,
                "boundary": rep.boundary,
                "ppt_min": rep.ppt_min,
                "ppt_verdict": rep.ppt_verdict,
                "reason": rep.reason,
            },
        }

    def json_text(self, *, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.json_obj(), indent=2) + "\n"
        return json.dumps(self.json_obj(), separators=(",", ":")) + "\n"


def analyze(
    p: PhysicalParams,
    *,
    tol: float = 1e-9,
    eps_sep: float = 1e-12,
    eps_c: float = 1e-12,
) -> AnalysisReport:
    """Run the whole pipeline on one parameter point.

    Covers the Bopp map, spectrum, eigensystem with identity residuals,
    ground state, covariance matrix, uncertainty products and the
    separability verdict with its PPT cross-check.
    """
    validate(p)
    cp = to_commutative(p)
    sd = spectral_data(cp)
    es = assemble_eigensystem(cp, sd, tol=tol)
    gs = ground_state(cp, sd)
    cov = covariance(gs)
    rep = simon_report(cov, eps_sep=eps_sep, ppt=True)
    rep = dataclasses.replace(rep, reason=_reason(p, eps_c))
    return AnalysisReport(
        params=p,
        hbar_e=effective_planck(p),
        commutative=cp,
        spectral=sd,
        eigensystem=es,
        ground=gs,
        cov=cov,
        rs_min=rs_min_eigenvalue(cov),
        variance=variance_products(gs),
        separability=rep,
        tol=tol,
        eps_sep=eps_sep,
        eps_c=eps_c,
    )
