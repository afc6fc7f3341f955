"""Property suites driven by seeded sampling.

Each suite draws its samples from an independent, counter-based stream
derived from the configured seed, evaluates one family of claims about an
embedding spec, and reports the worst residual together with the sample
that produced it (serialized so it can be replayed through the CLI).
Suites run in canonical order and reduce deterministically: ties on the
maximum residual keep the earliest sample.
"""

from __future__ import annotations

import numpy as np

from .domains import BallPoint, membership
from .embeddings import (
    EmbeddingSpec,
    FactorKind,
    direct_sum_embed,
    exterior_power_embed,
    linearize,
    unvec_sym,
)
from .errors import NonlinearityDetected
from .exterior import (
    conjugation_twice_unit,
    conjugation_unit,
    induced_form,
    signature,
    wedge_basis,
)
from .linalg import max_abs, singular_values
from .report import SUITE_NAMES, HarnessConfig, Report, SuiteResult
from .retractions import isometry_sandwich, retract_direct_sum
from .sampling import generator, sample_ball_point, sample_phases
from .serialize import point_to_json

__all__ = ["run_suite", "run_verification"]

# Stable stream offsets per suite; keeps samples independent across suites.
_STREAMS = {name: i + 1 for i, name in enumerate(SUITE_NAMES)}

_SIGNATURE_TABLE_MAX_P = 6


def _ball_json(z: BallPoint) -> dict:
    return point_to_json(z.as_type_i())


def _format_unit(value: complex) -> str:
    value = complex(value)
    table = {(1, 0): "1", (-1, 0): "-1", (0, 1): "i", (0, -1): "-i"}
    key = (round(value.real), round(value.imag))
    if key in table and abs(value - complex(*key)) < 1e-12:
        return table[key]
    return repr(value)


def _suite_retraction(spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    rng = generator(config.seed, _STREAMS["retraction"])
    tol = config.tol
    worst, worst_input = -1.0, None
    for _ in range(config.samples):
        z = sample_ball_point(rng, spec.source_dim, config.radius_cap)
        image = direct_sum_embed(spec, z, tol)
        back = retract_direct_sum(image, spec, tol, verify=False)
        residual = max_abs(back.coords - z.coords)
        if residual > worst:
            worst, worst_input = residual, z
    return SuiteResult(
        "retraction",
        worst <= 10.0 * tol.eq_tol,
        config.samples,
        worst,
        _ball_json(worst_input),
    )


def _suite_membership(spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    rng = generator(config.seed, _STREAMS["membership"])
    tol = config.tol
    violations = 0
    min_margin = np.inf
    worst_input = None
    for _ in range(config.samples):
        z = sample_ball_point(rng, spec.source_dim, config.radius_cap)
        image = direct_sum_embed(spec, z, tol)
        result = membership(image, tol)
        back = retract_direct_sum(image, spec, tol, verify=False)
        back_margin = 1.0 - back.norm**2
        margin = min(result.margin, back_margin)
        if not result or back_margin <= tol.psd_margin:
            violations += 1
        if margin < min_margin:
            min_margin, worst_input = margin, z
    residual = max(0.0, tol.psd_margin - float(min_margin))
    return SuiteResult(
        "membership",
        violations == 0,
        config.samples,
        residual,
        _ball_json(worst_input),
        detail=f"violations={violations}, min_margin={min_margin!r}",
    )


def _suite_isometry(spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    rng = generator(config.seed, _STREAMS["isometry"])
    tol = config.tol
    worst, worst_input = -1.0, None
    for _ in range(config.samples):
        x = sample_ball_point(rng, spec.source_dim, config.radius_cap)
        y = sample_ball_point(rng, spec.source_dim, config.radius_cap)
        record = isometry_sandwich(spec, x, y, tol)
        if record.max_gap > worst:
            worst = record.max_gap
            worst_input = {"x": _ball_json(x), "y": _ball_json(y)}
    return SuiteResult("isometry", worst <= 10.0 * tol.eq_tol, config.samples, worst, worst_input)


def _suite_signature(spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    checked = 0
    mismatches = []
    for p in range(1, _SIGNATURE_TABLE_MAX_P + 1):
        for m in range(1, p + 1):
            basis = wedge_basis(p, m)
            plus = minus = 0
            for index in range(basis.size):
                unit = np.zeros(basis.size)
                unit[index] = 1.0
                value = induced_form(p, m, unit, unit).real
                if value > 0:
                    plus += 1
                else:
                    minus += 1
            checked += 1
            if (plus, minus) != signature(p, m):
                mismatches.append((p, m, plus, minus))
    return SuiteResult(
        "signature",
        not mismatches,
        checked,
        0.0 if not mismatches else 1.0,
        detail=None if not mismatches else f"mismatches={mismatches}",
    )


def _suite_symmetry(spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    rng = generator(config.seed, _STREAMS["symmetry"])
    tol = config.tol
    worst, worst_input = -1.0, None
    symmetric_factors = sorted(
        {(f.p, f.m) for f in spec.factors if f.kind is FactorKind.LAMBDA_III}
    )
    for _ in range(config.samples):
        z = sample_ball_point(rng, spec.source_dim, config.radius_cap)
        image = direct_sum_embed(spec, z, tol)
        residual = max_abs(image.z - image.z.T)
        for p, m in symmetric_factors:
            block = exterior_power_embed(z, m, symmetric=True, tol=tol)
            residual = max(residual, max_abs(block.z - block.z.T))
        if residual > worst:
            worst, worst_input = residual, z
    return SuiteResult("symmetry", worst <= 10.0 * tol.eq_tol, config.samples, worst, _ball_json(worst_input))


def _suite_linearity(spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    rng = generator(config.seed, _STREAMS["linearity"])
    tol = config.tol
    try:
        built = linearize(spec, tol, seed=config.seed)
    except NonlinearityDetected as exc:
        return SuiteResult("linearity", False, 0, None, detail=str(exc))
    sv = singular_values(built.matrix)
    rank = int(np.sum(sv > tol.eq_tol * max(1.0, float(sv[0]))))
    worst, worst_input = -1.0, None
    for _ in range(config.samples):
        z = sample_ball_point(rng, spec.source_dim, config.radius_cap)
        direct = direct_sum_embed(spec, z, tol)
        linear = unvec_sym(built.matrix @ z.coords, spec.target_g)
        residual = max_abs(direct.z - linear)
        if residual > worst:
            worst, worst_input = residual, z
    passed = worst <= tol.eq_tol and rank == spec.source_dim
    return SuiteResult(
        "linearity",
        passed,
        config.samples,
        worst,
        _ball_json(worst_input),
        detail=f"rank={rank}, expected={spec.source_dim}",
    )


def _induced_phases(p: int, m: int, symmetric: bool, theta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-row and per-column phases matching a diagonal phase action on z."""
    basis = wedge_basis(p, m)

    def content_product(indices) -> complex:
        out = 1.0 + 0.0j
        for i in indices:
            if i <= p:
                out *= theta[i - 1]
        return out

    col_phases = np.array([content_product(neg) for neg in basis.negatives])
    if symmetric:
        full = np.prod(theta)
        row_phases = np.array([full / content_product(neg) for neg in basis.negatives])
    else:
        row_phases = np.array([content_product(pos) for pos in basis.positives])
    return row_phases, col_phases


def _suite_equivariance(spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    rng = generator(config.seed, _STREAMS["equivariance"])
    tol = config.tol
    wedge_factors = sorted(
        {
            (f.p, f.m, f.kind is FactorKind.LAMBDA_III)
            for f in spec.factors
            if f.kind in (FactorKind.CONNECTING_LAMBDA, FactorKind.LAMBDA_III)
        }
    )
    if not wedge_factors:
        return SuiteResult("equivariance", True, 0, 0.0, detail="no wedge factors in spec")
    worst, worst_input = -1.0, None
    for _ in range(config.samples):
        z = sample_ball_point(rng, spec.source_dim, config.radius_cap)
        theta = sample_phases(rng, spec.source_dim)
        rotated = BallPoint(theta * z.coords)
        residual = 0.0
        for p, m, symmetric in wedge_factors:
            base = exterior_power_embed(z, m, symmetric=symmetric, tol=tol).z
            moved = exterior_power_embed(rotated, m, symmetric=symmetric, tol=tol).z
            row_phases, col_phases = _induced_phases(p, m, symmetric, theta)
            expected = row_phases[:, np.newaxis] * base * np.conj(col_phases)[np.newaxis, :]
            residual = max(residual, max_abs(moved - expected))
        if residual > worst:
            worst, worst_input = residual, z
    return SuiteResult(
        "equivariance", worst <= 10.0 * tol.eq_tol, config.samples, worst, _ball_json(worst_input)
    )


_SUITE_RUNNERS = {
    "retraction": _suite_retraction,
    "membership": _suite_membership,
    "isometry": _suite_isometry,
    "signature": _suite_signature,
    "symmetry": _suite_symmetry,
    "linearity": _suite_linearity,
    "equivariance": _suite_equivariance,
}


def run_suite(name: str, spec: EmbeddingSpec, config: HarnessConfig) -> SuiteResult:
    return _SUITE_RUNNERS[name](spec, config)


def _conjugation_notes(spec: EmbeddingSpec) -> dict:
    """Measured conjugation units for every wedge degree the spec uses.

    The basis conjugation multiplies e_M by a unit in {i, -i}; applying it
    twice multiplies by the recorded square unit.  The values are reported
    as measured, never normalized away.
    """
    notes = {}
    degrees = sorted({(f.p, f.m) for f in spec.factors if f.kind is not FactorKind.STANDARD_III})
    for p, m in degrees:
        basis = wedge_basis(p, m)
        units = sorted({_format_unit(conjugation_unit(M, p)) for M in basis.ordered})
        squares = sorted({_format_unit(conjugation_twice_unit(M, p)) for M in basis.ordered})
        notes[f"p={p},m={m}"] = {"units": units, "squared": squares}
    return notes


def run_verification(spec: EmbeddingSpec, config: HarnessConfig) -> Report:
    """Run the configured suites against a spec and assemble the report."""
    results = tuple(run_suite(name, spec, config) for name in config.suites)
    return Report(spec, config, results, {"conjugation": _conjugation_notes(spec)})
