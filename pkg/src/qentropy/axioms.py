"""Numerical checks of the generalized Shannon-Khinchin axioms.

Each check evaluates one axiom or validity condition for a given entropy
family and returns a CheckRecord (q values, sample count, max residual,
threshold, verdict, worst witnesses).  run_full_report runs them all and
aggregates into an AxiomReport whose JSON serialization is byte-identical
for identical (family, config, seed).

Thresholds fall in two classes: algebraic identities are held to 1e-10
(machine precision with headroom) while genuine limits get looser,
config-overridable tolerances, because a family built on a nowhere
differentiable deformation converges to its q -> 1 limits at a Hoelder
rate rather than linearly.  All thresholds are recorded in the report.

Randomized checks derive an independent stream from (seed, check name) so
checks can run in any order, or concurrently, without perturbing results.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from .deformation import EntropyFamily
from .entropy import (
    generalized_entropy,
    information_content,
    pseudoadditive_compose,
    suyari_entropy,
)
from .errors import EvaluationError, InputError, QentropyError
from .simplex import (
    Distribution,
    Refinement,
    sample_refinement,
    sample_simplex,
    uniform_distribution,
)

CHECK_NAMES = (
    "continuity_probe",
    "maximality",
    "expandability",
    "shannon_additivity",
    "generalized_additivity",
    "pseudoadditivity",
    "shannon_limit",
    "sign_condition",
    "phi_derivative_at_1",
    "alpha_phi_limit",
    "constraint_region",
    "convexity_of_I",
    "derivative_limit_probe",
)

_DEFAULT_Q_GRID = (0.5, 0.9, 1.0, 1.1, 2.0, 3.0)
# 50 points over (0, 4) avoiding q = 1 exactly; shared by the region,
# convexity, and sign checks so their per-q verdicts are comparable.
_DEFAULT_REGION_GRID = tuple(
    float(q) for q in np.linspace(0.1, 3.9, 50) if abs(q - 1.0) > 1e-9
)
_DEFAULT_DISTS = (
    (1.0,),
    (0.5, 0.5),
    (0.5, 0.25, 0.25),
    (0.25, 0.25, 0.25, 0.25),
)


@dataclass(frozen=True)
class CheckConfig:
    """Knobs for the axiom checks; defaults run in seconds on one core."""

    q_grid: tuple[float, ...] = _DEFAULT_Q_GRID
    region_q_grid: tuple[float, ...] = _DEFAULT_REGION_GRID
    dims: tuple[int, ...] = (2, 3, 5)
    dists: tuple[tuple[float, ...], ...] = _DEFAULT_DISTS
    seed: int = 0
    maximality_samples: int = 200
    pseudo_samples: int = 400
    refinement_count: int = 60
    refinement_rows: int = 4
    refinement_max_m: int = 4
    # Algebraic identities.
    identity_tol: float = 1e-10
    shannon_exact_tol: float = 1e-12
    # Limits.  The derivative scales go down to 1e-15, the smallest offset
    # from 1.0 that doubles resolve cleanly; quotients always divide by the
    # representable offset.  shannon_limit stops at 1e-6 because the entropy
    # code switches to the exact Shannon limit below |q-1| = 1e-9 and deeper
    # scales would test the crossover, not the family.
    limit_tol: float = 1e-4
    derivative_scales: tuple[int, ...] = tuple(range(3, 16))
    shannon_limit_tol: float = 1e-2
    shannon_limit_scales: tuple[int, ...] = (2, 3, 4, 5, 6)
    # Pointwise conditions.
    sign_grid_points: int = 80
    region_tol: float = 1e-12
    convexity_tol: float = 1e-9
    convexity_grid_size: int = 32
    convexity_p_min: float = 1e-3
    # Continuity heuristic: max discrete slope along q and along a simplex
    # path, compared against continuity_scale.  Indicative only.
    continuity_points: int = 200
    continuity_scale: float = 100.0
    # Derivative-limit probe (illustrative).
    probe_point: float = 1.3
    probe_scales: int = 10
    probe_tol: float = 1e-3


@dataclass
class CheckRecord:
    """Outcome of one check.  verdict is pass, fail, or not_applicable;
    pass holds exactly when max_residual <= threshold."""

    name: str
    q_values: tuple[float, ...]
    sample_count: int
    max_residual: float | None
    threshold: float
    verdict: str
    witnesses: tuple[dict, ...] = ()
    details: dict = field(default_factory=dict)


def _record(
    name: str,
    q_values: Sequence[float],
    sample_count: int,
    max_residual: float | None,
    threshold: float,
    witnesses: Sequence[dict] = (),
    details: dict | None = None,
) -> CheckRecord:
    verdict = "pass" if max_residual is not None and max_residual <= threshold else "fail"
    return CheckRecord(
        name=name,
        q_values=tuple(float(q) for q in q_values),
        sample_count=sample_count,
        max_residual=max_residual,
        threshold=threshold,
        verdict=verdict,
        witnesses=tuple(witnesses),
        details=details or {},
    )


def _not_applicable(
    name: str,
    q_values: Sequence[float],
    threshold: float,
    reason: str,
    details: dict | None = None,
) -> CheckRecord:
    merged = {"reason": reason}
    merged.update(details or {})
    return CheckRecord(
        name=name,
        q_values=tuple(float(q) for q in q_values),
        sample_count=0,
        max_residual=None,
        threshold=threshold,
        verdict="not_applicable",
        witnesses=(),
        details=merged,
    )


def _check_seed(seed: int, name: str) -> int:
    """Independent deterministic seed per (seed, check name)."""
    return int.from_bytes(f"{seed}:{name}".encode(), "big")


def _worst(witnesses: list[tuple[float, dict]], keep: int = 3) -> tuple[dict, ...]:
    witnesses.sort(key=lambda t: t[0], reverse=True)
    return tuple(w for _, w in witnesses[:keep])


def _is_tsallis_alpha(f: EntropyFamily, q_grid: Sequence[float]) -> bool:
    """True when alpha(q) coincides with 1 - q on the grid."""
    try:
        return all(abs(f.eval_alpha(q) - (1.0 - q)) <= 1e-9 for q in q_grid)
    except QentropyError:
        return False


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def check_maximality(
    f: EntropyFamily,
    q_grid: Sequence[float],
    n_set: Sequence[int],
    samples: int,
    seed: int,
) -> CheckRecord:
    """Entropy of random simplex points never exceeds the uniform value."""
    name = "maximality"
    threshold = 1e-10
    witnesses: list[tuple[float, dict]] = []
    max_residual = -math.inf
    total = 0
    try:
        for n in n_set:
            points = sample_simplex(n, samples, _check_seed(seed, name) + n)
            for q in q_grid:
                s_uniform = generalized_entropy(uniform_distribution(n), f, q).value
                for d in points:
                    residual = generalized_entropy(d, f, q).value - s_uniform
                    total += 1
                    if residual > max_residual:
                        max_residual = residual
                    if residual > threshold:
                        witnesses.append((residual, {
                            "q": q,
                            "n": n,
                            "probs": list(d.probs),
                            "entropy": generalized_entropy(d, f, q).value,
                            "uniform_entropy": s_uniform,
                            "residual": residual,
                        }))
    except EvaluationError as exc:
        return _not_applicable(name, q_grid, threshold, f"evaluation failed: {exc}")
    return _record(name, q_grid, total, max_residual, threshold, _worst(witnesses))


def check_expandability(
    f: EntropyFamily,
    dists: Sequence[Distribution],
    q_grid: Sequence[float] = (),
) -> CheckRecord:
    """Appending a zero-probability outcome leaves S_1 unchanged.

    The same comparison at q != 1 is reported informationally in details,
    since the axiom is only stated at q = 1.
    """
    name = "expandability"
    threshold = 1e-12
    max_residual = 0.0
    witnesses: list[tuple[float, dict]] = []
    for d in dists:
        gap = abs(
            generalized_entropy(d.append_zero(), f, 1.0).value
            - generalized_entropy(d, f, 1.0).value
        )
        if gap > max_residual:
            max_residual = gap
        if gap > threshold:
            witnesses.append((gap, {"probs": list(d.probs), "gap": gap}))
    off_shannon = {}
    for q in q_grid:
        if q == 1.0:
            continue
        gaps = []
        for d in dists:
            try:
                gaps.append(abs(
                    generalized_entropy(d.append_zero(), f, q).value
                    - generalized_entropy(d, f, q).value
                ))
            except EvaluationError:
                gaps.append(None)
        off_shannon[repr(q)] = gaps
    return _record(
        name, (1.0,), len(dists), max_residual, threshold, _worst(witnesses),
        details={"off_shannon_gaps_informational": off_shannon},
    )


def _additivity_residual(
    f: EntropyFamily, r: Refinement, q: float, mode: str
) -> float:
    """|LHS - RHS| of the generalized Shannon additivity for one refinement.

    mode selects the weight exponent: "suyari" uses p_i^q with the
    exponent-q entropy, "generalized" uses p_i^(1 - alpha(q)) with the
    generalized entropy.  Zero-marginal rows are skipped: their weight is 0
    whenever the exponent is positive, matching the limit of the sum.
    """
    marg = r.marginals()
    if mode == "suyari":
        exponent = q
        s_of = lambda d: suyari_entropy(d, f, q).value
    else:
        exponent = 1.0 - f.eval_alpha(q)
        s_of = lambda d: generalized_entropy(d, f, q).value
    if exponent <= 0.0 and any(p == 0.0 for p in marg.probs):
        raise EvaluationError(
            f"zero marginal with weight exponent {exponent!r} <= 0"
        )
    lhs = s_of(r.flatten())
    terms = [s_of(marg)]
    for i, p_i in enumerate(marg.probs):
        if p_i == 0.0:
            continue
        terms.append(p_i**exponent * s_of(r.conditional(i)))
    return abs(lhs - math.fsum(terms))


def check_generalized_additivity(
    f: EntropyFamily,
    q_grid: Sequence[float],
    refinements: Sequence[Refinement],
    mode: str = "generalized",
) -> CheckRecord:
    """Chain rule over refinements: S(joint) = S(marginals) + weighted
    conditional entropies."""
    if mode not in ("suyari", "generalized"):
        raise InputError(f"unknown mode {mode!r}")
    name = "shannon_additivity" if mode == "suyari" else "generalized_additivity"
    threshold = 1e-10
    max_residual = 0.0
    witnesses: list[tuple[float, dict]] = []
    total = 0
    try:
        for r in refinements:
            for q in q_grid:
                residual = _additivity_residual(f, r, q, mode)
                total += 1
                if residual > max_residual:
                    max_residual = residual
                if residual > threshold:
                    witnesses.append((residual, {
                        "q": q,
                        "rows": [list(row) for row in r.rows],
                        "residual": residual,
                    }))
    except EvaluationError as exc:
        return _not_applicable(name, q_grid, threshold, f"evaluation failed: {exc}")
    return _record(name, q_grid, total, max_residual, threshold, _worst(witnesses),
                   details={"mode": mode})


def check_pseudoadditivity(
    f: EntropyFamily,
    q_grid: Sequence[float],
    samples: int,
    seed: int,
) -> CheckRecord:
    """I(p1 p2) equals the pseudoadditive composition of I(p1) and I(p2),
    relative to 1 + |I(p1 p2)|."""
    name = "pseudoadditivity"
    threshold = 1e-10
    rng = np.random.default_rng(_check_seed(seed, name))
    pairs = 1.0 - rng.random((samples, 2))  # values in (0, 1]
    max_residual = 0.0
    witnesses: list[tuple[float, dict]] = []
    total = 0
    try:
        for q in q_grid:
            for p1, p2 in pairs:
                p1, p2 = float(p1), float(p2)
                joint = information_content(f, q, p1 * p2)
                composed = pseudoadditive_compose(
                    f, q,
                    information_content(f, q, p1),
                    information_content(f, q, p2),
                )
                residual = abs(joint - composed) / (1.0 + abs(joint))
                total += 1
                if residual > max_residual:
                    max_residual = residual
                if residual > threshold:
                    witnesses.append((residual, {
                        "q": q, "p1": p1, "p2": p2, "residual": residual,
                    }))
    except EvaluationError as exc:
        return _not_applicable(name, q_grid, threshold, f"evaluation failed: {exc}")
    return _record(name, q_grid, total, max_residual, threshold, _worst(witnesses))


def check_shannon_limit(
    f: EntropyFamily,
    dists: Sequence[Distribution],
    scales: Sequence[int] = (2, 3, 4, 5, 6),
    tol: float = 1e-2,
) -> CheckRecord:
    """S_q approaches S_1 as q -> 1 from both sides.

    For each distribution, gap_j = max(|S_{1+h_j} - S_1|, |S_{1-h_j} - S_1|)
    at h_j = 10^-j.  Pass requires the gaps to decrease overall (last <=
    first) and the final gap to be below tol * (1 + S_1).  Strict per-step
    monotonicity is reported in details but not required: deformations that
    are merely Hoelder continuous approach the limit under an oscillating
    envelope.
    """
    name = "shannon_limit"
    max_residual = 0.0
    witnesses: list[tuple[float, dict]] = []
    gap_detail = {}
    try:
        for d in dists:
            s1 = generalized_entropy(d, f, 1.0).value
            gaps = []
            for j in scales:
                h = 10.0 ** (-j)
                gap = max(
                    abs(generalized_entropy(d, f, 1.0 + h).value - s1),
                    abs(generalized_entropy(d, f, 1.0 - h).value - s1),
                )
                gaps.append(gap)
            monotone = all(b <= a for a, b in zip(gaps, gaps[1:]))
            gap_detail[repr(list(d.probs))] = {
                "gaps": gaps,
                "strictly_decreasing": monotone,
            }
            final_rel = gaps[-1] / (1.0 + s1)
            decreasing = gaps[-1] <= gaps[0] or gaps[-1] == 0.0
            residual = final_rel if decreasing else math.inf
            if residual > max_residual:
                max_residual = residual
            if residual > tol:
                witnesses.append((residual, {
                    "probs": list(d.probs),
                    "gaps": gaps,
                    "final_relative_gap": final_rel,
                }))
    except EvaluationError as exc:
        return _not_applicable(name, [10.0 ** (-j) for j in scales], tol,
                               f"evaluation failed: {exc}")
    if math.isinf(max_residual):
        max_residual = 1e300  # keep the report JSON-parseable
    return _record(
        name, [1.0 + 10.0 ** (-j) for j in scales], len(dists) * len(scales),
        max_residual, tol, _worst(witnesses), details={"gaps": gap_detail},
    )


def _one_sided_deviation_sequences(
    func: Callable[[float], float],
    target: float,
    scales: Sequence[int],
) -> tuple[list[float], list[float], list[float], list[float]]:
    """Evaluate func at 1 +/- 10^-j and return (plus values, plus deviations,
    minus values, minus deviations) from the target."""
    plus_vals, plus_devs, minus_vals, minus_devs = [], [], [], []
    for j in scales:
        h = 10.0 ** (-j)
        plus = func(1.0 + h)
        minus = func(1.0 - h)
        plus_vals.append(plus)
        minus_vals.append(minus)
        plus_devs.append(abs(plus - target))
        minus_devs.append(abs(minus - target))
    return plus_vals, plus_devs, minus_vals, minus_devs


def check_alpha_phi_limit(
    f: EntropyFamily,
    scales: Sequence[int] = tuple(range(3, 16)),
    tol: float = 1e-4,
) -> CheckRecord:
    """alpha(q)/phi(q) -> -k as q -> 1, from both sides.

    Pass requires the deviation |ratio + k| at the deepest scale to be below
    tol on both sides and not to exceed the first-scale deviation.
    """
    name = "alpha_phi_limit"

    def ratio(q: float) -> float:
        return f.eval_alpha(q) / f.eval_phi(q)

    try:
        plus_vals, plus_devs, minus_vals, minus_devs = _one_sided_deviation_sequences(
            ratio, -f.k, scales
        )
    except (EvaluationError, ZeroDivisionError) as exc:
        return _not_applicable(name, [], tol, f"evaluation failed: {exc}")
    converged = (
        plus_devs[-1] <= plus_devs[0] and minus_devs[-1] <= minus_devs[0]
    ) or (plus_devs[-1] == 0.0 and minus_devs[-1] == 0.0)
    max_residual = max(plus_devs[-1], minus_devs[-1]) if converged else 1e300
    witnesses = []
    if max_residual > tol:
        witnesses.append((max_residual, {
            "target": -f.k,
            "ratio_above": plus_vals[-1],
            "ratio_below": minus_vals[-1],
        }))
    return _record(
        name, [1.0 + 10.0 ** (-j) for j in scales], 2 * len(scales),
        max_residual, tol, _worst(witnesses),
        details={
            "deviations_above": plus_devs,
            "deviations_below": minus_devs,
        },
    )


def check_phi_derivative_at_1(
    phi: Callable[[float], float],
    k: float,
    scales: Sequence[int] = tuple(range(3, 16)),
    tol: float = 1e-4,
) -> CheckRecord:
    """One-sided difference quotients of phi at q = 1 converge to 1/k.

    Quotients divide by the representable offset (1 + h) - 1, which is exact
    near 1, so deep scales stay meaningful.  Pass requires the deviation at
    the deepest scale below tol on both sides, without net growth.
    """
    name = "phi_derivative_at_1"
    phi_1 = phi(1.0)
    if abs(phi_1) > 1e-12:
        return _not_applicable(name, [], tol, f"phi(1) = {phi_1!r}, expected 0")

    def quotient(q: float) -> float:
        h = q - 1.0  # exact for q near 1 (Sterbenz)
        return (phi(q) - phi_1) / h

    try:
        plus_vals, plus_devs, minus_vals, minus_devs = _one_sided_deviation_sequences(
            quotient, 1.0 / k, scales
        )
    except EvaluationError as exc:
        return _not_applicable(name, [], tol, f"evaluation failed: {exc}")
    converged = (
        plus_devs[-1] <= plus_devs[0] and minus_devs[-1] <= minus_devs[0]
    ) or (plus_devs[-1] == 0.0 and minus_devs[-1] == 0.0)
    max_residual = max(plus_devs[-1], minus_devs[-1]) if converged else 1e300
    witnesses = []
    if max_residual > tol:
        witnesses.append((max_residual, {
            "target": 1.0 / k,
            "quotient_above": plus_vals[-1],
            "quotient_below": minus_vals[-1],
        }))
    return _record(
        name, [1.0 + 10.0 ** (-j) for j in scales], 2 * len(scales),
        max_residual, tol, _worst(witnesses),
        details={
            "quotients_above": plus_vals,
            "quotients_below": minus_vals,
        },
    )


def check_sign_condition(
    f: EntropyFamily,
    q_grid: Sequence[float],
) -> CheckRecord:
    """phi has the sign of q - 1 and does not vanish away from q = 1.

    The residual is the number of violating grid points, so the record
    stays meaningful when the only violation is an exact zero.
    """
    name = "sign_condition"
    threshold = 0.0
    witnesses: list[tuple[float, dict]] = []
    violations = 0
    try:
        for q in q_grid:
            if abs(q - 1.0) <= 1e-12:
                continue
            phi_q = f.eval_phi(q)
            if phi_q == 0.0 or math.copysign(1.0, phi_q) != math.copysign(1.0, q - 1.0):
                violations += 1
                witnesses.append((abs(phi_q) + 1.0, {"q": q, "phi": phi_q}))
    except EvaluationError as exc:
        return _not_applicable(name, q_grid, threshold, f"evaluation failed: {exc}")
    return _record(name, q_grid, len(q_grid), float(violations), threshold,
                   _worst(witnesses))


def check_constraint_region(
    f: EntropyFamily,
    q_grid: Sequence[float],
    tol: float = 1e-12,
) -> CheckRecord:
    """alpha lies in (-inf, 0] where phi > 0 and in [0, 1] where phi < 0.

    The residual is the largest distance from the admissible interval;
    per-q compliance is recorded for cross-validation against convexity.
    """
    name = "constraint_region"
    max_excess = 0.0
    witnesses: list[tuple[float, dict]] = []
    per_q = []
    total = 0
    try:
        for q in q_grid:
            if abs(q - 1.0) <= 1e-12:
                continue
            phi_q = f.eval_phi(q)
            alpha_q = f.eval_alpha(q)
            if phi_q > 0.0:
                excess = max(0.0, alpha_q)
            elif phi_q < 0.0:
                excess = max(0.0, -alpha_q, alpha_q - 1.0)
            else:
                # phi = 0 off 1 belongs to the sign condition, not here.
                per_q.append({"q": q, "phi": phi_q, "alpha": alpha_q,
                              "comply": None})
                continue
            total += 1
            comply = excess <= tol
            per_q.append({"q": q, "phi": phi_q, "alpha": alpha_q,
                          "excess": excess, "comply": comply})
            if excess > max_excess:
                max_excess = excess
            if not comply:
                witnesses.append((excess, {"q": q, "phi": phi_q,
                                           "alpha": alpha_q, "excess": excess}))
    except EvaluationError as exc:
        return _not_applicable(name, q_grid, tol, f"evaluation failed: {exc}")
    return _record(name, q_grid, total, max_excess, tol, _worst(witnesses),
                   details={"per_q": per_q})


def check_convexity_of_I(
    f: EntropyFamily,
    q_grid: Sequence[float],
    grid_size: int = 32,
    p_min: float = 1e-3,
    tol: float = 1e-9,
) -> CheckRecord:
    """Information content is convex in p for every fixed q.

    Second divided differences of I_q over a geometric grid in (0, 1] must
    not fall below -tol (divided differences generalize the second central
    difference to the unequal spacing of a geometric grid).
    """
    name = "convexity_of_I"
    if grid_size < 8:
        raise InputError("grid_size must be >= 8")
    ps = [math.exp(t) for t in np.linspace(math.log(p_min), 0.0, grid_size)]
    ps[-1] = 1.0
    max_residual = -math.inf
    witnesses: list[tuple[float, dict]] = []
    per_q = []
    total = 0
    try:
        for q in q_grid:
            values = [information_content(f, q, p) for p in ps]
            worst = -math.inf
            for (x1, v1), (x2, v2), (x3, v3) in zip(
                zip(ps, values), zip(ps[1:], values[1:]), zip(ps[2:], values[2:])
            ):
                dd = ((v3 - v2) / (x3 - x2) - (v2 - v1) / (x2 - x1)) / (x3 - x1)
                total += 1
                if -dd > worst:
                    worst = -dd
                if -dd > tol:
                    witnesses.append((-dd, {
                        "q": q, "p": x2, "second_divided_difference": dd,
                    }))
            per_q.append({"q": q, "comply": worst <= tol})
            if worst > max_residual:
                max_residual = worst
    except EvaluationError as exc:
        return _not_applicable(name, q_grid, tol, f"evaluation failed: {exc}")
    return _record(name, q_grid, total, max_residual, tol, _worst(witnesses),
                   details={"per_q": per_q})


def check_continuity(
    f: EntropyFamily,
    points: int = 200,
    scale: float = 100.0,
) -> CheckRecord:
    """Heuristic continuity probe, not a proof.

    Sweeps S_q over a dense q grid for fixed distributions and over a
    simplex segment for fixed q, and compares the largest discrete slope
    against ``scale * k`` (entropy, and hence its slope, carries units of
    k).  A jump discontinuity would blow the slope up as the grid refines;
    smooth and Hoelder-continuous families stay far below.
    """
    name = "continuity_probe"
    threshold = scale * f.k
    d_fixed = Distribution((0.5, 0.25, 0.25))
    qs = np.linspace(0.1, 4.0, points)
    max_slope = 0.0
    where = {}
    try:
        prev = generalized_entropy(d_fixed, f, float(qs[0])).value
        for q0, q1 in zip(qs, qs[1:]):
            cur = generalized_entropy(d_fixed, f, float(q1)).value
            slope = abs(cur - prev) / float(q1 - q0)
            if slope > max_slope:
                max_slope = slope
                where = {"direction": "q", "q": float(q1)}
            prev = cur
        # Segment from the uniform toward a corner of the simplex.
        ts = np.linspace(0.0, 0.98, points)
        for q in (0.5, 2.0):
            prev_v = None
            for t0, t1 in zip(ts, ts[1:]):
                p1 = tuple((1.0 - t1) / 3.0 + (t1 if i == 0 else 0.0)
                           for i in range(3))
                v1 = generalized_entropy(
                    Distribution(tuple(x / math.fsum(p1) for x in p1)), f, q
                ).value
                if prev_v is not None:
                    slope = abs(v1 - prev_v) / float(t1 - t0)
                    if slope > max_slope:
                        max_slope = slope
                        where = {"direction": "p", "q": q, "t": float(t1)}
                prev_v = v1
    except EvaluationError as exc:
        return _not_applicable(name, (), threshold, f"evaluation failed: {exc}")
    witnesses = []
    if max_slope > threshold:
        witnesses.append((max_slope, dict(where, slope=max_slope)))
    return _record(name, (), 3 * (points - 1), max_slope, threshold,
                   _worst(witnesses),
                   details={"note": "heuristic slope bound, not conclusive"})


def derivative_limit_probe(
    g: Callable[[float], float],
    x0: float,
    scales: int = 10,
    tol: float = 1e-3,
) -> CheckRecord:
    """Numerical illustration of the mean-value argument behind taking
    derivative limits: estimate g'(x0) directly (symmetric quotients) and
    via derivative estimates at nearby points x0 +/- delta.

    For a function with a continuous derivative near x0 both routes converge
    and agree.  When the nearby-point estimates fail to settle the verdict
    is not_applicable: the hypothesis is not met, which is exactly what
    happens for a nowhere differentiable deformation away from q = 1.
    """
    name = "derivative_limit_probe"
    if scales < 4:
        raise InputError("scales must be >= 4")
    hs = [0.05 * 2.0 ** (-m) for m in range(scales)]
    try:
        direct = [(g(x0 + h) - g(x0 - h)) / (2.0 * h) for h in hs]
        nearby_plus = []
        nearby_minus = []
        for h in hs:
            s = h / 64.0
            nearby_plus.append((g(x0 + h + s) - g(x0 + h - s)) / (2.0 * s))
            nearby_minus.append((g(x0 - h + s) - g(x0 - h - s)) / (2.0 * s))
    except (EvaluationError, QentropyError) as exc:
        return _not_applicable(name, (x0,), tol, f"evaluation failed: {exc}")
    tail = max(2, scales // 3)

    def settled(seq: list[float]) -> tuple[bool, float]:
        spread = max(seq[-tail:]) - min(seq[-tail:])
        return spread <= tol * (1.0 + abs(seq[-1])), spread

    ok_direct, spread_direct = settled(direct)
    ok_plus, spread_plus = settled(nearby_plus)
    ok_minus, spread_minus = settled(nearby_minus)
    details = {
        "x0": x0,
        "direct_estimate": direct[-1],
        "nearby_estimates": [nearby_plus[-1], nearby_minus[-1]],
        "spreads": {
            "direct": spread_direct,
            "nearby_above": spread_plus,
            "nearby_below": spread_minus,
        },
    }
    if not (ok_direct and ok_plus and ok_minus):
        return _not_applicable(
            name, (x0,), tol,
            "difference quotients do not converge near x0; "
            "derivative-limit reasoning does not apply",
            details,
        )
    mismatch = max(abs(nearby_plus[-1] - direct[-1]),
                   abs(nearby_minus[-1] - direct[-1]))
    residual = mismatch / (1.0 + abs(direct[-1]))
    witnesses = []
    if residual > tol:
        witnesses.append((residual, dict(details)))
    return _record(name, (x0,), 3 * scales, residual, tol, _worst(witnesses),
                   details=details)


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


@dataclass
class AxiomReport:
    """Family spec echo, config echo, and the ordered check records."""

    family: dict
    config: dict
    checks: list[CheckRecord]

    def check(self, name: str) -> CheckRecord:
        for rec in self.checks:
            if rec.name == name:
                return rec
        raise KeyError(name)

    @property
    def all_pass(self) -> bool:
        return all(rec.verdict != "fail" for rec in self.checks)

    @property
    def failed_names(self) -> list[str]:
        return [rec.name for rec in self.checks if rec.verdict == "fail"]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "config": self.config,
            "checks": [asdict(rec) for rec in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"


def run_full_report(f: EntropyFamily, config: CheckConfig | None = None) -> AxiomReport:
    """Run every check against the family; deterministic for a fixed seed."""
    cfg = config or CheckConfig()
    dists = [Distribution(p) for p in cfg.dists]
    refinements = sample_refinement(
        cfg.refinement_rows, cfg.refinement_max_m, cfg.refinement_count,
        _check_seed(cfg.seed, "additivity"),
    )
    checks = [
        check_continuity(f, cfg.continuity_points, cfg.continuity_scale),
        check_maximality(f, cfg.q_grid, cfg.dims, cfg.maximality_samples, cfg.seed),
        check_expandability(f, dists, cfg.q_grid),
        check_generalized_additivity(f, cfg.q_grid, refinements, mode="suyari"),
        check_generalized_additivity(f, cfg.q_grid, refinements, mode="generalized"),
        check_pseudoadditivity(f, cfg.q_grid, cfg.pseudo_samples, cfg.seed),
        check_shannon_limit(f, [d for d in dists if len(d) > 1],
                            cfg.shannon_limit_scales, cfg.shannon_limit_tol),
        check_sign_condition(f, cfg.region_q_grid),
        (
            check_phi_derivative_at_1(f.phi, f.k, cfg.derivative_scales, cfg.limit_tol)
            if _is_tsallis_alpha(f, cfg.region_q_grid)
            else _not_applicable(
                "phi_derivative_at_1", (), cfg.limit_tol,
                "phi'(1) = 1/k characterizes the exponent-q reduction "
                "alpha(q) = 1 - q; this family has a different alpha",
            )
        ),
        check_alpha_phi_limit(f, cfg.derivative_scales, cfg.limit_tol),
        check_constraint_region(f, cfg.region_q_grid, cfg.region_tol),
        check_convexity_of_I(f, cfg.region_q_grid, cfg.convexity_grid_size,
                             cfg.convexity_p_min, cfg.convexity_tol),
        derivative_limit_probe(f.phi, cfg.probe_point, cfg.probe_scales,
                               cfg.probe_tol),
    ]
    # The region and convexity checks test equivalent conditions; their
    # per-q verdicts must agree, and the comparison travels with the report.
    region = next(c for c in checks if c.name == "constraint_region")
    convexity = next(c for c in checks if c.name == "convexity_of_I")
    agreement = _region_convexity_agreement(region, convexity)
    convexity.details["agrees_with_constraint_region"] = agreement
    return AxiomReport(
        family=f.to_spec(),
        config=asdict(cfg),
        checks=checks,
    )


def _region_convexity_agreement(region: CheckRecord, convexity: CheckRecord) -> bool | None:
    if region.verdict == "not_applicable" or convexity.verdict == "not_applicable":
        return None
    region_by_q = {
        rec["q"]: rec["comply"] for rec in region.details.get("per_q", [])
        if rec.get("comply") is not None
    }
    convexity_by_q = {
        rec["q"]: rec["comply"] for rec in convexity.details.get("per_q", [])
    }
    shared = set(region_by_q) & set(convexity_by_q)
    if not shared:
        return None
    return all(region_by_q[q] == convexity_by_q[q] for q in shared)
