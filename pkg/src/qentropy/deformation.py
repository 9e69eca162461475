"""Deformation pairs (phi, alpha) and entropy family specifications.

A deformation function is one of a closed set of parametric kinds rather
than arbitrary user code, so families stay pure, serializable, and easy to
round-trip through JSON:

    tsallis_phi        phi(q) = (q - 1) / k
    negated_phi        phi(q) = 1 - q            (wrong sign, for failure tests)
    one_minus_q_alpha  alpha(q) = 1 - q
    power_alpha        alpha(q) = (1 - q) |q - 1|^(gamma - 1),  gamma > 0
    power_phi          phi(q) = (q - 1) |q - 1|^(gamma - 1) / k
    weierstrass_phi    (q - 1)/k * (W(q-1) + 2 W(0)) / (3 W(0))
    tabulated          linear interpolation on a sorted (q, value) grid

power_phi is the sign-correct partner of power_alpha: the pair satisfies
alpha(q)/phi(q) = -k identically, giving a non-Tsallis family that meets
the same validity conditions.  Tabulated functions refuse extrapolation so
a sloppy grid cannot silently corrupt limit checks near q = 1.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    DomainError,
    EvaluationError,
    InvalidFamilySpec,
    NonPositiveK,
    OutOfTableRange,
)
from .weierstrass import WeierstrassParams, eval_phi_counterexample

_KINDS = (
    "tsallis_phi",
    "negated_phi",
    "one_minus_q_alpha",
    "power_alpha",
    "power_phi",
    "weierstrass_phi",
    "tabulated",
)

# Kinds whose formula contains the entropy unit constant; they receive the
# family-level k when a family is assembled from a JSON spec.
SCALED_KINDS = ("tsallis_phi", "power_phi", "weierstrass_phi")

FAMILY_POINT_TOL = 1e-12


@dataclass(frozen=True)
class DeformationFunction:
    """One deformation function; evaluable for all q > 0 via ``__call__``."""

    kind: str
    k: float = 1.0
    gamma: float = 1.0
    wparams: WeierstrassParams | None = None
    table: tuple[tuple[float, float], ...] | None = None

    def __call__(self, q: float) -> float:
        if not q > 0.0:
            raise DomainError(f"q must be positive, got {q!r}")
        d = q - 1.0
        if self.kind == "tsallis_phi":
            return d / self.k
        if self.kind in ("negated_phi", "one_minus_q_alpha"):
            return -d
        if self.kind == "power_alpha":
            # (1-q)|q-1|^(gamma-1) written as -sign(d)|d|^gamma, which is
            # also well defined at q = 1 for gamma < 1.
            return -math.copysign(abs(d) ** self.gamma, d)
        if self.kind == "power_phi":
            return math.copysign(abs(d) ** self.gamma, d) / self.k
        if self.kind == "weierstrass_phi":
            return eval_phi_counterexample(self.wparams, self.k, q)
        if self.kind == "tabulated":
            return self._interpolate(q)
        raise InvalidFamilySpec(f"unknown kind {self.kind!r}")

    def _interpolate(self, q: float) -> float:
        qs = [p[0] for p in self.table]
        if q < qs[0] or q > qs[-1]:
            raise OutOfTableRange(
                f"q={q!r} outside tabulated range [{qs[0]!r}, {qs[-1]!r}]"
            )
        i = bisect_right(qs, q)
        if i == len(qs):
            return self.table[-1][1]
        q0, v0 = self.table[i - 1]
        q1, v1 = self.table[i]
        return v0 + (v1 - v0) * (q - q0) / (q1 - q0)

    def to_spec(self) -> dict:
        """JSON-able description; the k of scaled kinds lives at family level."""
        if self.kind == "weierstrass_phi":
            return {
                "kind": self.kind,
                "a": self.wparams.a,
                "b": self.wparams.b,
                "eps": self.wparams.eps,
            }
        if self.kind in ("power_alpha", "power_phi"):
            return {"kind": self.kind, "gamma": self.gamma}
        if self.kind == "tabulated":
            return {"kind": self.kind, "points": [list(p) for p in self.table]}
        return {"kind": self.kind}


def tsallis_phi(k: float = 1.0) -> DeformationFunction:
    if k <= 0.0:
        raise NonPositiveK(f"k must be positive, got {k!r}")
    return DeformationFunction("tsallis_phi", k=k)


def negated_phi() -> DeformationFunction:
    return DeformationFunction("negated_phi")


def one_minus_q_alpha() -> DeformationFunction:
    return DeformationFunction("one_minus_q_alpha")


def power_alpha(gamma: float) -> DeformationFunction:
    if gamma <= 0.0:
        raise InvalidFamilySpec(f"gamma must be positive, got {gamma!r}")
    return DeformationFunction("power_alpha", gamma=gamma)


def power_phi(gamma: float, k: float = 1.0) -> DeformationFunction:
    if gamma <= 0.0:
        raise InvalidFamilySpec(f"gamma must be positive, got {gamma!r}")
    if k <= 0.0:
        raise NonPositiveK(f"k must be positive, got {k!r}")
    return DeformationFunction("power_phi", gamma=gamma, k=k)


def weierstrass_phi(params: WeierstrassParams, k: float = 1.0) -> DeformationFunction:
    if k <= 0.0:
        raise NonPositiveK(f"k must be positive, got {k!r}")
    return DeformationFunction("weierstrass_phi", k=k, wparams=params)


def tabulated(points: Sequence[Sequence[float]]) -> DeformationFunction:
    pts = tuple((float(q), float(v)) for q, v in points)
    if len(pts) < 2:
        raise InvalidFamilySpec("tabulated function needs at least 2 points")
    for (q0, _), (q1, _) in zip(pts, pts[1:]):
        if not q1 > q0:
            raise InvalidFamilySpec("tabulated q grid must be strictly increasing")
    return DeformationFunction("tabulated", table=pts)


@dataclass(frozen=True)
class EntropyFamily:
    """A deformation pair (phi, alpha) plus the unit constant k.

    Constructing with validate=True (the default) checks phi(1) = 0 and
    alpha(1) = 0 by direct evaluation.  validate=False skips those checks
    and marks the family as unvalidated: entropy values are then allowed to
    go negative, which is what the axiom checks need to demonstrate failures
    of deliberately broken families.
    """

    phi: DeformationFunction
    alpha: DeformationFunction
    k: float
    validated: bool = True

    def __post_init__(self) -> None:
        if self.k <= 0.0:
            raise NonPositiveK(f"k must be positive, got {self.k!r}")
        if self.validated:
            for label, func in (("phi", self.phi), ("alpha", self.alpha)):
                try:
                    at_1 = func(1.0)
                except EvaluationError as exc:
                    raise InvalidFamilySpec(
                        f"{label} cannot be evaluated at q = 1: {exc}"
                    ) from exc
                if abs(at_1) > FAMILY_POINT_TOL:
                    raise InvalidFamilySpec(
                        f"{label}(1) = {at_1!r}, must vanish within {FAMILY_POINT_TOL}"
                    )

    def eval_phi(self, q: float) -> float:
        return self.phi(q)

    def eval_alpha(self, q: float) -> float:
        return self.alpha(q)

    @property
    def family_id(self) -> str:
        spec = self.to_spec()
        return json.dumps(spec, sort_keys=True, separators=(",", ":"))

    def to_spec(self) -> dict:
        spec = {
            "phi": self.phi.to_spec(),
            "alpha": self.alpha.to_spec(),
            "k": self.k,
        }
        if not self.validated:
            spec["validate"] = False
        return spec


def tsallis_family(k: float = 1.0) -> EntropyFamily:
    """phi(q) = (q-1)/k with alpha(q) = 1-q: the Tsallis entropy family."""
    return EntropyFamily(tsallis_phi(k), one_minus_q_alpha(), k)


def power_family(gamma: float, k: float = 1.0) -> EntropyFamily:
    """Non-Tsallis pair with alpha/phi = -k identically (gamma = 1 is Tsallis)."""
    return EntropyFamily(power_phi(gamma, k), power_alpha(gamma), k)


def weierstrass_family(
    a: float = 0.5, b: int = 13, eps: float = 1e-12, k: float = 1.0
) -> EntropyFamily:
    """The counterexample family: phi differentiable only at q = 1."""
    params = WeierstrassParams(a, b, eps)
    return EntropyFamily(weierstrass_phi(params, k), one_minus_q_alpha(), k)


def _function_from_spec(spec: Mapping, field: str, k: float) -> DeformationFunction:
    if not isinstance(spec, Mapping):
        raise InvalidFamilySpec(f"field {field!r} must be an object")
    kind = spec.get("kind")
    if kind not in _KINDS:
        raise InvalidFamilySpec(
            f"field {field!r}: unknown kind {kind!r}, expected one of {_KINDS}"
        )
    if kind == "tsallis_phi":
        return tsallis_phi(k)
    if kind == "negated_phi":
        return negated_phi()
    if kind == "one_minus_q_alpha":
        return one_minus_q_alpha()
    if kind in ("power_alpha", "power_phi"):
        gamma = spec.get("gamma")
        if not isinstance(gamma, (int, float)) or not gamma > 0:
            raise InvalidFamilySpec(
                f"field {field!r}: 'gamma' must be a positive number, got {gamma!r}"
            )
        if kind == "power_alpha":
            return power_alpha(float(gamma))
        return power_phi(float(gamma), k)
    if kind == "weierstrass_phi":
        for name in ("a", "b"):
            if name not in spec:
                raise InvalidFamilySpec(f"field {field!r}: missing '{name}'")
        a = spec["a"]
        b = spec["b"]
        eps = spec.get("eps", 1e-12)
        if not isinstance(a, (int, float)):
            raise InvalidFamilySpec(f"field {field!r}: 'a' must be a number")
        if not isinstance(b, int):
            raise InvalidFamilySpec(f"field {field!r}: 'b' must be an integer")
        if not isinstance(eps, (int, float)):
            raise InvalidFamilySpec(f"field {field!r}: 'eps' must be a number")
        return weierstrass_phi(WeierstrassParams(float(a), b, float(eps)), k)
    # tabulated
    points = spec.get("points")
    if not isinstance(points, Sequence) or isinstance(points, (str, bytes)):
        raise InvalidFamilySpec(f"field {field!r}: 'points' must be a list of pairs")
    try:
        return tabulated([(p[0], p[1]) for p in points])
    except (TypeError, IndexError) as exc:
        raise InvalidFamilySpec(
            f"field {field!r}: 'points' entries must be (q, value) pairs"
        ) from exc


def family_from_spec(spec: Mapping) -> EntropyFamily:
    """Parse a family spec document, naming the offending field on error.

    Schema: {"phi": {"kind": ..., ...}, "alpha": {"kind": ..., ...},
    "k": positive number, "validate": optional bool}.  Kinds whose formula
    contains k (tsallis_phi, power_phi, weierstrass_phi) take it from the
    family-level "k" so there is a single source of truth for units.
    """
    if not isinstance(spec, Mapping):
        raise InvalidFamilySpec("family spec must be a JSON object")
    if "k" not in spec:
        raise InvalidFamilySpec("field 'k': missing")
    k = spec["k"]
    if isinstance(k, bool) or not isinstance(k, (int, float)) or not k > 0:
        raise InvalidFamilySpec(f"field 'k': must be a positive number, got {k!r}")
    if "phi" not in spec:
        raise InvalidFamilySpec("field 'phi': missing")
    if "alpha" not in spec:
        raise InvalidFamilySpec("field 'alpha': missing")
    validate = spec.get("validate", True)
    if not isinstance(validate, bool):
        raise InvalidFamilySpec(f"field 'validate': must be a boolean, got {validate!r}")
    phi = _function_from_spec(spec["phi"], "phi", float(k))
    alpha = _function_from_spec(spec["alpha"], "alpha", float(k))
    return EntropyFamily(phi, alpha, float(k), validated=validate)
