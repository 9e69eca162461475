"""Deformed entropies, information content, and trace-form expectations.

The central quantity is

    S_q(p) = (1 - sum_i p_i^(1 - alpha(q))) / phi(q)

which reduces to the exponent-q form for alpha(q) = 1 - q and to Shannon
entropy -k sum p ln p in the limit q -> 1 whenever alpha(q)/phi(q) -> -k.

Numerical stability near q = 1: the numerator 1 - sum p^e loses digits to
cancellation as the exponent e approaches 1, so it is computed as

    -sum_i p_i * expm1((e - 1) * ln p_i)

which is exact in the e -> 1 limit.  Below |q - 1| < 1e-9 (Q_CROSSOVER) the
quotient itself is abandoned and the Shannon limit -k sum p ln p is returned
directly; the crossover constant is part of the contract and is tested.

Conventions: 0^e = 0 for e > 0 (zero-probability outcomes drop out); a zero
probability with e <= 0 is an error rather than a silently skipped term,
because the true limit diverges there.  Entropy values in [-1e-12, 0) are
clamped to 0; values below -1e-12 raise for validated families, since the
codomain of a valid family is the nonnegative reals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .deformation import EntropyFamily
from .errors import (
    DomainError,
    NegativeEntropy,
    NonPositiveK,
    PhiVanishes,
    ZeroWithNonpositiveExponent,
)
from .simplex import Distribution

Q_CROSSOVER = 1e-9
_CLAMP = 1e-12


@dataclass(frozen=True)
class EntropyValue:
    """An entropy in units of k, tagged with q and the producing family."""

    value: float
    q: float
    family_id: str | None


def _finish(value: float, q: float, family_id: str | None, validated: bool) -> EntropyValue:
    if -_CLAMP <= value < 0.0:
        value = 0.0
    elif value < -_CLAMP and validated:
        raise NegativeEntropy(
            f"entropy {value!r} at q={q!r}; a valid family cannot go negative"
        )
    return EntropyValue(value, q, family_id)


def _check_q(q: float) -> None:
    if not q > 0.0:
        raise DomainError(f"q must be positive, got {q!r}")


def _plogp_sum(probs: tuple[float, ...]) -> float:
    """sum p ln p with the 0 ln 0 = 0 convention."""
    return math.fsum(p * math.log(p) for p in probs if p > 0.0)


def _require_zeros_allowed(probs: tuple[float, ...], e: float) -> None:
    if e <= 0.0 and any(p == 0.0 for p in probs):
        raise ZeroWithNonpositiveExponent(
            f"zero probability with exponent {e!r} <= 0 diverges"
        )


def _phi_at(f: EntropyFamily, q: float) -> float:
    phi_q = f.eval_phi(q)
    if phi_q == 0.0:
        raise PhiVanishes(f"phi({q!r}) = 0 away from q = 1")
    return phi_q


def _deformed_value(probs: tuple[float, ...], offset: float, phi_q: float) -> float:
    """(1 - sum p^(1 + offset)) / phi, with the cancellation-free numerator.

    The exponent enters only through its offset from 1 (offset = q - 1 for
    the exponent-q form, offset = -alpha(q) in general); forming 1 + offset
    and subtracting 1 again would round tiny offsets away.
    """
    num = -math.fsum(
        p * math.expm1(offset * math.log(p)) for p in probs if p > 0.0
    )
    return num / phi_q


def shannon_entropy(d: Distribution, k: float = 1.0) -> EntropyValue:
    """Shannon entropy -k sum p ln p."""
    if k <= 0.0:
        raise NonPositiveK(f"k must be positive, got {k!r}")
    value = -k * _plogp_sum(d.probs)
    return _finish(value, 1.0, None, validated=True)


def suyari_entropy(d: Distribution, f: EntropyFamily, q: float) -> EntropyValue:
    """Exponent-q entropy (1 - sum p^q) / phi(q).

    Inside the crossover window the Shannon limit -k sum p ln p is returned,
    which is the correct limit for any family with phi'(1) = 1/k.
    """
    _check_q(q)
    if abs(q - 1.0) < Q_CROSSOVER:
        value = -f.k * _plogp_sum(d.probs)
    else:
        value = _deformed_value(d.probs, q - 1.0, _phi_at(f, q))
    return _finish(value, q, f.family_id, f.validated)


def generalized_entropy(d: Distribution, f: EntropyFamily, q: float) -> EntropyValue:
    """(1 - sum p^(1 - alpha(q))) / phi(q); equals suyari_entropy when
    alpha(q) = 1 - q, on the identical code path."""
    _check_q(q)
    if abs(q - 1.0) < Q_CROSSOVER:
        value = -f.k * _plogp_sum(d.probs)
    else:
        offset = -f.eval_alpha(q)
        _require_zeros_allowed(d.probs, 1.0 + offset)
        value = _deformed_value(d.probs, offset, _phi_at(f, q))
    return _finish(value, q, f.family_id, f.validated)


def information_content(f: EntropyFamily, q: float, p: float) -> float:
    """Surprise of an outcome of probability p:

        I_q(p) = (p^alpha(q) - 1) / phi(q),    I_1(p) = -k ln p.
    """
    if not 0.0 < p <= 1.0:
        raise DomainError(f"p must be in (0, 1], got {p!r}")
    _check_q(q)
    if abs(q - 1.0) < Q_CROSSOVER:
        return -f.k * math.log(p)
    return math.expm1(f.eval_alpha(q) * math.log(p)) / _phi_at(f, q)


def pseudoadditive_compose(f: EntropyFamily, q: float, i1: float, i2: float) -> float:
    """Composition law for independent surprises:

        i1 (+) i2 = i1 + i2 + phi(q) * i1 * i2.

    phi(1) = 0 makes q = 1 ordinary additivity.
    """
    _check_q(q)
    return i1 + i2 + f.eval_phi(q) * i1 * i2


def trace_expectation(d: Distribution, f: EntropyFamily, q: float) -> EntropyValue:
    """Entropy as the weighted average sum_i e_q(p_i) I_q(p_i) with weight
    e_q(p) = p^(1 - alpha(q)).

    Evaluated term by term as weight times information content, so it is an
    independent route to the same value as generalized_entropy; the two must
    agree to ~1e-12 wherever both are defined.
    """
    _check_q(q)
    if abs(q - 1.0) < Q_CROSSOVER:
        # e_1(p) = p and I_1(p) = -k ln p, so the trace form IS the Shannon
        # sum; using it directly keeps the identity with generalized_entropy
        # exact through the crossover window.
        value = -f.k * _plogp_sum(d.probs)
        return _finish(value, q, f.family_id, f.validated)
    alpha_q = f.eval_alpha(q)
    e = 1.0 - alpha_q
    _require_zeros_allowed(d.probs, e)
    phi_q = _phi_at(f, q)
    terms = []
    for p in d.probs:
        if p == 0.0:
            continue
        z = alpha_q * math.log(p)
        if z > 700.0:
            # expm1 would overflow although the product is finite; use the
            # algebraically equal overflow-free form for this term only.
            terms.append((p - p**e) / phi_q)
        else:
            terms.append(p**e * math.expm1(z) / phi_q)
    return _finish(math.fsum(terms), q, f.family_id, f.validated)
