import math

import numpy as np
import pytest

from qentropy.deformation import (
    EntropyFamily,
    family_from_spec,
    negated_phi,
    one_minus_q_alpha,
    power_alpha,
    power_family,
    power_phi,
    tabulated,
    tsallis_family,
    tsallis_phi,
    weierstrass_family,
    weierstrass_phi,
)
from qentropy.errors import (
    DomainError,
    InvalidFamilySpec,
    NonPositiveK,
    OutOfTableRange,
)
from qentropy.weierstrass import WeierstrassParams


class TestKinds:
    def test_tsallis_phi_values(self):
        phi = tsallis_phi(1.0)
        assert phi(2.0) == 1.0
        assert phi(1.0) == 0.0

    def test_negated_phi(self):
        assert negated_phi()(2.0) == -1.0

    def test_one_minus_q_alpha(self):
        alpha = one_minus_q_alpha()
        assert alpha(2.0) == -1.0
        assert alpha(1.0) == 0.0

    def test_power_alpha_hand_value(self):
        # (1 - 0.5) * |0.5 - 1|^(2-1) = 0.5 * 0.5
        assert power_alpha(2.0)(0.5) == 0.25

    def test_power_alpha_defined_at_one_for_small_gamma(self):
        assert power_alpha(0.5)(1.0) == 0.0

    def test_power_phi_is_sign_correct(self):
        phi = power_phi(2.0, k=1.0)
        assert phi(2.0) == 1.0
        assert phi(0.5) == -0.25
        assert phi(1.0) == 0.0

    def test_rejects_nonpositive_q(self):
        with pytest.raises(DomainError):
            tsallis_phi(1.0)(0.0)

    def test_rejects_bad_gamma(self):
        with pytest.raises(InvalidFamilySpec):
            power_alpha(0.0)

    def test_weierstrass_phi_vanishes_at_one(self):
        phi = weierstrass_phi(WeierstrassParams(0.5, 13), k=1.0)
        assert phi(1.0) == 0.0


class TestTabulated:
    def test_interpolates_linearly(self):
        f = tabulated([(0.5, 0.0), (1.5, 1.0)])
        assert f(1.0) == pytest.approx(0.5, abs=1e-15)
        assert f(0.5) == 0.0
        assert f(1.5) == 1.0

    def test_refuses_extrapolation(self):
        f = tabulated([(0.5, 0.0), (1.5, 1.0)])
        with pytest.raises(OutOfTableRange):
            f(2.0)
        with pytest.raises(OutOfTableRange):
            f(0.25)

    def test_needs_two_points(self):
        with pytest.raises(InvalidFamilySpec):
            tabulated([(1.0, 0.0)])

    def test_needs_increasing_grid(self):
        with pytest.raises(InvalidFamilySpec):
            tabulated([(1.0, 0.0), (1.0, 1.0)])


class TestTsallisFamily:
    def test_definitional_values(self):
        f = tsallis_family(1.0)
        assert f.eval_phi(2.0) == 1.0
        assert f.eval_alpha(2.0) == -1.0

    def test_k_scaling(self):
        assert tsallis_family(2.0).eval_phi(2.0) == 0.5

    def test_rejects_k_zero(self):
        with pytest.raises(NonPositiveK):
            tsallis_family(0.0)

    def test_alpha_phi_ratio_near_one(self):
        # alpha/phi must approach -k; for this family it is -k identically.
        for k in (1.0, 2.0):
            f = tsallis_family(k)
            for j in range(3, 9):
                for q in (1.0 + 10.0 ** (-j), 1.0 - 10.0 ** (-j)):
                    assert abs(f.eval_alpha(q) / f.eval_phi(q) + k) <= 1e-9


@pytest.mark.parametrize("family", [
    tsallis_family(1.0),
    tsallis_family(2.0),
    weierstrass_family(),
    power_family(2.0),
])
def test_sign_condition_on_grid(family):
    for q in np.linspace(0.05, 4.0, 80):
        q = float(q)
        if abs(q - 1.0) < 1e-9:
            continue
        phi_q = family.eval_phi(q)
        assert phi_q != 0.0
        assert math.copysign(1.0, phi_q) == math.copysign(1.0, q - 1.0)


@pytest.mark.parametrize("family", [tsallis_family(1.0), power_family(2.0)])
def test_constraint_region_on_grid(family):
    # alpha <= 0 where phi > 0, alpha in [0, 1] where phi < 0.
    for q in np.linspace(0.05, 4.0, 80):
        q = float(q)
        if abs(q - 1.0) < 1e-9:
            continue
        phi_q, alpha_q = family.eval_phi(q), family.eval_alpha(q)
        if phi_q > 0:
            assert alpha_q <= 0.0
        else:
            assert 0.0 <= alpha_q <= 1.0


class TestEntropyFamilyValidation:
    def test_requires_vanishing_at_one(self):
        with pytest.raises(InvalidFamilySpec):
            EntropyFamily(tsallis_phi(1.0), tabulated([(0.1, 0.5), (4.0, 0.5)]), 1.0)

    def test_validate_false_skips_checks(self):
        f = EntropyFamily(
            tsallis_phi(1.0), tabulated([(0.1, 0.5), (4.0, 0.5)]), 1.0,
            validated=False,
        )
        assert f.eval_alpha(2.0) == 0.5

    def test_table_not_covering_one_is_a_spec_error(self):
        with pytest.raises(InvalidFamilySpec):
            EntropyFamily(tabulated([(2.0, 1.0), (4.0, 3.0)]), one_minus_q_alpha(), 1.0)

    def test_k_must_be_positive(self):
        with pytest.raises(NonPositiveK):
            EntropyFamily(tsallis_phi(1.0), one_minus_q_alpha(), -1.0)


class TestFamilySpec:
    def test_parse_minimal_tsallis(self):
        f = family_from_spec({
            "phi": {"kind": "tsallis_phi"},
            "alpha": {"kind": "one_minus_q_alpha"},
            "k": 2.0,
        })
        assert f.eval_phi(2.0) == 0.5

    def test_parse_weierstrass(self):
        f = family_from_spec({
            "phi": {"kind": "weierstrass_phi", "a": 0.5, "b": 13, "eps": 1e-12},
            "alpha": {"kind": "one_minus_q_alpha"},
            "k": 1.0,
        })
        assert f.eval_phi(1.0) == 0.0

    def test_round_trip(self):
        for family in (tsallis_family(2.0), weierstrass_family(), power_family(2.0)):
            again = family_from_spec(family.to_spec())
            assert again == family

    @pytest.mark.parametrize("spec,field", [
        ({"phi": {"kind": "tsallis_phi"}, "alpha": {"kind": "one_minus_q_alpha"}, "k": 0}, "k"),
        ({"alpha": {"kind": "one_minus_q_alpha"}, "k": 1.0}, "phi"),
        ({"phi": {"kind": "nope"}, "alpha": {"kind": "one_minus_q_alpha"}, "k": 1.0}, "phi"),
        ({"phi": {"kind": "power_phi"}, "alpha": {"kind": "one_minus_q_alpha"}, "k": 1.0}, "gamma"),
        ({"phi": {"kind": "weierstrass_phi", "a": 0.5}, "alpha": {"kind": "one_minus_q_alpha"}, "k": 1.0}, "b"),
    ])
    def test_diagnostics_name_offending_field(self, spec, field):
        with pytest.raises(InvalidFamilySpec) as err:
            family_from_spec(spec)
        assert field in str(err.value)

    def test_unvalidated_round_trip(self):
        f = EntropyFamily(
            tsallis_phi(1.0), tabulated([(0.01, 0.5), (10.0, 0.5)]), 1.0,
            validated=False,
        )
        again = family_from_spec(f.to_spec())
        assert again == f
        assert not again.validated
