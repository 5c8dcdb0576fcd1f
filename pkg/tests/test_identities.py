"""
Tests for the identity catalog
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from plastic_kit.errors import InadmissibleParams, NoMatch, UnknownIdentity
from plastic_kit.models.identity import GenericAlgebraIdentity
from plastic_kit.services.identities import IdentityService, catalog
from plastic_kit.services.identities.base import IdentityRegistry

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=7)
exponents = st.integers(min_value=1, max_value=9)


class TestCatalog:

    def test_listing_is_sorted_and_large(self):
        entries = IdentityService.catalog_list()
        ids = [entry['id'] for entry in entries]
        assert ids == sorted(ids)
        assert len(ids) >= 40
        assert 'neg-index-P' in ids

    def test_every_entry_is_anchored(self):
        for entry in IdentityService.catalog_list():
            assert entry['anchor']['source'], entry['id']
            assert entry['anchor']['statement'], entry['id']

    @pytest.mark.parametrize('identity_id', [
        'neg-index-Q', 'shift-theorem-2', 'lambda-corollary-5', 'addition-formula',
        'ap-sum-Q-special', 'weighted-sum-P', 'product-sum', 'binom-set13-Q',
        'waring-basic-6', 'waring-set10-P', 'double-binom-product-4', 'double-binom-waring-6',
        'gamma-component-lemma-2', 'padovan-unimodular-det', 'algebra-waring-dual',
    ])
    def test_named_entries_registered(self, identity_id):
        assert identity_id in catalog

    def test_errata_watch_entries(self):
        watched = {d.id for d in catalog if d.errata_watch}
        assert {'double-binom-waring-4', 'double-binom-waring-6'} <= watched
        for descriptor in catalog:
            if descriptor.errata_watch:
                assert descriptor.corrections, descriptor.id

    def test_default_grids_name_declared_params(self):
        from plastic_kit.models.grid import parse_grid
        for descriptor in catalog:
            for spec in (descriptor.grid, descriptor.small_grid):
                assert set(parse_grid(spec).names) == set(descriptor.param_names), descriptor.id

    def test_match(self):
        assert [d.id for d in catalog.match('neg-index-*')] == ['neg-index-P', 'neg-index-Q']
        with pytest.raises(NoMatch):
            catalog.match('zzz')

    def test_duplicate_registration(self):
        registry = IdentityRegistry()
        descriptor = catalog.get('neg-index-P')
        registry.add(descriptor)
        with pytest.raises(ValueError):
            registry.add(descriptor)

    def test_register_builds_anchor(self):
        descriptor = catalog.get('addition-formula')
        assert descriptor.anchor.statement.startswith('P_{m+n}')


class TestEvaluate:

    def test_consecutive_sum(self):
        result = IdentityService.evaluate('ap-sum-P-special', {'q': 0, 'n': 3})
        assert (result.lhs, result.rhs, result.passed) == (5, 5, True)

    def test_negative_perrin(self):
        result = IdentityService.evaluate('neg-index-Q', {'n': 3})
        assert (result.lhs, result.rhs, result.passed) == (4, 4, True)

    def test_smallest_waring_point(self):
        result = IdentityService.evaluate('waring-basic-1', {'p': 0, 'n': 1})
        assert result.lhs == 1
        assert result.passed

    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentity):
            IdentityService.evaluate('no-such-id', {'n': 1})

    def test_degenerate_step(self):
        with pytest.raises(InadmissibleParams) as excinfo:
            IdentityService.evaluate('ap-sum-P', {'p': 0, 'q': 0, 'n': 1})
        assert 'p = 0' in excinfo.value.message

    def test_domain_violation(self):
        with pytest.raises(InadmissibleParams):
            IdentityService.evaluate('waring-basic-1', {'p': 0, 'n': 0})
        with pytest.raises(InadmissibleParams):
            IdentityService.evaluate('lambda-corollary-1', {'lam': 2, 'n': 0})

    def test_wrong_parameter_names(self):
        with pytest.raises(InadmissibleParams):
            IdentityService.evaluate('neg-index-P', {'m': 3})

    def test_vanishing_determinant_is_inadmissible(self):
        # P_{-4} = P_{-3} = 0, so the component denominator vanishes at s = 0
        with pytest.raises(InadmissibleParams):
            IdentityService.evaluate('double-binom-waring-2', {'p': 0, 'q': 1, 'n': 2})

    @pytest.mark.parametrize('identity_id, params', [
        ('addition-formula', {'m': -7, 'n': 11}),
        ('ap-sum-Q', {'p': -3, 'q': 4, 'n': 6}),
        ('product-sum', {'p': 2, 'q': -1, 'n': 5}),
        ('binom-set-P', {'s': 13, 'm': 2, 'p': -1, 'n': 7}),
        ('waring-set-Q', {'s': 9, 'm': -3, 'p': 2, 'n': 5}),
        ('double-binom-product-3', {'m': 2, 'p': -3, 'q': 1, 'n': 4}),
        ('gamma-component-lemma-2', {'r': 7, 's': -2, 't': 3}),
        ('padovan-unimodular-det', {'n': -37}),
    ])
    def test_spot_points(self, identity_id, params):
        assert IdentityService.evaluate(identity_id, params).passed

    @settings(max_examples=60, deadline=None)
    @given(st.integers(-40, 40), st.integers(-40, 40))
    def test_addition_formula_property(self, m, n):
        assert IdentityService.evaluate('addition-formula', {'m': m, 'n': n}).passed

    @settings(max_examples=60, deadline=None)
    @given(st.integers(-10, 10), st.integers(-10, 10), st.integers(0, 15))
    def test_progression_sum_under_translation(self, p, q, n):
        assume(p != 0)
        for shift in (0, 25):
            assert IdentityService.evaluate('ap-sum-P', {'p': p, 'q': q + shift, 'n': n}).passed


class TestErrata:

    def test_printed_weighted_sum_fails_for_weighted_sets(self):
        descriptor = catalog.get('weighted-sum-P')
        params = {'s': 9, 'm': 1, 'r': 0, 'n': 1}
        assert not IdentityService.evaluate('weighted-sum-P', params).passed
        assert IdentityService.evaluate_correction(descriptor, descriptor.corrections[0], params).passed

    def test_printed_weighted_sum_holds_for_unit_sets(self):
        assert IdentityService.evaluate('weighted-sum-P', {'s': 1, 'm': 1, 'r': 0, 'n': 3}).passed

    def test_double_waring_step_correction(self):
        descriptor = catalog.get('double-binom-waring-5')
        params = {'p': 1, 'q': 1, 'n': 2}
        assert not IdentityService.evaluate('double-binom-waring-5', params).passed
        assert IdentityService.evaluate_correction(descriptor, descriptor.corrections[0], params).passed


class TestGenericAlgebra:

    def test_waring(self):
        result = IdentityService.evaluate_generic('algebra-waring', 2, 3, {'n': 4})
        assert result.rhs == 97
        assert result.passed

    @pytest.mark.parametrize('n', [0, 1, 5, 12])
    def test_degenerate_binomial(self, n):
        result = IdentityService.evaluate_generic('algebra-binomial', 1, 0, {'n': n})
        assert result.lhs == result.rhs == 1

    def test_dual_waring_needs_distinct_roots(self):
        with pytest.raises(InadmissibleParams):
            IdentityService.evaluate_generic('algebra-waring-dual', 2, 2, {'n': 3})

    def test_single_variable_identity(self):
        assert IdentityService.evaluate_generic('algebra-geometric', Fraction(1, 2), exponents={'n': 6}).passed

    def test_requires_algebra_identity(self):
        with pytest.raises(UnknownIdentity):
            IdentityService.evaluate_generic('neg-index-P', 1, 2, {'n': 1})

    def test_algebra_entries_are_generic(self):
        entries = [d for d in catalog if d.family == 'algebra']
        assert len(entries) == 14
        assert all(isinstance(d, GenericAlgebraIdentity) for d in entries)

    @settings(max_examples=80, deadline=None)
    @given(rationals, rationals, exponents)
    def test_rational_points(self, x, y, n):
        for identity_id in ('algebra-binomial', 'algebra-waring', 'algebra-first-moment',
                            'algebra-binomial-derivative-reflected'):
            assert IdentityService.evaluate_generic(identity_id, x, y, {'n': n}).passed, identity_id

    @settings(max_examples=80, deadline=None)
    @given(rationals, rationals, exponents, st.integers(-4, 4))
    def test_rational_points_with_divisions(self, x, y, n, r):
        assume(x != 0 and y != 0 and x != y)
        for identity_id in ('algebra-weighted-geometric', 'algebra-weighted-shifted', 'algebra-weighted-swapped'):
            assert IdentityService.evaluate_generic(identity_id, x, y, {'n': n, 'r': r}).passed, identity_id
        for identity_id in ('algebra-symmetric-product', 'algebra-waring-dual'):
            assert IdentityService.evaluate_generic(identity_id, x, y, {'n': n}).passed, identity_id
