"""
Tests for generating functions
"""
import pytest

from plastic_kit.errors import DegenerateParameters, InadmissibleParams
from plastic_kit.models.poly import Poly
from plastic_kit.services.genfunc_service import GenFuncService
from plastic_kit.services.sequence_service import SeqEngine


def test_padovan_series():
    assert GenFuncService.ogf_series(1, 0, 'P', 9) == [1, 1, 1, 2, 2, 3, 4, 5, 7, 9]


def test_perrin_series():
    assert GenFuncService.ogf_series(1, 0, 'Q', 9) == [3, 0, 2, 3, 2, 5, 5, 7, 10, 12]


def test_odd_padovan_series():
    assert GenFuncService.ogf_series(2, 1, 'P', 5) == [1, 2, 3, 5, 9, 16]


@pytest.mark.parametrize('q', range(-5, 6))
def test_characteristic_denominator(q):
    assert GenFuncService.ogf(1, q, 'P').denom == Poly((1, 0, -1, -1))


@pytest.mark.parametrize('kind', ['P', 'Q'])
@pytest.mark.parametrize('p', range(1, 6))
def test_coefficients_match_the_sequence(p, kind):
    engine = SeqEngine()
    S = engine.padovan if kind == 'P' else engine.perrin
    for q in range(-5, 6):
        series = GenFuncService.ogf_series(p, q, kind, 49)
        assert list(series.coefficients) == [S(p * j + q) for j in range(50)], (p, q)


def test_negative_step_is_formal():
    engine = SeqEngine()
    series = GenFuncService.ogf_series(-2, 3, 'P', 20)
    assert list(series.coefficients) == [engine.padovan(-2 * j + 3) for j in range(21)]


def test_zero_step_is_degenerate():
    with pytest.raises(DegenerateParameters):
        GenFuncService.ogf(0, 1, 'P')


def test_unknown_sequence():
    with pytest.raises(ValueError):
        GenFuncService.ogf(1, 0, 'F')


def test_egf_at_origin():
    checkpoint = GenFuncService.egf_check(1, 0, 0.0, 10)
    assert checkpoint.series_value == 1
    assert checkpoint.residual < 1e-12


def test_egf_padovan():
    assert GenFuncService.egf_check(1, 0, 1.0, 60).residual < 1e-9


def test_egf_perrin():
    checkpoint = GenFuncService.egf_check(2, 3, 0.5, 60, 'Q')
    assert checkpoint.residual < 1e-9
    assert checkpoint.within


@pytest.mark.parametrize('kind', ['P', 'Q'])
@pytest.mark.parametrize('y', [0.25, 1.0])
@pytest.mark.parametrize('q', [-1, 0, 1])
@pytest.mark.parametrize('p', [1, 2, 3])
def test_egf_grid(p, q, y, kind):
    assert GenFuncService.egf_check(p, q, y, 60, kind).residual < 1e-9


def test_short_truncation_stays_within_its_bound():
    checkpoint = GenFuncService.egf_check(1, 0, 1.0, 5)
    assert checkpoint.residual > 1e-9
    assert checkpoint.within


@pytest.mark.parametrize('truncation, y', [(0, 1.0), (10, 2.5), (10, -3.0)])
def test_egf_preconditions(truncation, y):
    with pytest.raises(InadmissibleParams):
        GenFuncService.egf_check(1, 0, y, truncation)
