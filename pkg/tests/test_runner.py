"""
Tests for grid parsing and suite runs
"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from plastic_kit.config import DevelopmentConfig, load_config
from plastic_kit.errors import CapExceeded, EmptyRange, GridParamError, GridSyntaxError, NoMatch
from plastic_kit.models.grid import ParamGrid, parse_grid
from plastic_kit.models.report import IdentityTally, Report
from plastic_kit.schemas import ReportSchema, to_json
from plastic_kit.services.identities import catalog
from plastic_kit.services.identities.double_binomial import J_STEP
from plastic_kit.services.runner_service import MAX_LISTED_FAILURES, RunnerService


def test_parse_single_range():
    grid = parse_grid('n=0..5')
    assert grid.names == ('n',)
    assert [point['n'] for point in grid.points()] == [0, 1, 2, 3, 4, 5]


def test_parse_two_axes():
    grid = parse_grid('p=-3..3;q=0..2')
    assert grid.count == 21
    points = list(grid.points())
    assert points[0] == {'p': -3, 'q': 0}
    assert points[1] == {'p': -3, 'q': 1}
    assert points[-1] == {'p': 3, 'q': 2}


def test_parse_value_list():
    grid = parse_grid('lam=-17,-8,-4; n = 1..2')
    assert grid.ranges['lam'] == (-17, -8, -4)
    assert grid.count == 6


def test_points_are_sorted_by_name():
    grid = parse_grid('q=0..1;p=5..5')
    assert list(grid.points()) == [{'p': 5, 'q': 0}, {'p': 5, 'q': 1}]


def test_empty_range():
    with pytest.raises(EmptyRange):
        parse_grid('n=5..1')


@pytest.mark.parametrize('spec, offset', [
    ('n=0..x', 5),
    ('n=0..5;', 7),
    ('n=0..5 p=1', 7),
    ('=1', 0),
    ('n=1;n=2', 4),
])
def test_syntax_error_offset(spec, offset):
    with pytest.raises(GridSyntaxError) as info:
        parse_grid(spec)
    assert info.value.offset == offset


def test_blank_spec():
    with pytest.raises(GridSyntaxError):
        parse_grid('   ')


def test_cap():
    with pytest.raises(CapExceeded):
        parse_grid('a=0..99;b=0..99', cap=9999)
    assert parse_grid('a=0..99;b=0..99', cap=10000).count == 10000


@given(st.dictionaries(
    st.sampled_from(['m', 'n', 'p', 'q', 'r']),
    st.tuples(st.integers(-50, 50), st.integers(0, 6)),
    min_size=1,
))
def test_format_parses_back(axes):
    grid = ParamGrid({name: tuple(range(lo, lo + width + 1)) for name, (lo, width) in axes.items()})
    assert parse_grid(grid.format()) == grid


def test_merge_replaces_axes():
    merged = parse_grid('n=0..9;p=1..2').merge(parse_grid('n=3..3'))
    assert merged.ranges == {'n': (3,), 'p': (1, 2)}


def test_grid_for_uses_small_scale(config):
    descriptor = catalog.get('neg-index-P')
    assert RunnerService.grid_for(descriptor, config=config).format() == descriptor.small_grid


def test_grid_for_merges_config_globs(config):
    config['GRIDS'] = {'neg-index-*': 'n=0..3', 'shift-*': 'n=9..9'}
    descriptor = catalog.get('neg-index-Q')
    assert RunnerService.grid_for(descriptor, config=config).format() == 'n=0..3'
    assert RunnerService.grid_for(descriptor, 'n=1..1', config).format() == 'n=1'


def test_grid_for_rejects_unknown_names(config):
    with pytest.raises(GridParamError):
        RunnerService.grid_for(catalog.get('neg-index-P'), 'n=0..2;z=1..2', config)


def test_grid_for_applies_cap(config):
    config['POINT_CAP'] = 5
    with pytest.raises(CapExceeded):
        RunnerService.grid_for(catalog.get('neg-index-P'), config=config)


def test_run_negative_index_suite(config):
    report = RunnerService.run_suite('neg-index-*', config=config)
    assert [t.id for t in report.results] == ['neg-index-P', 'neg-index-Q']
    assert report.summary['identities'] == 2
    assert report.summary['points_tested'] == 26
    assert report.summary['failures'] == 0
    assert report.reconciles()
    assert report.exit_code == 0
    assert report.errata_findings == []


def test_inadmissible_point_is_skipped(config):
    report = RunnerService.run_suite('ap-sum-P', grid='p=0..0;q=0..0;n=1..1', config=config)
    tally = report.results[0]
    assert (tally.points_tested, tally.passes, tally.failed, tally.skipped) == (1, 0, 0, 1)


def test_unmatched_filter(config):
    with pytest.raises(NoMatch):
        RunnerService.run_suite('zzz', config=config)


def test_run_record(config):
    report = RunnerService.run_suite('neg-index-P', grid='n=0..2', config=config, timestamp=True)
    assert report.run['filter'] == 'neg-index-P'
    assert report.run['grid_override'] == 'n=0..2'
    assert report.run['grid_scale'] == 'small'
    assert 'timestamp' in report.run


def test_report_is_independent_of_jobs(config):
    config['CHUNK_SIZE'] = 7
    serial = RunnerService.run_suite('shift-theorem-*', config=config, jobs=1)
    parallel = RunnerService.run_suite('shift-theorem-*', config=config, jobs=2)
    assert to_json(ReportSchema(), serial) == to_json(ReportSchema(), parallel)


def test_errata_finding_for_printed_step(config):
    report = RunnerService.run_suite('double-binom-waring-5', config=config)
    finding = report.errata_findings[0]
    assert finding.status == 'counterexample'
    assert finding.points_failed == report.results[0].failed > 0
    assert finding.accepted_correction == J_STEP
    assert finding.first_counterexample.passed is False
    assert len(report.results[0].failures) <= MAX_LISTED_FAILURES
    # failures under watch do not fail the run
    assert report.summary['failures'] == 0
    assert report.exit_code == 0


def test_full_small_catalog_run(config):
    report = RunnerService.run_suite('*', config=config)
    assert report.summary['identities'] == len(catalog)
    assert report.summary['failures'] == 0
    assert report.reconciles()
    for finding in report.errata_findings:
        assert finding.status == 'confirmed' or finding.accepted_correction is not None


@pytest.mark.slow
def test_full_default_catalog_run():
    config = load_config(DevelopmentConfig)
    config.update(GRID_SCALE='default', GRIDS={})
    report = RunnerService.run_suite('*', config=config, jobs=4)
    assert report.summary['identities'] >= 40
    assert report.summary['points_tested'] >= 10 ** 5
    assert report.summary['failures'] == 0
    assert report.reconciles()
    failing = [t.id for t in report.results if t.failed and not t.errata_watch]
    assert failing == []


def test_summary_counts_only_unwatched_failures():
    checked = IdentityTally('a', 'A', False, 'n=0..3', points_tested=4, passes=2, failed=1, skipped=1)
    watched = IdentityTally('b', 'B', True, 'n=0..3', points_tested=4, passes=1, failed=3)
    report = Report(version='1.0', run={}, results=[checked, watched])
    assert report.reconciles()
    assert report.summary['failures'] == 1
    assert report.summary['errata_failures'] == 3
    assert report.exit_code == 1

    checked.failed = 2
    assert not report.reconciles()
