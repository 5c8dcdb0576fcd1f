"""
Tests for the command-line surface
"""
import json

import pytest

from plastic_kit.services.identities import catalog


@pytest.mark.parametrize('args, expected', [
    (['term', '--seq', 'P', '--n', '-17'], '0'),
    (['term', '--seq', 'Q', '--n', '12'], '29'),
    (['term', '--seq', 'P', '--n', '30', '--fast'], '3329'),
    (['term', '--seq', 'Q', '--n', '-30'], '-87'),
])
def test_term(cli, runner, args, expected):
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.output.strip() == expected


def test_term_rejects_unknown_sequence(cli, runner):
    result = runner.invoke(cli, ['term', '--seq', 'F', '--n', '3'])
    assert result.exit_code == 2


def test_zeros_default_window(cli, runner):
    result = runner.invoke(cli, ['zeros'])
    assert result.exit_code == 0
    assert result.output.split() == ['-17', '-8', '-4', '-3', '-1']


def test_zeros_json(cli, runner):
    result = runner.invoke(cli, ['zeros', '--lo', '-5', '--hi', '5', '--json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data == {'indices': [-4, -3, -1], 'window': {'hi': 5, 'lo': -5}}
    assert result.output == json.dumps(data, sort_keys=True, indent=2) + '\n'


def test_zeros_empty_window(cli, runner):
    result = runner.invoke(cli, ['zeros', '--lo', '3', '--hi', '1'])
    assert result.exit_code == 2
    assert 'Error:' in result.output


def test_catalog_listing(cli, runner):
    result = runner.invoke(cli, ['catalog'])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == len(catalog)
    assert any('[errata-watch]' in line for line in lines)


def test_catalog_json(cli, runner):
    result = runner.invoke(cli, ['catalog', '--json'])
    assert result.exit_code == 0
    entries = json.loads(result.output)
    ids = [entry['id'] for entry in entries]
    assert ids == sorted(ids)
    assert 'neg-index-P' in ids
    assert {'id', 'title', 'family', 'anchor', 'params', 'default_grid', 'errata_watch'} <= set(entries[0])


def test_verify_writes_report(cli, runner, tmp_path):
    path = tmp_path / 'report.json'
    result = runner.invoke(cli, ['verify', '--id', 'neg-index-*', '--grid', 'n=-3..3', '--json', str(path)])
    assert result.exit_code == 0
    assert '2 identities, 14 points, 0 failures' in result.output

    report = json.loads(path.read_text())
    assert set(report) == {'version', 'run', 'results', 'errata_findings', 'summary'}
    assert report['summary']['ok'] is True
    assert report['run']['grid_override'] == 'n=-3..3'
    assert [r['id'] for r in report['results']] == ['neg-index-P', 'neg-index-Q']


def test_verify_json_to_stdout(cli, runner):
    result = runner.invoke(cli, ['verify', '--id', 'neg-index-Q', '--grid', 'n=0..4', '--json', '-'])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report['summary']['points_tested'] == 5


def test_verify_reports_errata_without_failing(cli, runner, tmp_path):
    path = tmp_path / 'report.json'
    result = runner.invoke(cli, ['verify', '--id', 'double-binom-waring-5', '--json', str(path)])
    assert result.exit_code == 0
    assert 'finding double-binom-waring-5: counterexample' in result.output

    finding = json.loads(path.read_text())['errata_findings'][0]
    assert finding['status'] == 'counterexample'
    assert finding['first_counterexample']['pass'] is False
    assert finding['accepted_correction'] == 'j coefficient -6p in place of -8p'


def test_verify_unknown_id(cli, runner):
    result = runner.invoke(cli, ['verify', '--id', 'no-such-id'])
    assert result.exit_code == 2
    assert 'no-such-id' in result.output


@pytest.mark.parametrize('grid', ['n=5..1', 'n=0..', 'z=0..3'])
def test_verify_bad_grid(cli, runner, grid):
    result = runner.invoke(cli, ['verify', '--id', 'neg-index-P', '--grid', grid])
    assert result.exit_code == 2


def test_verify_config_file(cli, runner, tmp_path):
    config_path = tmp_path / 'harness.json'
    config_path.write_text(json.dumps({'grids': {'neg-index-*': 'n=0..1'}}))
    result = runner.invoke(cli, ['--config', str(config_path), 'verify', '--id', 'neg-index-*'])
    assert result.exit_code == 0
    assert '2 identities, 4 points' in result.output


def test_missing_config_file(cli, runner, tmp_path):
    result = runner.invoke(cli, ['--config', str(tmp_path / 'absent.json'), 'catalog'])
    assert result.exit_code == 2


def test_expand_ogf(cli, runner):
    result = runner.invoke(cli, ['expand', '--seq', 'P', '--p', '1', '--q', '0'])
    assert result.exit_code == 0
    assert result.output.strip() == '1 1 1 2 2 3 4 5 7 9'


def test_expand_ogf_json(cli, runner):
    result = runner.invoke(cli, ['expand', '--seq', 'Q', '--p', '1', '--q', '0', '--order', '4', '--json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['coefficients'] == ['3', '0', '2', '3', '2']
    assert data['denominator'] == ['1', '0', '-1', '-1']


def test_expand_degenerate_step(cli, runner):
    result = runner.invoke(cli, ['expand', '--seq', 'P', '--p', '0', '--q', '1'])
    assert result.exit_code == 2


def test_expand_egf(cli, runner):
    result = runner.invoke(cli, ['expand', '--kind', 'egf', '--seq', 'P', '--p', '2', '--q', '1', '--json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['within'] is True
    assert data['residual'] < 1e-9


def test_expand_egf_out_of_range(cli, runner):
    result = runner.invoke(cli, ['expand', '--kind', 'egf', '--seq', 'P', '--p', '1', '--q', '0', '--y', '3'])
    assert result.exit_code == 2


def test_roots(cli, runner):
    result = runner.invoke(cli, ['roots', '--json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert abs(data['alpha'] - 1.324717957244746) < 1e-12
    assert abs(data['vandermonde_modulus'] - 23 ** 0.5) < 1e-9
