"""
Verification Commands
"""
import logging

import click

from plastic_kit.schemas import ReportSchema, to_json
from plastic_kit.services.runner_service import RunnerService
from plastic_kit.utils.decorators import handle_errors

logger = logging.getLogger(__name__)


@click.command('verify')
@click.option('--id', 'pattern', default='*', show_default=True, help='Catalog id or glob.')
@click.option('--grid', 'grid', default=None, help='Grid override, e.g. "n=0..5;p=-3..3".')
@click.option('--jobs', type=click.IntRange(min=1), default=None, help='Worker processes.')
@click.option('--json', 'json_path', type=click.Path(dir_okay=False, allow_dash=True), default=None,
              help='Write the JSON report here ("-" for standard output).')
@click.option('--timestamp', is_flag=True, help='Record the wall-clock time in the report.')
@click.pass_obj
@click.pass_context
@handle_errors
def verify(ctx, harness, pattern, grid, jobs, json_path, timestamp):
    """Run identity suites over their grids; exit 1 when any non-errata identity fails."""
    jobs = jobs or harness.config['DEFAULT_JOBS']
    report = RunnerService.run_suite(pattern, grid=grid, jobs=jobs, config=harness.config, timestamp=timestamp)

    if json_path:
        with click.open_file(json_path, 'w', encoding='utf-8') as handle:
            handle.write(to_json(ReportSchema(), report) + '\n')

    if json_path != '-':
        for tally in report.results:
            verdict = 'ok' if tally.failed == 0 else ('errata' if tally.errata_watch else 'FAIL')
            click.echo(f'{verdict:<6} {tally.id}: {tally.passes}/{tally.points_tested} pass, '
                       f'{tally.failed} fail, {tally.skipped} skipped')
        for finding in report.errata_findings:
            click.echo(f'finding {finding.id}: {finding.status}'
                       + (f', accepted correction: {finding.accepted_correction}' if finding.accepted_correction else ''))
        summary = report.summary
        click.echo(f"{summary['identities']} identities, {summary['points_tested']} points, "
                   f"{summary['failures']} failures, {summary['skipped']} skipped")

    ctx.exit(report.exit_code)


commands = (verify,)
