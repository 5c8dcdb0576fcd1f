"""
Sequence Commands
"""
import click

from plastic_kit import extensions
from plastic_kit.schemas import ZeroSetSchema, to_json
from plastic_kit.utils.decorators import handle_errors


@click.command('term')
@click.option('--seq', 'kind', type=click.Choice(['P', 'Q']), required=True, help='Padovan (P) or Perrin (Q).')
@click.option('--n', 'n', type=int, required=True, help='Index, any integer.')
@click.option('--fast', is_flag=True, help='Use the matrix-power route instead of the memo.')
@handle_errors
def term(kind, n, fast):
    """Print P_n or Q_n."""
    engine = extensions.engine
    value = engine.fast_term(kind, n) if fast else engine.term(kind, n)
    click.echo(str(value))


@click.command('zeros')
@click.option('--lo', type=int, default=None, help='Window start (default from ZERO_WINDOW_LO).')
@click.option('--hi', type=int, default=None, help='Window end (default from ZERO_WINDOW_HI).')
@click.option('--json', 'as_json', is_flag=True, help='Print JSON.')
@click.pass_obj
@handle_errors
def zeros(harness, lo, hi, as_json):
    """Print the indices p in a window where P_p = 0."""
    default_lo, default_hi = harness.config['ZERO_WINDOW']
    zero_set = extensions.engine.padovan_zeros(default_lo if lo is None else lo, default_hi if hi is None else hi)
    if as_json:
        click.echo(to_json(ZeroSetSchema(), zero_set))
    else:
        click.echo(' '.join(str(p) for p in zero_set.indices))


commands = (term, zeros)
