"""
Generating Function Commands
"""
import click

from plastic_kit.schemas import EgfCheckpointSchema, OgfExpansionSchema, RootsSchema, to_json
from plastic_kit.services.genfunc_service import GenFuncService
from plastic_kit.services.numeric_service import NumericService
from plastic_kit.utils.decorators import handle_errors
from plastic_kit.utils.numbers import format_exact


@click.command('expand')
@click.option('--kind', type=click.Choice(['ogf', 'egf']), default='ogf', show_default=True)
@click.option('--seq', 'seq', type=click.Choice(['P', 'Q']), required=True)
@click.option('--p', 'p', type=int, required=True)
@click.option('--q', 'q', type=int, required=True)
@click.option('--order', type=click.IntRange(min=0), default=9, show_default=True, help='Last ogf coefficient.')
@click.option('--y', 'y', type=float, default=1.0, show_default=True, help='egf evaluation point.')
@click.option('--truncation', type=click.IntRange(min=1), default=60, show_default=True, help='egf terms.')
@click.option('--json', 'as_json', is_flag=True, help='Print JSON.')
@handle_errors
def expand(kind, seq, p, q, order, y, truncation, as_json):
    """Expand sum_j S_{pj+q} y^j (ogf) or check its exponential form (egf)."""
    if kind == 'egf':
        checkpoint = GenFuncService.egf_check(p, q, y, truncation, seq)
        if as_json:
            click.echo(to_json(EgfCheckpointSchema(), checkpoint))
        else:
            click.echo(f'series {checkpoint.series_value.real!r}')
            click.echo(f'closed {checkpoint.determinant_value!r}')
            click.echo(f'residual {checkpoint.residual:.3e} (tail bound {checkpoint.tail_bound:.3e})')
        return

    function = GenFuncService.ogf(p, q, seq)
    series = GenFuncService.ogf_series(p, q, seq, order)
    if as_json:
        expansion = {
            'seq': seq, 'p': p, 'q': q, 'order': series.order,
            'coefficients': series.coefficients,
            'numerator': function.numer.coefficients,
            'denominator': function.denom.coefficients,
        }
        click.echo(to_json(OgfExpansionSchema(), expansion))
    else:
        click.echo(' '.join(format_exact(c) for c in series.coefficients))


@click.command('roots')
@click.option('--json', 'as_json', is_flag=True, help='Print JSON.')
@handle_errors
def roots(as_json):
    """Print the roots of x^3 - x - 1 and the Vandermonde determinant over them."""
    cubic = NumericService.cubic_roots()
    vandermonde = NumericService.vandermonde(cubic)
    data = {
        'alpha': cubic.alpha,
        'beta': cubic.beta,
        'gamma': cubic.gamma,
        'vandermonde': vandermonde,
        'vandermonde_modulus': abs(vandermonde),
    }
    if as_json:
        click.echo(to_json(RootsSchema(), data))
        return
    click.echo(f'alpha {cubic.alpha!r}')
    click.echo(f'beta  {cubic.beta!r}')
    click.echo(f'gamma {cubic.gamma!r}')
    click.echo(f'|V|   {abs(vandermonde)!r}')


commands = (expand, roots)
