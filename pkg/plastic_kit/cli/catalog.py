"""
Catalog Commands
"""
import click

from plastic_kit.schemas import IdentitySummarySchema, to_json
from plastic_kit.services.identities import IdentityService
from plastic_kit.utils.decorators import handle_errors


@click.command('catalog')
@click.option('--json', 'as_json', is_flag=True, help='Print the catalog as JSON.')
@handle_errors
def catalog(as_json):
    """List every identity, sorted by id."""
    entries = IdentityService.catalog_list()
    if as_json:
        click.echo(to_json(IdentitySummarySchema(many=True), entries))
        return

    width = max(len(entry['id']) for entry in entries)
    for entry in entries:
        flag = ' [errata-watch]' if entry['errata_watch'] else ''
        click.echo(f"{entry['id']:<{width}}  {entry['family']:<15}  {entry['title']}{flag}")


commands = (catalog,)
