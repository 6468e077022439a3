# File Name: `cli.py`
# Purpose: Houses the `orthomodular-py` command line front end:
#     validation reports, operation tables, conversions, round trips,
#     catalog access, search, and DOT export.
# Creation Date: 2026-10-19 07:45 PM EDT
# Update History:
# - 2026-10-19 07:45 PM EDT

import logging

import click

from orthomodular_py.catalog import build, list_catalog
from orthomodular_py.functors import roundtrip_P, roundtrip_R, to_omp, to_urp
from orthomodular_py.helpers.dot_export import export_dot
from orthomodular_py.helpers.structure_file import parse, serialize
from orthomodular_py.omp import (
    check_de_morgan,
    check_implication_properties,
    check_lemma1,
    check_orthomodular,
)
from orthomodular_py.order_core import BoundedInvolutivePoset
from orthomodular_py.search import SearchSpec, run_search, stress_up_to
from orthomodular_py.urp import (
    UnsharpResiduatedStructure,
    imp_table_df,
    odot_table_df,
    validate_urp,
)
from orthomodular_py.utls import (
    DEFAULT_WITNESS_CAP,
    PreconditionError,
    StructureFileError,
    TheoremViolationError,
)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class InputError(click.ClickException):
    """An unreadable target: a parse error or an unknown catalog entry."""

    exit_code = EXIT_USAGE


def _load_target(target: str, params: tuple):
    """
    NOT INTENDED TO BE CALLED DIRECTLY BY A USER!

    Resolves `catalog:<name>` (followed by integer parameters)
    or a structure file path.
    """
    if target.startswith("catalog:"):
        name = target[len("catalog:"):]
        try:
            return build(name, params)
        except (LookupError, ValueError) as e:
            raise InputError(str(e))

    if params:
        raise click.UsageError(
            "Parameters are only accepted after a `catalog:<name>` target."
        )
    try:
        with click.open_file(target, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"Cannot read `{target}`: {e}")
    return parse(text)


def _load_or_report(ctx: click.Context, target: str, params: tuple):
    """
    Loads a target; a file whose order data fails the poset laws
    prints the failing report and exits with the violation code.
    """
    try:
        return _load_target(target, params)
    except StructureFileError as e:
        if e.report is not None:
            click.echo(f"{target}: {e}", err=True)
            click.echo(e.report.to_text())
            ctx.exit(EXIT_VIOLATION)
        raise InputError(f"{target}: {e}")


@click.group(context_settings=dict(help_option_names=["-h", "--help"]))
@click.option("-v", "--verbose", count=True,
              help="-v for progress messages, -vv for debug output")
@click.option("--witness-cap", type=click.IntRange(min=1),
              default=DEFAULT_WITNESS_CAP, show_default=True,
              help="Witnesses kept per law")
@click.pass_context
def cli(ctx, verbose, witness_cap):
    """
    Validate, convert, and search finite orthomodular posets and
    unsharp residuated posets.

    TARGET is a structure file or `catalog:<name>` followed by
    the integer parameters of the catalog entry.
    """
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s")
    ctx.ensure_object(dict)
    ctx.obj["witness_cap"] = witness_cap


@cli.command()
@click.argument("target")
@click.argument("params", nargs=-1, type=int)
@click.option("--lemmas", is_flag=True,
              help="Also check the cone decompositions, the properties "
              + "of the implication and De Morgan's laws (posets only)")
@click.option("--require-divisible", is_flag=True,
              help="Fail unless the structure is divisible")
@click.option("--require-idempotent", is_flag=True,
              help="Fail unless the structure is idempotent")
@click.pass_context
def validate(ctx, target, params, lemmas, require_divisible,
             require_idempotent):
    """Print a validation report, one law per line."""
    cap = ctx.obj["witness_cap"]
    structure = _load_or_report(ctx, target, params)
    if isinstance(structure, UnsharpResiduatedStructure):
        report = validate_urp(
            structure,
            witness_cap=cap,
            require_divisible=require_divisible,
            require_idempotent=require_idempotent,
        )
    else:
        report = check_orthomodular(structure, witness_cap=cap)
        if lemmas:
            for extra in (
                check_lemma1(structure, witness_cap=cap),
                check_implication_properties(structure, witness_cap=cap),
                check_de_morgan(structure, witness_cap=cap),
            ):
                report = report.merge(extra)
    click.echo(report.to_text())
    ctx.exit(EXIT_PASS if report.passed else EXIT_VIOLATION)


@cli.command("imp-table")
@click.argument("target")
@click.argument("params", nargs=-1, type=int)
@click.option("--odot", "show_odot", is_flag=True,
              help="Also print the product table")
@click.pass_context
def imp_table(ctx, target, params, show_odot):
    """Print the implication table (rows x, columns y, cells x -> y)."""
    structure = _load_or_report(ctx, target, params)
    if isinstance(structure, BoundedInvolutivePoset):
        try:
            structure = to_urp(structure)
        except PreconditionError as e:
            click.echo(str(e), err=True)
            ctx.exit(EXIT_VIOLATION)
    click.echo(imp_table_df(structure).to_string())
    if show_odot:
        click.echo("")
        click.echo(odot_table_df(structure).to_string())
    ctx.exit(EXIT_PASS)


def _write_output(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    with click.open_file(output, "w", encoding="utf-8") as f:
        f.write(text)
    logging.info(f"Wrote `{output}`.")


@cli.command()
@click.argument("target")
@click.argument("params", nargs=-1, type=int)
@click.option("--to-urp", "direction", flag_value="urp",
              help="Orthomodular poset to unsharp residuated poset")
@click.option("--to-omp", "direction", flag_value="omp",
              help="Unsharp residuated poset to orthomodular poset")
@click.option("-o", "--output", type=click.Path(writable=True, dir_okay=False),
              help="Write the result here instead of to stdout")
@click.pass_context
def convert(ctx, target, params, direction, output):
    """Apply one of the two constructions and print the result."""
    if direction is None:
        raise click.UsageError("Pass either `--to-urp` or `--to-omp`.")
    structure = _load_or_report(ctx, target, params)
    expected = (
        BoundedInvolutivePoset if direction == "urp"
        else UnsharpResiduatedStructure
    )
    if not isinstance(structure, expected):
        raise click.UsageError(
            f"`--to-{direction}` does not apply to `{target}`."
        )
    try:
        result = to_urp(structure) if direction == "urp" else to_omp(structure)
    except PreconditionError as e:
        click.echo(str(e), err=True)
        ctx.exit(EXIT_VIOLATION)
    _write_output(serialize(result), output)
    ctx.exit(EXIT_PASS)


@cli.command()
@click.argument("target")
@click.argument("params", nargs=-1, type=int)
@click.pass_context
def roundtrip(ctx, target, params):
    """Check P(R(P)) = P for a poset, or R(P(R)) for a residuated poset."""
    structure = _load_or_report(ctx, target, params)
    try:
        if isinstance(structure, UnsharpResiduatedStructure):
            report = roundtrip_R(structure)
        else:
            report = roundtrip_P(structure)
    except PreconditionError as e:
        click.echo(str(e), err=True)
        ctx.exit(EXIT_VIOLATION)
    click.echo(report.to_text())
    ctx.exit(EXIT_PASS if report.equal else EXIT_VIOLATION)


@cli.command()
@click.argument("name", required=False)
@click.argument("params", nargs=-1, type=int)
@click.pass_context
def catalog(ctx, name, params):
    """List the catalog, or print a catalog structure as a structure file."""
    if name is None:
        click.echo(list_catalog().to_string(index=False))
        ctx.exit(EXIT_PASS)
    structure = _load_target(f"catalog:{name}", params)
    click.echo(serialize(structure), nl=False)
    ctx.exit(EXIT_PASS)


@cli.command()
@click.option("--size", type=int, required=True, help="Carrier size")
@click.option("--class", "structure_class",
              type=click.Choice(["orthomodular-poset", "involutive-poset"]),
              default="orthomodular-poset", show_default=True)
@click.option("--canonical/--labeled", default=True, show_default=True,
              help="One structure per isomorphism class, or every labeling")
@click.option("--stress", is_flag=True,
              help="Check both constructions on every orthomodular poset "
              + "of size 2 up to --size")
@click.option("--emit", type=click.Choice(["count", "stream"]),
              default="count", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1,
              show_default=True, help="Worker processes")
@click.option("--cache/--no-cache", default=False, show_default=True,
              help="Reuse canonical results under ~/.orthomodular_py/search/")
@click.option("--progress", is_flag=True, help="Show a progress bar")
@click.pass_context
def search(ctx, size, structure_class, canonical, stress, emit, jobs, cache,
           progress):
    """Enumerate small structures, or stress test the constructions."""
    if stress:
        if structure_class != "orthomodular-poset":
            raise click.UsageError(
                "`--stress` only applies to `--class orthomodular-poset`."
            )
        try:
            df = stress_up_to(
                size, canonical=canonical, jobs=jobs,
                progress=progress, use_cache=cache,
            )
        except ValueError as e:
            raise click.UsageError(str(e))
        except TheoremViolationError as e:
            click.echo(str(e), err=True)
            click.echo(e.serialized, nl=False)
            ctx.exit(EXIT_VIOLATION)
        click.echo(df.to_string(index=False))
        ctx.exit(EXIT_PASS)

    try:
        spec = SearchSpec(
            size=size,
            structure_class=structure_class,
            canonical=canonical,
            emit=emit,
            jobs=jobs,
        )
    except ValueError as e:
        raise click.UsageError(str(e))
    result = run_search(spec, progress=progress, use_cache=cache)
    for structure in result.structures:
        click.echo(serialize(structure))
    click.echo(result.to_dataframe().to_string(index=False))
    ctx.exit(EXIT_PASS)


@cli.command("export-dot")
@click.argument("target")
@click.argument("params", nargs=-1, type=int)
@click.option("--show-involution", is_flag=True,
              help="Add dashed edges between complementary elements")
@click.option("-o", "--output", type=click.Path(writable=True, dir_okay=False),
              help="Write the DOT text here instead of to stdout")
@click.pass_context
def export_dot_command(ctx, target, params, show_involution, output):
    """Print the order diagram as graphviz DOT text."""
    structure = _load_or_report(ctx, target, params)
    _write_output(export_dot(structure, show_involution=show_involution), output)
    ctx.exit(EXIT_PASS)


def run(argv: list | None = None) -> int:
    """
    Runs the command line front end and returns its exit code:
    0 when every check passes, 1 when violations were found,
    2 for usage and parse errors.

    Usage
    ----------
    ```python
    from orthomodular_py.cli import run

    code = run(["roundtrip", "catalog:even_subsets", "6"])
    ```
    """
    try:
        rv = cli.main(
            args=argv, prog_name="orthomodular-py", standalone_mode=False
        )
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_VIOLATION
    return rv if isinstance(rv, int) else EXIT_PASS


if __name__ == "__main__":
    cli()
