"""Command-line interface."""

import json
import logging
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

import click

from .. import __version__
from ..arith.approx import best_approximation, parse_decimal
from ..arith.rational import Ratio
from ..arith.treewalk import address_to_flipword, format_address, format_flipword
from ..config.logs import setup_logging
from ..config.manager import CONFIG_DIR_ENV, AppConfig, ConfigManager
from ..errors import FareyDualityError
from ..models.trees import OutputFormat, TreeKind
from ..trees.catalog import dump_tree
from ..trees.classic import cw_locate, sb_locate
from ..trees.words import christoffel_word
from ..verify.suites import SuiteName, resolve_options, run_suite
from .formats import RATIO, render

logger = logging.getLogger(__name__)


@dataclass
class CliState:
    """Objects shared by every subcommand."""

    manager: ConfigManager
    config: AppConfig


pass_state = click.make_pass_decorator(CliState)


@contextmanager
def usage_errors() -> Iterator[None]:
    """Report library errors as usage errors (exit code 2)."""
    try:
        yield
    except FareyDualityError as e:
        logger.debug(f"Rejected arguments: {e}")
        raise click.UsageError(str(e)) from e


def _log_level(config: AppConfig, verbose: int) -> str:
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return config.log_level


@click.group()
@click.option(
    "--config-dir",
    type=click.Path(file_okay=False, path_type=Path),
    envvar=CONFIG_DIR_ENV,
    default=None,
    help="Directory for config.json and the log file.",
)
@click.option("-v", "--verbose", count=True, help="Log more (-v info, -vv debug).")
@click.version_option(__version__, prog_name="farey-duality")
@click.pass_context
def cli(ctx: click.Context, config_dir: Optional[Path], verbose: int) -> None:
    """Explore the Farey-tree duality between fraction trees, intersection vectors and words."""
    manager = ConfigManager(config_dir)
    config = manager.load()
    setup_logging(manager.config_dir, _log_level(config, verbose))
    logger.debug(f"Loaded configuration from {manager.config_file}")
    ctx.obj = CliState(manager=manager, config=config)


@cli.command()
@click.argument("kind", type=click.Choice([kind.value for kind in TreeKind]))
@click.option("--depth", type=click.IntRange(min=0), default=None, help="Deepest level shown.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice([fmt.value for fmt in OutputFormat]),
    default=None,
    help="Output format.",
)
@pass_state
def tree(state: CliState, kind: str, depth: Optional[int], output_format: Optional[str]) -> None:
    """Print every vertex of a tree down to a depth."""
    depth = state.config.tree_depth if depth is None else depth
    fmt = state.config.tree_format if output_format is None else OutputFormat(output_format)
    with usage_errors():
        dump = dump_tree(TreeKind(kind), depth)
    click.echo(render(dump, fmt))


@cli.command()
@click.argument("tree_kind", metavar="TREE", type=click.Choice(["sb", "cw"]))
@click.argument("fraction", type=RATIO)
def locate(tree_kind: str, fraction: Ratio) -> None:
    """Print the address and flip word of a positive fraction."""
    locator = sb_locate if tree_kind == "sb" else cw_locate
    with usage_errors():
        addr = locator(fraction)
    click.echo(format_address(addr))
    click.echo(format_flipword(address_to_flipword(addr)))


@cli.command()
@click.option("--slope", type=RATIO, required=True, help="Slope y/x of the word.")
def word(slope: Ratio) -> None:
    """Print the Christoffel word of a slope."""
    with usage_errors():
        click.echo(christoffel_word(slope))


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("value")
@click.option("--max-den", type=click.IntRange(min=1), default=None, help="Largest denominator.")
@pass_state
def approx(state: CliState, value: str, max_den: Optional[int]) -> None:
    """Print the best fraction with bounded denominator for an exact decimal.

    VALUE may be negative, as in ``approx -0.75``.
    """
    max_den = state.config.max_den if max_den is None else max_den
    with usage_errors():
        result = best_approximation(parse_decimal(value), max_den)
    click.echo(str(result))


@cli.command()
@click.argument("suite", type=click.Choice([name.value for name in SuiteName]))
@click.option("--depth", type=click.IntRange(min=0), default=None, help="Deepest tree level.")
@click.option("--bound", type=click.IntRange(min=1), default=None, help="Size bound.")
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Random samples.")
@click.option("--seed", type=int, default=None, help="Random seed.")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@pass_state
@click.pass_context
def verify(
    ctx: click.Context,
    state: CliState,
    suite: str,
    depth: Optional[int],
    bound: Optional[int],
    samples: Optional[int],
    seed: Optional[int],
    as_json: bool,
) -> None:
    """Run a verification suite; exit 1 on the first counterexample."""
    name = SuiteName(suite)
    options = resolve_options(name, state.config, depth, bound, samples, seed)
    with usage_errors():
        report = run_suite(name, options)
    click.echo(report.model_dump_json(indent=2) if as_json else report.summary())
    if not report.passed:
        ctx.exit(1)


@cli.group()
def config() -> None:
    """Show or change saved defaults."""


@config.command("show")
@pass_state
def config_show(state: CliState) -> None:
    """Print the current configuration as JSON."""
    click.echo(json.dumps(state.config.model_dump(mode="json"), indent=2))


@config.command("set")
@click.argument("key")
@click.argument("value")
@pass_state
def config_set(state: CliState, key: str, value: str) -> None:
    """Save a new default for KEY."""
    if key not in AppConfig.model_fields:
        raise click.BadParameter(f"Unknown setting {key!r}", param_hint="KEY")
    try:
        updated = state.manager.update(**{key: value})
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="VALUE") from e
    logger.info(f"Saved {key} = {getattr(updated, key)!r}")
    click.echo(f"{key} = {json.dumps(updated.model_dump(mode='json')[key])}")


@config.command("reset")
@pass_state
def config_reset(state: CliState) -> None:
    """Forget every saved default."""
    state.manager.clear()
    click.echo("Configuration reset to defaults")
