#!/usr/bin/env python3
"""Guarded traversals CLI: demos and the law suite."""
import asyncio
import sys

import click
from dotenv import load_dotenv

from .checks import all_checks, get_checks_by_name, quick_checks
from .config import load_config
from .demos import DEMOS, run_demo
from .errors import BudgetError, ConfigError, UnknownDemoError
from .reporter import Reporter
from .runner import run_checks
from .types import CheckContext, DemoSpec

# Load environment variables from .env file
load_dotenv()

# sysexits.h EX_USAGE
EX_USAGE = 64


class GuardedGroup(click.Group):
    """Maps usage and configuration errors to exit status 64."""

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            return super().main(*args, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(EX_USAGE)
        except ConfigError as e:
            click.echo(f"Configuration error: {e}", err=True)
            sys.exit(EX_USAGE)
        except (UnknownDemoError, BudgetError) as e:
            click.echo(f"Error: {e.args[0]}", err=True)
            sys.exit(EX_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(EX_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)


@click.group(cls=GuardedGroup)
def cli():
    """
    Guarded traversals: productive infinite traversals under a fuel budget.

    \b
    Examples:
        guarded run reader-repeat --env 1 --depth 5
        guarded run maybe-diverges --fuel 1000    # exits 2: divergence expected
        guarded suite --filter gwbeq
        guarded suite --filter fusion --seed 42 --json
    """


@cli.command()
@click.argument("demo")
@click.option("--depth", type=click.IntRange(min=0), help="Observation depth (default GUARDED_DEPTH)")
@click.option("--fuel", type=click.IntRange(min=0), help="Fuel budget (default GUARDED_FUEL)")
@click.option("--seed", type=int, envvar="GUARDED_SEED", help="Random seed")
@click.option("--env", "env_value", type=int, default=1, show_default=True, help="Reader environment")
@click.option("--s0", type=int, default=0, show_default=True, help="Initial update state")
@click.option("--json", "json_output", is_flag=True, help="Output as JSON")
def run(demo, depth, fuel, seed, env_value, s0, json_output):
    """Run one named demo and check its declared terminator.

    Exits 0 when a value-bearing demo meets its terminator, 2 when a demo
    expected to diverge runs out of fuel, and 1 otherwise.
    """
    config = load_config()
    spec = DemoSpec(
        name=demo,
        depth=config.depth if depth is None else depth,
        fuel=config.fuel if fuel is None else fuel,
        seed=config.seed if seed is None else seed,
        env=env_value,
        s0=s0,
    )
    result = run_demo(spec)
    Reporter(json_output=json_output).demo(result)
    sys.exit(result.exit_code)


@cli.command()
@click.option("--filter", "only", help="Run only matching groups or checks (comma-separated)")
@click.option("--quick", is_flag=True, help="Run quick checks only")
@click.option("--seed", type=int, envvar="GUARDED_SEED", help="Random seed")
@click.option("--depth", type=click.IntRange(min=0), help="Observation depth (default GUARDED_DEPTH)")
@click.option("--fuel", type=click.IntRange(min=0), help="Fuel budget (default GUARDED_FUEL)")
@click.option("--samples", type=click.IntRange(min=1), help="Samples per law (default GUARDED_SAMPLES)")
@click.option("--verbose", "-v", is_flag=True, help="Show findings")
@click.option("--json", "json_output", is_flag=True, help="One JSON object per check")
def suite(only, quick, seed, depth, fuel, samples, verbose, json_output):
    """Run the law suite; exits 0 iff every selected check passes."""
    config = load_config()

    # Determine which checks to run
    checks = quick_checks if quick else all_checks
    if only:
        checks = [c for c in get_checks_by_name(only.split(",")) if c in checks]
        if not checks:
            available = sorted({c.group for c in all_checks})
            click.echo(f"No matching checks found. Available groups: {available}", err=True)
            sys.exit(EX_USAGE)

    context = CheckContext(
        seed=config.seed if seed is None else seed,
        samples=config.samples if samples is None else samples,
        depth=config.depth if depth is None else depth,
        fuel=config.fuel if fuel is None else fuel,
        timeout=config.timeout,
    )
    reporter = Reporter(verbose=verbose, json_output=json_output)

    results = asyncio.run(run_checks(checks, context, reporter))

    failures = sum(1 for r in results if not r.success)
    sys.exit(1 if failures > 0 else 0)


@cli.command(name="list")
def list_all():
    """List demos and checks."""
    click.echo("Demos:")
    for demo in DEMOS.values():
        click.echo(f"  {demo.name:<18} {demo.expected.value:<10} {demo.description}")
    click.echo("\nChecks:")
    for check in all_checks:
        marker = "*" if check.quick else " "
        click.echo(f" {marker}{check.group:<13} {check.name:<24} {check.description}")


def main():
    cli()


if __name__ == '__main__':
    main()
