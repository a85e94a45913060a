"""
Command-line surface of the budget game toolkit

Commands follow the controller split:
- generate wraps the construction families
- cost, best-response, check, dynamics, replay, enumerate and search cover games
- analyze and reduce run the structural validators

Every command prints one JSON envelope on stdout. A BudgetGameError
becomes an error envelope and the process exits with the error's code.
"""

import functools
import logging
from typing import List, Optional

import click
from pydantic import ValidationError

from app.controllers import (
    AnalysisController,
    ConstructionController,
    EquilibriumController,
    GameController,
)
from app.controllers.analysis_controller import CHECKS
from app.controllers.construction_controller import FAMILIES
from app.core import BudgetGameError, Settings, error_response, get_settings, render
from app.core.config import TOOL_NAME, TOOL_VERSION
from app.core.exceptions import USAGE_ERROR
from app.core.response import success_response
from app.models import RunConfig

logger = logging.getLogger(__name__)

VERSIONS = click.Choice(["sum", "max"])
ORACLES = click.Choice(["exact", "swap"])

# Initialize controllers
game_controller = GameController()
equilibrium_controller = EquilibriumController()
construction_controller = ConstructionController()
analysis_controller = AnalysisController()


def _parse_ints(ctx, param, value) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _parse_checks(ctx, param, value) -> List[str]:
    checks = [part.strip() for part in value.split(",") if part.strip()]
    unknown = [check for check in checks if check not in CHECKS]
    if unknown:
        choices = ", ".join(CHECKS)
        raise click.BadParameter(f"unknown checks {unknown}; choose from {choices}")
    return checks


def _meta(
    ctx: click.Context,
    inputs=(),
    output: Optional[str] = None,
    seed: int = 0,
    version: Optional[str] = None,
    order: Optional[str] = None,
) -> dict:
    """Tool version, resolved run configuration and seed of one command"""
    settings: Settings = ctx.obj
    config = RunConfig(
        command=ctx.info_name,
        input_paths=tuple(str(path) for path in inputs if path),
        output_path=output,
        seed=seed,
        candidate_cap=settings.candidate_cap,
        profile_cap=settings.profile_cap,
        vertex_cap=settings.vertex_cap,
        round_limit=settings.round_limit,
        threads=settings.threads,
        version=version,
        order=order,
    )
    return {
        "tool": TOOL_NAME,
        "tool_version": TOOL_VERSION,
        "run_config": config.model_dump(mode="json"),
        "seed": seed,
    }


def _emit(data, message: str, meta: dict) -> None:
    click.echo(render(success_response(data, message=message, meta=meta)))


def handle_errors(command):
    """Render toolkit errors as error envelopes and exit with their code"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except BudgetGameError as error:
            logger.debug(f"{ctx.info_name} failed: {error.message}")
            response, code = error_response(error.message, error.code, error.data)
            click.echo(render(response))
            ctx.exit(code)
        except ValidationError as error:
            response, code = error_response(str(error), USAGE_ERROR)
            click.echo(render(response))
            ctx.exit(code)

    return wrapper


@click.group(name=TOOL_NAME)
@click.version_option(TOOL_VERSION, prog_name=TOOL_NAME)
@click.option("--threads", type=int, help="Worker processes")
@click.option("--candidate-cap", type=int, help="Max strategies per best response")
@click.option("--profile-cap", type=int, help="Max profiles for enumeration")
@click.option("--vertex-cap", type=int, help="Max vertices for word graphs")
@click.option("--round-limit", type=int, help="Default dynamics round limit")
@click.option("--log-level", type=str, help="DEBUG, INFO, WARNING or ERROR")
@click.pass_context
def cli(ctx, threads, candidate_cap, profile_cap, vertex_cap, round_limit, log_level):
    """Bounded-budget network creation games"""
    try:
        settings = get_settings(
            threads=threads,
            candidate_cap=candidate_cap,
            profile_cap=profile_cap,
            vertex_cap=vertex_cap,
            round_limit=round_limit,
            log_level=log_level.upper() if log_level else None,
        )
    except (ValidationError, ValueError) as error:
        raise click.UsageError(f"invalid settings: {error}")
    if not isinstance(logging.getLevelName(settings.log_level), int):
        raise click.UsageError(f"unknown log level {settings.log_level!r}")
    logging.getLogger().setLevel(settings.log_level)
    ctx.obj = settings


# ==================== CONSTRUCTION COMMANDS ====================


@cli.command()
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--k", "k", type=int, help="Family size parameter")
@click.option("--t", "t", type=int, help="Word-graph alphabet size")
@click.option("--budgets", callback=_parse_ints, help="Comma-separated budgets")
@click.option("--cost-version", type=VERSIONS, help="Cost version (theorem3)")
@click.option("--out", "out_dir", type=str, help="Directory for the artifacts")
@click.option("--verify", is_flag=True, help="Check the construction's claims")
@click.option("--samples", type=int, default=0, help="Random deviations to test")
@click.option("--seed", type=int, default=0)
@click.pass_context
@handle_errors
def generate(ctx, family, k, t, budgets, cost_version, out_dir, verify, samples, seed):
    """Build an instance of one construction family"""
    settings: Settings = ctx.obj
    meta = _meta(ctx, output=out_dir, seed=seed, version=cost_version)
    data = construction_controller.generate(
        family,
        k=k,
        t=t,
        budgets=budgets,
        version=cost_version,
        out_dir=out_dir,
        verify=verify,
        samples=samples,
        seed=seed,
        vertex_cap=settings.vertex_cap,
        cap=settings.candidate_cap,
        meta=meta,
    )
    _emit(data, f"generated {family} with n={data['n']}", meta)


# ==================== GAME COMMANDS ====================


@cli.command()
@click.option("--game", required=True)
@click.option("--profile", required=True)
@click.option("--player", type=int, help="1-based player; all players when omitted")
@click.option("--cost-version", type=VERSIONS)
@click.pass_context
@handle_errors
def cost(ctx, game, profile, player, cost_version):
    """Costs and local diameters of a profile"""
    data = game_controller.get_costs(game, profile, player, cost_version)
    _emit(data, "costs computed", _meta(ctx, (game, profile), version=cost_version))


@cli.command("best-response")
@click.option("--game", required=True)
@click.option("--profile", required=True)
@click.option("--player", type=int, required=True, help="1-based player")
@click.option("--mode", type=ORACLES, default="exact")
@click.option("--cost-version", type=VERSIONS)
@click.pass_context
@handle_errors
def best_response(ctx, game, profile, player, mode, cost_version):
    """Best response of one player against the others"""
    settings: Settings = ctx.obj
    data = equilibrium_controller.get_best_response(
        game, profile, player, mode, cost_version, settings.candidate_cap
    )
    meta = _meta(ctx, (game, profile), version=cost_version)
    _emit(data, f"{mode} best response", meta)


@cli.command()
@click.option("--game", required=True)
@click.option("--profile", required=True)
@click.option(
    "--mode", type=click.Choice(["exact", "sufficient", "swap"]), default="exact"
)
@click.option("--cost-version", type=VERSIONS)
@click.pass_context
@handle_errors
def check(ctx, game, profile, mode, cost_version):
    """Equilibrium check; exits 4 with a witness when a player can improve"""
    settings: Settings = ctx.obj
    data = equilibrium_controller.check_equilibrium(
        game, profile, mode, cost_version, settings.candidate_cap
    )
    meta = _meta(ctx, (game, profile), version=cost_version)
    _emit(data, f"{mode} check passed", meta)


@cli.command()
@click.option("--game", required=True)
@click.option("--init", type=click.Choice(["profile", "random"]), default="profile")
@click.option("--profile", help="Initial profile for --init profile")
@click.option(
    "--order", type=click.Choice(["round-robin", "random"]), default="round-robin"
)
@click.option("--seed", type=int, default=0)
@click.option("--rounds", type=int, help="Round limit (defaults to --round-limit)")
@click.option("--oracle", type=ORACLES, default="exact")
@click.option("--cost-version", type=VERSIONS)
@click.option("--trace", "trace_path", help="Write the JSON-lines trace here")
@click.pass_context
@handle_errors
def dynamics(
    ctx, game, init, profile, order, seed, rounds, oracle, cost_version, trace_path
):
    """Best-response dynamics with cycle detection"""
    settings: Settings = ctx.obj
    rounds = settings.round_limit if rounds is None else rounds
    meta = _meta(ctx, (game, profile), trace_path, seed, cost_version, order)
    data = equilibrium_controller.run_dynamics(
        game,
        init=init,
        profile_path=profile,
        order=order,
        seed=seed,
        rounds=rounds,
        oracle=oracle,
        version=cost_version,
        cap=settings.candidate_cap,
        trace_path=trace_path,
        meta=meta,
    )
    _emit(data, f"dynamics ended: {data['outcome']}", meta)


@cli.command()
@click.option("--game", required=True)
@click.option("--trace", "trace_path", required=True, help="JSON-lines trace written by dynamics")
@click.pass_context
@handle_errors
def replay(ctx, game, trace_path):
    """Re-apply a stored dynamics trace; exits 4 if it does not reproduce"""
    data = equilibrium_controller.replay_dynamics(game, trace_path)
    _emit(data, f"replayed {data['moves']} moves", _meta(ctx, (game, trace_path)))


@cli.command("enumerate")
@click.option("--game", required=True)
@click.option("--cost-version", type=VERSIONS)
@click.option("--out", "out_path", help="Also write the report to this file")
@click.pass_context
@handle_errors
def enumerate_equilibria(ctx, game, cost_version, out_path):
    """Every equilibrium of a tiny game plus price of anarchy and stability"""
    settings: Settings = ctx.obj
    meta = _meta(ctx, (game,), out_path, version=cost_version)
    data = equilibrium_controller.enumerate(
        game, cost_version, settings.profile_cap, settings.threads
    )
    if out_path:
        equilibrium_controller.storage_service.save_json(
            {**data, "meta": meta}, out_path
        )
    _emit(data, f"{data['count']} equilibria", meta)


@cli.command()
@click.option("--budgets-min", type=int, default=1)
@click.option("--budgets-max", type=int, default=2)
@click.option("--n-min", type=int, default=4)
@click.option("--n-max", type=int, default=8)
@click.option("--runs", type=int, default=20)
@click.option("--seed", type=int, default=0)
@click.option("--rounds", type=int, help="Round limit per run")
@click.pass_context
@handle_errors
def search(ctx, budgets_min, budgets_max, n_min, n_max, runs, seed, rounds):
    """Search seeded dynamics for large-diameter SUM equilibria"""
    settings: Settings = ctx.obj
    rounds = settings.round_limit if rounds is None else rounds
    data = equilibrium_controller.search(
        budgets_min,
        budgets_max,
        n_min,
        n_max,
        runs,
        seed,
        rounds,
        settings.candidate_cap,
    )
    meta = _meta(ctx, seed=seed, version="sum")
    _emit(data, f"largest diameter {data['largest_diameter']}", meta)


# ==================== ANALYSIS COMMANDS ====================


@cli.command()
@click.option("--game", required=True)
@click.option("--profile", required=True)
@click.option("--checks", default=",".join(CHECKS), callback=_parse_checks)
@click.option("--cost-version", type=VERSIONS)
@click.option("--no-verify", is_flag=True, help="Skip the exact equilibrium precheck")
@click.pass_context
@handle_errors
def analyze(ctx, game, profile, checks, cost_version, no_verify):
    """Structural validators on an equilibrium profile"""
    settings: Settings = ctx.obj
    data = analysis_controller.analyze(
        game, profile, checks, cost_version, not no_verify, settings.candidate_cap
    )
    meta = _meta(ctx, (game, profile), version=cost_version)
    _emit(data, f"{len(data)} checks passed", meta)


@cli.command("reduce")
@click.option("--kcenter", "graph_path", required=True, help="Host graph JSON")
@click.option("-k", "k", type=int, required=True)
@click.option("--objective", type=click.Choice(["center", "median"]), default="center")
@click.option("--verify", is_flag=True, help="Compare against the brute-force oracle")
@click.pass_context
@handle_errors
def reduce_facility(ctx, graph_path, k, objective, verify):
    """Solve k-center or k-median through a player's best response"""
    settings: Settings = ctx.obj
    data = analysis_controller.reduce(
        graph_path, k, objective, verify, settings.candidate_cap
    )
    version = "max" if objective == "center" else "sum"
    meta = _meta(ctx, (graph_path,), version=version)
    _emit(data, f"{k}-{objective} value {data['value']}", meta)
