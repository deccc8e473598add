import os
import logging
import dataclasses
import typing as t
from concurrent.futures import ThreadPoolExecutor

import click
import numpy as np

from qcalc.config import CONFIG_PATH
from qcalc.config import Config
from qcalc.qscalar import QRangeError, ScalarParseError, PoleError
from qcalc.qscalar import check_q_value
from qcalc.suq2 import verify_hopf_conventions
from qcalc.fodc import CALCULUS_IDS, Q3_PLUS, Q3_MINUS, THREE_D, FOUR_D_PLUS
from qcalc.fodc import UnknownCalculusError
from qcalc.fodc import make_calculus, verify_calculus, verify_quotient_reduction
from qcalc.sphere import verify_sphere_algebra, verify_induced_differentials
from qcalc.sphere import verify_gamma2_relations, verify_dependency_solver
from qcalc.report import CheckRecord, FAILED
from qcalc.report import numeric_record, emit_report, all_passed
from qcalc.oprep.lattice import LatticeWindow, WindowError, WindowTooSmallError
from qcalc.oprep.builders import FSpec, RepConfig, SpecViolationError
from qcalc.oprep.builders import build_rep, build_F, standard_spec, remark4_spec, convolution, zero
from qcalc.oprep.builders import copy_shift_qk, diag_q2k
from qcalc.oprep.checks import verify_omega_vanishing, measure_omega, invariant_forms_check
from qcalc.oprep.checks import faithfulness_rank, sphere_commutator_check, consistency_check
from qcalc.oprep.regular import regular_rep, gram_check
from qcalc.oprep.probes import growth_probe, bounded_control_spec
from qcalc.oprep.disk import disk_rep, verify_disk
from qcalc.util import TEMPLATE_ENV, NULL_LOGGER
from qcalc.util import get_version, get_num_threads, ensure_folder, make_stream_logger

MODES = ('symbolic', 'sphere', 'operator', 'disk', 'probe', 'gram', 'all')

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_WINDOW_TOO_SMALL = 3

# The windows of the growth probe and the regular representation
PROBE_K_MINS = tuple(range(-6, -15, -1))
# Relative deviation of a fitted growth ratio from its expected value
GROWTH_TOLERANCE = 0.05
GRAM_N_MAX = 40
GRAM_K_RANGE = (-6, 6)
# Number of copies for the faithfulness rank of the copy shifting T
RANK_L_MAX = 3
# Number of random samples of the sampled exact and operator checks
NUM_SAMPLES = 100

# == CLI UTILS ==

CM = u'✓'


def echo_info(content: str, echo: bool = True):
    if echo:
        click.secho(f'... {content}', err=True)


def echo_success(content: str, echo: bool = True):
    if echo:
        click.secho(f'[{CM}] {content}', fg='green', err=True)


class PlanError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class RunPlan:
    """
    Everything that determines a verification run. Two runs of the same plan produce identical reports.
    """
    mode: str = 'all'
    calculus: t.Tuple[str, ...] = CALCULUS_IDS
    q_value: str = '1/2'
    n_max: int = 12
    k_min: int = -14
    k_max: int = 14
    alpha: float = 1.0
    beta: float = 1.0
    alpha_r: t.Tuple[float, ...] = ()
    epsilon: int = 1
    tolerance: float = 1e-10
    seed: int = 0
    degree_bound: int = 4
    output_format: str = 'text'

    def __post_init__(self):
        if self.mode not in MODES:
            raise PlanError(f'Unknown mode "{self.mode}", choose one of {", ".join(MODES)}')
        if not self.tolerance > 0:
            raise PlanError(f'The tolerance has to be positive, not {self.tolerance}')
        if self.epsilon not in (1, -1):
            raise PlanError(f'epsilon has to be 1 or -1, not {self.epsilon}')
        # Raises UnknownCalculusError for unknown ids and resolves the aliases
        object.__setattr__(self, 'calculus', tuple(make_calculus(c).id for c in self.calculus))
        # Raises QRangeError or ScalarParseError for invalid values
        check_q_value(self.q_value)

    @classmethod
    def from_options(cls, config: Config, mode: str, **options) -> 'RunPlan':
        """
        Creates the plan from the command line options. Options which are None fall back to the config.
        """
        n_max, k_min, k_max = config.get_window()

        def pick(name: str, default: t.Any) -> t.Any:
            value = options.get(name)
            return default if value is None else value

        alpha_r = options.get('alpha_r')
        if alpha_r is None:
            alpha_r = config.get_alpha_r()
        elif isinstance(alpha_r, str):
            alpha_r = [float(value) for value in alpha_r.split(',') if value.strip()]

        calculus = options.get('calculus')
        return cls(
            mode=mode,
            calculus=tuple(calculus) if calculus else CALCULUS_IDS,
            q_value=pick('q_value', config.get_q_value()),
            n_max=pick('n_max', n_max),
            k_min=pick('k_min', k_min),
            k_max=pick('k_max', k_max),
            alpha=pick('alpha', config.get_alpha()),
            beta=pick('beta', config.get_beta()),
            alpha_r=tuple(alpha_r),
            epsilon=pick('epsilon', config.get_epsilon()),
            tolerance=pick('tolerance', config.get_tolerance()),
            seed=pick('seed', config.get_seed()),
            degree_bound=config.get_degree_bound(),
            output_format=pick('output_format', 'text'),
        )

    @property
    def window(self) -> LatticeWindow:
        return LatticeWindow(n_max=self.n_max, k_min=self.k_min, k_max=self.k_max, q_value=self.q_value)


# == SUITES ==

Suite = t.Callable[[], t.List[CheckRecord]]


def symbolic_suites(plan: RunPlan, logger: logging.Logger) -> t.List[Suite]:
    suites: t.List[Suite] = [verify_hopf_conventions]
    for calculus_id in plan.calculus:
        suites.append(lambda calculus_id=calculus_id: verify_calculus(
            make_calculus(calculus_id), seed=plan.seed, num_samples=NUM_SAMPLES, logger=logger))
    for sign, calculus_id in ((1, Q3_PLUS), (-1, Q3_MINUS)):
        if calculus_id in plan.calculus:
            suites.append(lambda sign=sign: [verify_quotient_reduction(sign, seed=plan.seed, logger=logger)])
    return suites


def sphere_suites(plan: RunPlan, logger: logging.Logger) -> t.List[Suite]:
    return [
        lambda: verify_sphere_algebra(logger=logger),
        lambda: verify_induced_differentials(logger=logger),
        lambda: verify_gamma2_relations(logger=logger),
        lambda: verify_dependency_solver(seed=plan.seed, num_samples=50, degree_bound=plan.degree_bound,
                                         logger=logger),
    ]


def theorem_suite(plan: RunPlan, logger: logging.Logger) -> t.List[CheckRecord]:
    window = plan.window
    rep = build_rep(RepConfig(window=window), logger=logger)
    r_double_prime = convolution(plan.alpha_r) if plan.alpha_r else zero()
    F = build_F(rep, standard_spec(r_double_prime), logger=logger)

    records = verify_omega_vanishing(rep, F, make_calculus(THREE_D), plan.tolerance, logger=logger)
    records += invariant_forms_check(rep, F, plan.tolerance)
    records += sphere_commutator_check(rep, F, plan.tolerance, logger=logger)
    records += consistency_check(rep, F, seed=plan.seed, num_samples=NUM_SAMPLES, tolerance=plan.tolerance,
                                 logger=logger)
    records += measure_omega(rep, F, make_calculus(FOUR_D_PLUS))
    return records


def faithfulness_suite(plan: RunPlan, logger: logging.Logger) -> t.List[CheckRecord]:
    """
    The standard T makes Omega(b) and Omega(c) coincide, so its rank is two thirds of the column count. The
    copy shifting T separates them and gives the full rank. R' = 0 removes the Omega(a) block in both cases.
    """
    records = []
    standard = build_rep(RepConfig(window=plan.window), logger=logger)
    window = LatticeWindow(n_max=plan.n_max, k_min=plan.k_min, k_max=plan.k_max, l_max=RANK_L_MAX,
                           q_value=plan.q_value)
    copies = build_rep(RepConfig(window=window), logger=logger)
    q = window.q
    cases = [
        ('standard T: ', standard, standard_spec(), 2),
        ("standard T, R' = 0: ", standard, FSpec(T=standard_spec().T), 1),
        ('copy shifting T: ', copies, FSpec(T=copy_shift_qk(np.sqrt(1 + q ** 2)), R_prime=diag_q2k()), 3),
        ("copy shifting T, R' = 0: ", copies, FSpec(T=copy_shift_qk(np.sqrt(1 + q ** 2))), 2),
    ]
    degree = 2
    for label, rep, spec, blocks in cases:
        F = build_F(rep, spec, logger=logger)
        result = faithfulness_rank(rep, F, degree, logger=logger)
        num_monomials = result.num_columns // 3
        records.append(result.record(expected_rank=blocks * num_monomials, variant=spec.label,
                                     window=rep.window.to_dict(), label=label))

    return records


def remark4_suite(plan: RunPlan, logger: logging.Logger) -> t.List[CheckRecord]:
    rep = build_rep(RepConfig(window=plan.window), logger=logger)
    F = build_F(rep, remark4_spec(plan.epsilon), logger=logger)
    calc = make_calculus(Q3_PLUS if plan.epsilon == 1 else Q3_MINUS)
    records = verify_omega_vanishing(rep, F, calc, plan.tolerance, logger=logger)
    records += consistency_check(rep, F, seed=plan.seed, num_samples=NUM_SAMPLES, tolerance=plan.tolerance,
                                 logger=logger)
    return records


def operator_suites(plan: RunPlan, logger: logging.Logger) -> t.List[Suite]:
    return [
        lambda: theorem_suite(plan, logger),
        lambda: faithfulness_suite(plan, logger),
        lambda: remark4_suite(plan, logger),
    ]


def disk_suites(plan: RunPlan, logger: logging.Logger) -> t.List[Suite]:
    return [lambda: verify_disk(disk_rep(plan.window, logger=logger), plan.tolerance)]


def probe_suite(plan: RunPlan, logger: logging.Logger) -> t.List[CheckRecord]:
    q = float(check_q_value(plan.q_value))
    result = growth_probe(plan.q_value, PROBE_K_MINS, logger=logger)
    control = growth_probe(plan.q_value, PROBE_K_MINS, spec=bounded_control_spec(), validate=False,
                           logger=logger)
    records = [result.record(q, variant='THEOREM_1'), control.record(q, variant='bounded control')]
    for name, value, target in [('growth ratio of Omega(b) = 1/q', result.fitted_ratio, 1 / q),
                                ('growth ratio of the bounded control = 1', control.fitted_ratio, 1.0)]:
        if value is None:
            records.append(CheckRecord(check='growth_probe', witness=name, status=FAILED,
                                       detail='the norms could not be fitted'))
            continue

        records.append(numeric_record('growth_probe', abs(value - target) / target, GROWTH_TOLERANCE,
                                      witness=name, detail=f'measured {value:.6g}'))
    return records


def gram_suite(plan: RunPlan, logger: logging.Logger) -> t.List[CheckRecord]:
    reg = regular_rep(plan.q_value, GRAM_N_MAX, *GRAM_K_RANGE, l_max=GRAM_N_MAX, alpha=plan.alpha,
                      beta=plan.beta, logger=logger)
    return gram_check(reg, plan.tolerance)


def plan_suites(plan: RunPlan, logger: logging.Logger = NULL_LOGGER) -> t.List[Suite]:
    suites = []
    if plan.mode in ('symbolic', 'all'):
        suites += symbolic_suites(plan, logger)
    if plan.mode in ('sphere', 'all'):
        suites += sphere_suites(plan, logger)
    if plan.mode in ('operator', 'all'):
        suites += operator_suites(plan, logger)
    if plan.mode in ('disk', 'all'):
        suites += disk_suites(plan, logger)
    if plan.mode in ('probe', 'all'):
        suites.append(lambda: probe_suite(plan, logger))
    if plan.mode in ('gram', 'all'):
        suites.append(lambda: gram_suite(plan, logger))
    return suites


def run(plan: RunPlan, num_threads: int = 1, logger: logging.Logger = NULL_LOGGER) -> t.List[CheckRecord]:
    """
    Executes all suites of the plan and returns the records in the order of the suites, independent of the
    order in which the worker threads finish.
    """
    suites = plan_suites(plan, logger)
    with ThreadPoolExecutor(max_workers=max(1, num_threads)) as executor:
        futures = [executor.submit(suite) for suite in suites]
        records = []
        for future in futures:
            records += future.result()

    return records


# == ACTUAL COMMANDS ==

@click.group(invoke_without_command=True)
@click.option('--version', is_flag=True,
              help='displays the version of the package')
@click.option('--no-config', is_flag=True,
              help='prevents the config file from being loaded, resorting to default values')
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
              help='the config file to use instead of the default one')
@click.option('-v', '--verbose', is_flag=True,
              help='prints progress messages to stderr')
@click.pass_context
def cli(ctx, version: bool, no_config: bool, config_path: t.Optional[str], verbose: bool):
    # We pass the main config singleton on to the sub commands
    config = Config()
    ctx.obj = config
    ctx.meta['logger'] = make_stream_logger() if verbose else NULL_LOGGER

    if config_path is not None:
        if not os.path.exists(config_path):
            click.secho(f'The config file "{config_path}" does not exist', fg='red', err=True)
            ctx.exit(EXIT_CONFIG_ERROR)
        config.load(config_path)
    elif not no_config:
        config.load()

    if version:
        version_string = get_version()
        click.secho(version_string, bold=True)
        return


def plan_options(func):
    options = [
        click.option('--calculus', multiple=True, type=click.STRING, default=None,
                     help='the calculus id to verify, can be given multiple times. Defaults to all'),
        click.option('--q', 'q_value', type=click.STRING, default=None,
                     help='the exact value of q in (0, 1), e.g. "1/2"'),
        click.option('--n-max', type=click.INT, default=None, help='the number of levels n of the window'),
        click.option('--k-min', type=click.INT, default=None, help='the smallest k of the window'),
        click.option('--k-max', type=click.INT, default=None, help='the largest k of the window'),
        click.option('--alpha', type=click.FLOAT, default=None, help='the scale of T in the Gram check'),
        click.option('--beta', type=click.FLOAT, default=None, help="the scale of R' in the Gram check"),
        click.option('--alpha-r', type=click.STRING, default=None,
                     help="comma separated symmetric convolution sequence of R'', e.g. 0.3,0,0.3"),
        click.option('--epsilon', type=click.Choice(['1', '-1', '+1']), default=None,
                     help='the sign of the quotient calculus of the REMARK_4 variant'),
        click.option('--tol', 'tolerance', type=click.FLOAT, default=None,
                     help='the tolerance of the numeric residuals'),
        click.option('--seed', type=click.INT, default=None, help='the seed of the sampled checks'),
        click.option('--format', 'output_format', type=click.Choice(['text', 'json']), default='text',
                     help='the format of the report on stdout'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def execute_plan(ctx, mode: str, options: t.Dict[str, t.Any]) -> None:
    """
    Builds the plan, runs it and prints the report. Exits with 0 if all checks pass, 1 if a check fails,
    2 for invalid parameters and 3 if the window is too small.
    """
    config: Config = ctx.obj
    logger: logging.Logger = ctx.meta.get('logger', NULL_LOGGER)
    if options.get('epsilon') is not None:
        options['epsilon'] = int(options['epsilon'])

    try:
        plan = RunPlan.from_options(config, mode, **options)
        num_threads = get_num_threads(config)
        echo_info(f'running the {plan.mode} checks with {num_threads} threads', logger is not NULL_LOGGER)
        records = run(plan, num_threads=num_threads, logger=logger)
    except WindowTooSmallError as exc:
        click.secho(str(exc), fg='red', err=True)
        ctx.exit(EXIT_WINDOW_TOO_SMALL)
    except (PlanError, QRangeError, ScalarParseError, PoleError, UnknownCalculusError, WindowError,
            SpecViolationError, ValueError) as exc:
        click.secho(f'invalid parameters: {exc}', fg='red', err=True)
        ctx.exit(EXIT_CONFIG_ERROR)

    click.echo(emit_report(records, plan.output_format))
    passed = all_passed(records)
    if passed:
        echo_success(f'all {len(records)} checks passed', logger is not NULL_LOGGER)
    ctx.exit(EXIT_PASSED if passed else EXIT_FAILED)


@click.command('run', short_help='runs the verification suites of a mode')
@click.option('--mode', type=click.Choice(MODES), default='all', help='the group of checks to run')
@plan_options
@click.pass_context
def run_command(ctx, mode: str, **options):
    """
    Runs the verification suites of the given MODE and prints one record per check.
    """
    execute_plan(ctx, mode, options)


def mode_command(name: str, mode: str, short_help: str) -> click.Command:
    @click.command(name, short_help=short_help)
    @plan_options
    @click.pass_context
    def command(ctx, **options):
        execute_plan(ctx, mode, options)

    command.help = f'{short_help}. Equivalent to "run --mode {mode}".'
    return command


@click.command('config', short_help='writes the default config file')
@click.option('-f', '--force', is_flag=True,
              help='replaces the config file if one already exists')
@click.option('--path', type=click.Path(dir_okay=False), default=CONFIG_PATH,
              help='the path of the config file')
@click.pass_context
def write_config(ctx, force: bool, path: str):
    """
    Renders the config template with the default parameters into the config file.
    """
    config: Config = ctx.obj
    if os.path.exists(path) and not force:
        echo_info(f'the config file "{path}" already exists, use --force to replace it')
        return

    ensure_folder(os.path.dirname(os.path.abspath(path)))
    template = TEMPLATE_ENV.get_template('config.yaml.j2')
    with open(path, mode='w') as file:
        file.write(template.render())

    config.load(path)
    echo_success(f'created a new config file at "{path}"')
    click.echo(path)


cli.add_command(run_command)
cli.add_command(mode_command('verify-symbolic', 'symbolic', 'verifies the tables of the calculi exactly'))
cli.add_command(mode_command('verify-sphere', 'sphere', 'verifies the sphere algebra and its calculus'))
cli.add_command(mode_command('verify-operator', 'operator', 'verifies the commutator representations'))
cli.add_command(mode_command('verify-disk', 'disk', 'verifies the calculus of the quantum disk'))
cli.add_command(mode_command('probe-growth', 'probe', 'measures the growth of the commutators'))
cli.add_command(mode_command('gram', 'gram', 'verifies the Haar state and the Gram matrix'))
cli.add_command(mode_command('all', 'all', 'runs all checks'))
cli.add_command(write_config)


if __name__ == '__main__':
    cli()
