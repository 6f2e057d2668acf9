"""
This module contains the command-line interface of the local weight
distribution toolkit. It builds codes, computes their spectra, applies the
transfer relations, checks the published length-127 tables and verifies all
relations on small codes.

Functions:
- cli(): The command group.
- construct(): Write the generator matrix of a code family member.
- lwd(): Compute A_w, L_w and N_w of a code.
- relate(): Transfer a local weight distribution to the extended, punctured or even weight subcode.
- check_table(): Ratio checks on the embedded published tables or on a report file.
- verify(): Check every relation on a code by enumeration.

Exit codes:
    0 ok, 2 parse error, 3 precondition failure, 4 enumeration cap, 5 identity violation.

Interdependencies:
    - click: A package for creating command-line interfaces.
    - utility.logger: A module for setting up logging.
    - services.*: Code constructions, sweeps, relations and coset reduction.
    - data.*: Codes, tallies, permutations, reports and the published tables.
"""
import functools
import sys
import time

import click

from data.linear_code import format_matrix, load_matrix, save_matrix
from data.lwd_report import CheckResult, LwdReport, RelationReport, load_report
from data.permutation import Permutation, load_permutations
from data.published_lwd import (
    PUBLISHED_DIMENSIONS, PUBLISHED_LENGTH, checksum_ok, get_published, published_ids,
)
from data.weight_tally import WeightTally
from services.code_constructions import (
    FAMILIES, build_family, even_subcode, puncture, random_linear_code, reed_muller,
)
from services.lwd_relations import (
    even_subcode_lwd, extend_lwd, parity_split, puncture_lwd_transitive, table_ratio_check,
    verify_all_relations,
)
from services.symmetry_cosets import (
    affine_group_generators, cyclic_group_generator, lwd_via_cosets,
)
from services.zero_neighbor import (
    local_weight_distribution, only_odd_counts, weight_distribution,
)
from utility.errors import (
    EXIT_IDENTITY, LwdError, MatrixFormatError, PreconditionError,
)
from utility.logger import setup_logger

# Set up logging
logger = setup_logger('main_log')

MODES = ('brute', 'shortcut', 'cosets')


def reports_errors(command):
    """Turn toolkit errors into a message on stderr and the matching exit code."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except LwdError as e:
            logger.error("%s failed: %s", command.__name__, e)
            click.echo(f"Error: {e}", err=True)
            sys.exit(e.exit_code)
        except OSError as e:
            logger.error("%s failed: %s", command.__name__, e)
            click.echo(f"Error: {e}", err=True)
            sys.exit(MatrixFormatError.exit_code)
    return wrapper


def load_code(args, family=None, random_nk=None, seed=None):
    """
    Resolve the code a command works on.

    Args:
        args (tuple): Either a matrix path, or the integer parameters of family.
        family (str): Family name, see FAMILIES.
        random_nk (tuple): (n, k) of a random code.
        seed (int): Seed of the random code.

    Returns:
        tuple: (LinearCode, descriptor string)
    """
    if random_nk:
        code = random_linear_code(*random_nk, seed=seed)
        return code, code.describe()
    if family:
        try:
            params = [int(a) for a in args]
        except ValueError as e:
            raise MatrixFormatError(f"family parameters must be integers: {' '.join(args)}") from e
        code = build_family(family, params, seed)
        return code, code.describe()
    if len(args) != 1:
        raise PreconditionError("give one matrix file, --family with parameters, or --random N K")
    code = load_matrix(args[0])
    return code, f"{args[0]} ({code.n},{code.k})"


def _rm_degree_m(n):
    m = n.bit_length() - 1
    if n != 1 << m:
        raise PreconditionError(f"length {n} is not a power of two")
    return m


def resolve_subcode(C, choice):
    """even, rm:<r> or a matrix path."""
    if choice == 'even':
        return even_subcode(C)
    if choice.startswith('rm:'):
        try:
            r = int(choice[3:])
        except ValueError as e:
            raise MatrixFormatError(f"bad subcode {choice!r}") from e
        return reed_muller(r, _rm_degree_m(C.n))
    return load_matrix(choice)


def resolve_group(C, choice):
    """cyclic, affine, identity or a permutation file."""
    if choice == 'cyclic':
        return [cyclic_group_generator(C.n)]
    if choice == 'affine':
        return affine_group_generators(_rm_degree_m(C.n), C.n)
    if choice == 'identity':
        return [Permutation.identity(C.n)]
    return load_permutations(choice)


def parse_entries(entries, length):
    """
    Build a tally from W=COUNT strings.

    Raises:
        MatrixFormatError: On malformed entries or a missing length.
    """
    if length is None:
        raise MatrixFormatError("--length is required with --entry")
    counts = {}
    for entry in entries:
        try:
            w, count = entry.split('=')
            counts[int(w)] = counts.get(int(w), 0) + int(count)
        except ValueError as e:
            raise MatrixFormatError(f"entry {entry!r} is not of the form W=COUNT") from e
    try:
        return WeightTally(length, counts)
    except ValueError as e:
        raise MatrixFormatError(str(e)) from e


def format_table(report):
    """Weight column followed by one count column per tally, counts with thousands separators."""
    keys = [key for key in ('A', 'L', 'N') if key in report.tallies]
    weights = sorted({w for key in keys for w in report.tallies[key].weights() if w > 0})
    header = ['weight'] + [f"{key}_w" for key in keys]
    rows = [[str(w)] + [f"{report.tallies[key][w]:,}" for key in keys] for w in weights]
    widths = [max(len(line[i]) for line in [header] + rows) for i in range(len(header))]
    lines = ['  '.join(cell.rjust(width) for cell, width in zip(header, widths))]
    lines.extend('  '.join(cell.rjust(width) for cell, width in zip(row, widths)) for row in rows)
    return '\n'.join(lines)


def emit(report, as_json):
    if as_json:
        click.echo(report.to_json())
        return
    click.echo(f"{report.descriptor}  n={report.n} k={report.k}  mode={report.mode}")
    click.echo(format_table(report))
    for check in report.checks:
        click.echo(f"[{'PASS' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
    click.echo(f"({report.duration_ms} ms)")


code_source = [
    click.argument('args', nargs=-1),
    click.option('--family', type=click.Choice(FAMILIES), help='Build the code from a family; ARGS are its parameters.'),
    click.option('--random', 'random_nk', nargs=2, type=int, default=None, help='Random (N, K) code.'),
    click.option('--seed', type=int, default=None, help='Seed for random codes.'),
]


def with_code_source(command):
    for decorator in reversed(code_source):
        command = decorator(command)
    return command


@click.group()
def cli():
    """Local weight distributions of binary linear codes."""


@cli.command()
@click.argument('family', type=click.Choice(FAMILIES))
@click.argument('params', nargs=-1, type=int)
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None, help='Matrix file to write.')
@click.option('--seed', type=int, default=None, help='Seed for random codes.')
@reports_errors
def construct(family, params, out, seed):
    """Write the generator matrix of FAMILY PARAMS."""
    code = build_family(family, list(params), seed)
    if out:
        save_matrix(code, out)
    else:
        click.echo(format_matrix(code), nl=False)
    logger.info("Constructed %s", code.describe())
    click.echo(f"({code.n},{code.k})", err=bool(not out))


@cli.command()
@with_code_source
@click.option('--mode', type=click.Choice(MODES), default='shortcut', show_default=True)
@click.option('--subcode', default='even', show_default=True, help='Cosets mode: even, rm:<r> or a matrix file.')
@click.option('--group', default='cyclic', show_default=True, help='Cosets mode: cyclic, affine, identity or a permutation file.')
@click.option('--lwd-only', is_flag=True, help='Skip the A_w and N_w sweeps.')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON report.')
@click.option('--force', is_flag=True, help='Lift the enumeration caps.')
@click.option('--threads', type=int, default=None, help='Worker processes for the sweeps.')
@reports_errors
def lwd(args, family, random_nk, seed, mode, subcode, group, lwd_only, as_json, force, threads):
    """Compute the local weight distribution of a code given as a matrix file or a family."""
    code, descriptor = load_code(args, family, random_nk, seed)
    sweep_args = {'workers': threads, 'force': force}
    started = time.perf_counter()
    tallies = {}
    if not lwd_only:
        tallies['A'] = weight_distribution(code, **sweep_args)
    if mode == 'cosets':
        C_sub = resolve_subcode(code, subcode)
        gens = resolve_group(code, group)
        tallies['L'] = lwd_via_cosets(code, C_sub, gens, **sweep_args)
        mode_label = f"cosets ({subcode}, {group})"
    else:
        tallies['L'] = local_weight_distribution(code, use_shortcuts=mode == 'shortcut', **sweep_args)
        mode_label = mode
    if not lwd_only:
        tallies['N'] = only_odd_counts(code, **sweep_args)
    elapsed = int((time.perf_counter() - started) * 1000)
    report = LwdReport(descriptor, code.n, code.k, mode_label, tallies, duration_ms=elapsed)
    logger.info("LWD of %s in %s mode: %s neighbors, %s ms",
                descriptor, mode_label, tallies['L'].total(), elapsed)
    emit(report, as_json)


def _relation_inputs(direction, args, family, random_nk, seed, tally, entries, n_entries,
                     length, n_zero, transitive, force, threads):
    """Return (L, N, descriptor, k) for relate."""
    sweep_args = {'workers': threads, 'force': force}
    if tally:
        source = load_report(tally)
        if 'L' not in source.tallies:
            raise MatrixFormatError(f"{tally} has no L tally")
        L, N, descriptor, k = source.tallies['L'], source.tallies.get('N'), source.descriptor, source.k
    elif entries:
        L, N, descriptor, k = parse_entries(entries, length), None, 'entries', None
    else:
        code, descriptor = load_code(args, family, random_nk, seed)
        k = code.k
        if transitive:
            code = code.with_tags(transitive_invariant=True)
        L = local_weight_distribution(code, **sweep_args)
        N = None
        if not n_zero:
            if direction == 'puncture':
                N = only_odd_counts(puncture(code, code.n - 1), **sweep_args)
            else:
                N = only_odd_counts(code, **sweep_args)
    n_length = L.n - 1 if direction == 'puncture' else L.n
    if n_entries:
        N = parse_entries(n_entries, n_length)
    if n_zero:
        N = WeightTally(n_length)
    if N is None:
        raise PreconditionError("N is unknown: give an N tally, --n-entry or --n-zero")
    return L, N, descriptor, k


def _round_trip_check(name, expected, actual):
    if expected == actual:
        return CheckResult(name, True, f"{expected.total():,} zero neighbors")
    logger.warning("%s failed: expected %s, got %s", name, expected, actual)
    return CheckResult(name, False, f"expected {expected!r}, got {actual!r}")


@cli.command()
@click.argument('direction', type=click.Choice(('extend', 'puncture', 'even')))
@with_code_source
@click.option('--tally', type=click.Path(exists=True, dir_okay=False), help='JSON report holding L (and N).')
@click.option('--entry', 'entries', multiple=True, help='L entry W=COUNT; repeatable.')
@click.option('--n-entry', 'n_entries', multiple=True, help='N entry W=COUNT; repeatable.')
@click.option('--length', type=int, default=None, help='Length of the tally given by --entry.')
@click.option('--n-zero', is_flag=True, help='Take N = 0 (all extended weights divisible by four).')
@click.option('--transitive', is_flag=True, help='Assert that the extended code is transitive invariant.')
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON report.')
@click.option('--force', is_flag=True, help='Lift the enumeration caps.')
@click.option('--threads', type=int, default=None, help='Worker processes for the sweeps.')
@reports_errors
def relate(direction, args, family, random_nk, seed, tally, entries, n_entries, length,
           n_zero, transitive, as_json, force, threads):
    """
    Transfer a local weight distribution.

    extend and even take L(C) and N(C); puncture takes L(C_ex) of a
    transitive invariant extended code and N of the punctured code.
    """
    if direction == 'puncture' and not transitive:
        raise PreconditionError("puncture needs --transitive: the extended code must be transitive invariant")
    started = time.perf_counter()
    L, N, descriptor, k = _relation_inputs(direction, args, family, random_nk, seed, tally,
                                           entries, n_entries, length, n_zero, transitive,
                                           force, threads)
    checks = []
    if direction == 'extend':
        result = extend_lwd(L, N)
        identity = "L_2i(C_ex) = L_2i-1(C) + L_2i(C) + N_2i(C)"
        if transitive:
            # a transitive extended code punctures back to C
            back = puncture_lwd_transitive(result, N)
            checks.append(_round_trip_check("puncturing restores L(C)", L, back))
    elif direction == 'even':
        result = even_subcode_lwd(L, N)
        identity = "L_2i(C_even) = L_2i(C) + N_2i(C)"
    else:
        result = puncture_lwd_transitive(L, N)
        identity = "L_w(C) = (w+1) L_w+1(C_ex)/(n+1) for odd w, (n+1-w) L_w(C_ex)/(n+1) - N_w(C) for even w"
        ones, zeros = parity_split(L)
        checks.append(_round_trip_check("parity split adds up to L(C_ex)", L, ones + zeros))
        checks.append(_round_trip_check("extending restores L(C_ex)", L, extend_lwd(result, N)))
    elapsed = int((time.perf_counter() - started) * 1000)
    report = LwdReport(descriptor, result.n, k, f"{direction}: {identity}", {'L': result}, checks, elapsed)
    logger.info("Applied %s relation to %s", direction, descriptor)
    emit(report, as_json)
    if not all(check.passed for check in checks):
        sys.exit(EXIT_IDENTITY)


@cli.command('check-table')
@click.argument('table_ids', nargs=-1)
@click.option('--file', 'report_file', type=click.Path(exists=True, dir_okay=False), help='JSON report whose L tally is checked instead.')
@click.option('--export', 'export_id', default=None, help='Print a published column as a JSON report.')
@reports_errors
def check_table(table_ids, report_file, export_id):
    """Run the odd/even ratio check on published columns (all by default) or on a report file."""
    if export_id:
        try:
            column = get_published(export_id)
        except KeyError as e:
            raise PreconditionError(e.args[0]) from e
        report = LwdReport(export_id, PUBLISHED_LENGTH, PUBLISHED_DIMENSIONS[export_id], 'published',
                           {'L': column})
        click.echo(report.to_json())
        return
    overall = RelationReport("published tables")
    if report_file:
        source = load_report(report_file)
        if 'L' not in source.tallies:
            raise MatrixFormatError(f"{report_file} has no L tally")
        overall.children.append(table_ratio_check(source.tallies['L'], source.n))
    else:
        integrity = RelationReport("embedded table checksum")
        integrity.add("checksum matches", True, checksum_ok())
        overall.children.append(integrity)
        for table_id in table_ids or published_ids():
            try:
                column = get_published(table_id)
            except KeyError as e:
                raise PreconditionError(e.args[0]) from e
            check = table_ratio_check(column, PUBLISHED_LENGTH)
            check.name = f"{table_id}: {len(check.entries)} odd/even pairs"
            overall.children.append(check)
    for child in overall.children:
        for entry in child.entries:
            status = 'PASS' if entry.passed else 'FAIL'
            click.echo(f"[{status}] {child.name} {entry.label}: {entry.expected} vs {entry.actual}")
    click.echo('All pairs pass.' if overall.passed else 'Some pairs FAIL.')
    logger.info("Table check %s", 'passed' if overall.passed else 'failed')
    if not overall.passed:
        sys.exit(EXIT_IDENTITY)


@cli.command()
@with_code_source
@click.option('--json', 'as_json', is_flag=True, help='Print a JSON report.')
@click.option('--force', is_flag=True, help='Lift the enumeration caps.')
@click.option('--threads', type=int, default=None, help='Worker processes for the sweeps.')
@reports_errors
def verify(args, family, random_nk, seed, as_json, force, threads):
    """Check every relation on a code by enumeration; exit 0 iff all hold."""
    code, descriptor = load_code(args, family, random_nk, seed)
    started = time.perf_counter()
    result = verify_all_relations(code, workers=threads, force=force)
    elapsed = int((time.perf_counter() - started) * 1000)
    if as_json:
        report = LwdReport(descriptor, code.n, code.k, 'verify', checks=result.to_checks(),
                           duration_ms=elapsed)
        click.echo(report.to_json())
    else:
        click.echo(result.name)
        for line in result.summary_lines():
            click.echo(line)
        click.echo(f"({elapsed} ms)")
    if not result.passed:
        sys.exit(EXIT_IDENTITY)


if __name__ == '__main__':
    cli.main()

# End of main.py
