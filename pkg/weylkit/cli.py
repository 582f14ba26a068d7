"""
The weylkit command line tool.

Every command reads Cartan schemes from JSON files and writes its report to stdout; messages go to stderr. Exit
codes: 0 on success, 1 when a scheme fails validation or a verdict is not the finite one, 2 for usage errors.

"""

import argparse
import json
import os
import sys

import numpy as np

from weylkit import classify as classification
from weylkit.core import (CartanError, dumps_scheme, decompose_scheme, is_connected, is_standard,
                          object_change_diagram, read_scheme, restrict, schemes_equivalent)
from weylkit.roots import DEFAULT_ROOT_CAP, root_closure
from weylkit.utilities.general import format_root, parse_index_list
from weylkit.weylgroupoid import (DEFAULT_HOM_CAP, FINITE, generate_groupoid, identify_coxeter_type, max_length,
                                  stabilizer)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

CAP_VARIABLE = 'WEYLKIT_CAP'


class UsageError(Exception):
    pass


def _plain(value):
    """ json.dumps fallback for numpy scalars and arrays. """
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f'Cannot serialise {value!r}')


def _dumps(data):
    return json.dumps(data, sort_keys=True, indent=2, default=_plain)


def _witness(witness):
    return None if witness is None else dict(type=type(witness).__name__, **witness._asdict())


def resolve_cap(flag, default):
    """ --cap if given, else WEYLKIT_CAP if set, else the default. """
    if flag is not None:
        return flag
    value = os.environ.get(CAP_VARIABLE)
    if value is None:
        return default
    try:
        cap = int(value)
    except ValueError:
        raise UsageError(f'{CAP_VARIABLE} must be an integer, got {value!r}')
    if cap < 1:
        raise UsageError(f'{CAP_VARIABLE} must be positive, got {cap}')
    return cap


def emit_dot(d):
    """
    The object change diagram in Graphviz syntax: an undirected graph with the nodes in object order and one
    edge per label.

    """

    lines = ['graph {']
    lines += [f'  "{a}";' for a in d.vertices]
    lines += [f'  "{a}" -- "{b}" [label="{i}"];' for a, b, i in d.edges]
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _validate(args, out):
    s = read_scheme(args.scheme)
    connected = is_connected(s)
    standard = is_standard(s)
    if args.format == 'json':
        out.write(_dumps({'valid': True, 'connected': connected, 'standard': standard, 'rank': s.rank,
                          'objects': s.n_objects}) + '\n')
    else:
        plural = '' if s.n_objects == 1 else 's'
        out.write(f'ok: {"connected" if connected else "not connected"}, '
                  f'{"standard" if standard else "non-standard"}, rank {s.rank}, {s.n_objects} object{plural}\n')
    return EXIT_OK


def _roots(args, out):
    s = read_scheme(args.scheme)
    verdict = root_closure(s, cap=resolve_cap(args.cap, DEFAULT_ROOT_CAP))
    R = verdict.root_system
    if args.format == 'json':
        roots = None if R is None else {a: R.roots[a].tolist() for a in s.objects}
        out.write(_dumps({'status': verdict.status, 'roots': roots, 'witness': _witness(verdict.witness)}) + '\n')
    else:
        out.write(f'status: {verdict.status}\n')
        if R is not None:
            for a in s.objects:
                positive = R.positive(a).tolist()
                shown = [format_root(v) if s.rank == 2 else str(v) for v in positive]
                out.write(f'{a}: {len(positive)} positive roots: {" ".join(shown)}\n')
        if verdict.witness is not None:
            out.write(f'witness: {verdict.witness}\n')
    return EXIT_OK if verdict.finite else EXIT_FAILURE


def _groupoid(args, out):
    s = read_scheme(args.scheme)
    W = generate_groupoid(s, cap=resolve_cap(args.cap, DEFAULT_HOM_CAP))
    report = {'status': W.status, 'size': W.size(), 'witness': _witness(W.witness),
              'hom': {f'{a},{b}': len(W.hom(a, b)) for a in s.objects for b in s.objects}}
    if W.status == FINITE:
        a = s.objects[0]
        group = stabilizer(W, a)
        report.update({'stabilizer_order': len(group), 'stabilizer': identify_coxeter_type(group),
                       'max_length': max_length(W, a)})

    if args.format == 'json':
        out.write(_dumps(report) + '\n')
    else:
        out.write(f'status: {W.status}\n')
        for a in s.objects:
            for b in s.objects:
                out.write(f'|Hom({a}, {b})|: {len(W.hom(a, b))}\n')
        out.write(f'total: {W.size()}\n')
        if W.status == FINITE:
            out.write(f'|Hom({s.objects[0]})|: {report["stabilizer_order"]} ({report["stabilizer"]})\n')
            out.write(f'max length: {report["max_length"]}\n')
        elif W.witness is not None:
            out.write(f'witness: {W.witness}\n')
    return EXIT_OK if W.status == FINITE else EXIT_FAILURE


def _diagram(args, out):
    d = object_change_diagram(read_scheme(args.scheme))
    if args.format == 'text':
        out.write(d.signature() + '\n')
        return EXIT_OK
    dot = emit_dot(d)
    if args.dot:
        with open(args.dot, 'w', encoding='utf-8', newline='\n') as f:
            f.write(dot)
    else:
        out.write(dot)
    return EXIT_OK


def _restrict(args, out):
    try:
        keep = parse_index_list(args.keep)
    except ValueError as error:
        raise UsageError(str(error))
    out.write(dumps_scheme(restrict(read_scheme(args.scheme), keep)))
    return EXIT_OK


def _decompose(args, out):
    blocks = decompose_scheme(read_scheme(args.scheme))
    if args.format == 'json':
        out.write(_dumps([list(block) for block in blocks]) + '\n')
    else:
        out.write(' | '.join(','.join(str(i) for i in block) for block in blocks) + '\n')
    return EXIT_OK


def _write_records(frame, fmt, out):
    if fmt == 'csv':
        out.write(frame.to_csv(index=False, lineterminator='\n'))
    elif fmt == 'json':
        out.write(_dumps(frame.to_dict(orient='records')) + '\n')
    else:
        out.write(frame.to_string(index=False) + '\n')


def _classify(args, out):
    if args.objects not in (1, 2, 3) or args.rank < 1 or args.bound < 0:
        raise UsageError('Searches need --objects 1, 2 or 3, a positive --rank and a non-negative --bound')
    if args.kappa is not None and (args.objects != 2 or not 1 <= args.kappa <= args.rank):
        raise UsageError('--kappa needs --objects 2 and a value within 1..rank')
    jobs = None if args.jobs == 0 else args.jobs
    result = classification.classify_all(args.rank, args.objects, bound=args.bound, kappa=args.kappa,
                                         cap=resolve_cap(args.cap, DEFAULT_ROOT_CAP), jobs=jobs,
                                         irreducible=not args.reducible, noisy=args.noisy)
    _write_records(classification.records_frame(result.records), args.format, out)
    sys.stderr.write(f'{len(result.records)} records ({result.raw_count} before removing equivalent ones) from '
                     f'{result.candidates} candidates, {len(result.inconclusive)} inconclusive cells\n')
    for label in result.inconclusive:
        sys.stderr.write(f'inconclusive: {label}\n')
    return EXIT_FAILURE if result.inconclusive else EXIT_OK


def _table(args, out):
    _write_records(classification.appendix_frame(classification.appendix_table()), args.format, out)
    return EXIT_OK


def _equiv(args, out):
    witness = schemes_equivalent(read_scheme(args.first), read_scheme(args.second))
    if args.format == 'json':
        found = None if witness is None else {'indices': {str(i): j for i, j in witness[0].items()},
                                              'objects': witness[1]}
        out.write(_dumps({'equivalent': witness is not None, 'witness': found}) + '\n')
    elif witness is None:
        out.write('not equivalent\n')
    else:
        phi0, phi1 = witness
        indices = ', '.join(f'{i}->{j}' for i, j in sorted(phi0.items()))
        objects = ', '.join(f'{a}->{b}' for a, b in phi1.items())
        out.write(f'equivalent: indices {indices}; objects {objects}\n')
    return EXIT_OK if witness is not None else EXIT_FAILURE


def _positive_int(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'Expected an integer, got {value!r}')
    if number < 1:
        raise argparse.ArgumentTypeError(f'Expected a positive integer, got {number}')
    return number


def build_parser():
    parser = argparse.ArgumentParser(prog='weylkit', description='Cartan schemes, Weyl groupoids and their root '
                                                                 'systems.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def command(name, handler, help, formats=('text', 'json'), scheme=True, cap=False):
        sub = commands.add_parser(name, help=help)
        if scheme:
            sub.add_argument('scheme', help='scheme JSON file')
        if cap:
            sub.add_argument('--cap', type=_positive_int, default=None,
                             help=f'closure cap (default from {CAP_VARIABLE} or the library default)')
        sub.add_argument('--format', choices=formats, default=formats[0], help='output format')
        sub.set_defaults(handler=handler)
        return sub

    command('validate', _validate, 'check the scheme axioms')
    command('roots', _roots, 'compute the root system', cap=True)
    command('groupoid', _groupoid, 'generate the Weyl groupoid', cap=True)
    diagram = command('diagram', _diagram, 'object change diagram', formats=('dot', 'text'))
    diagram.add_argument('--dot', default=None, help='write the DOT file here instead of stdout')
    restriction = command('restrict', _restrict, 'restrict to a set of indices', formats=('json',))
    restriction.add_argument('--keep', required=True, help='comma separated indices, e.g. 1,3')
    command('decompose', _decompose, 'finest decomposition of the indices')

    search = command('classify', _classify, 'search for finite Weyl groupoids', formats=('csv', 'json', 'text'),
                     scheme=False, cap=True)
    search.add_argument('--rank', type=_positive_int, required=True)
    search.add_argument('--objects', type=_positive_int, required=True)
    search.add_argument('--bound', type=int, default=classification.DEFAULT_BOUND)
    search.add_argument('--jobs', type=int, default=1, help='worker processes, 0 for every core')
    search.add_argument('--kappa', type=_positive_int, default=None,
                        help='two objects only: number of reflections swapping them')
    search.add_argument('--reducible', action='store_true', help='keep reducible records')
    search.add_argument('--noisy', action='store_true', help='print progress')

    command('table', _table, 'rebuild the table of non-standard finite Weyl groupoids',
            formats=('text', 'csv', 'json'), scheme=False)

    equivalence = command('equiv', _equiv, 'look for an equivalence of two schemes', scheme=False)
    equivalence.add_argument('first')
    equivalence.add_argument('second')

    return parser


def run(argv=None, out=None):
    """
    Run one command.

    Parameters
    ----------
    argv : list, optional
        Arguments without the program name. Defaults to sys.argv[1:].
    out : file, optional
        Where reports go. Defaults to sys.stdout.

    Returns
    -------
    code : int
        The exit code.

    """

    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as error:
        return EXIT_USAGE if error.code else EXIT_OK

    try:
        return args.handler(args, out)
    except UsageError as error:
        sys.stderr.write(f'weylkit: {error}\n')
        return EXIT_USAGE
    except OSError as error:
        sys.stderr.write(f'weylkit: {error}\n')
        return EXIT_USAGE
    except (CartanError, classification.RowMismatch, classification.VerificationFailure) as error:
        sys.stderr.write(f'weylkit: {type(error).__name__}: {error}\n')
        return EXIT_FAILURE


def main():
    sys.exit(run())
