"""
Command-line interface.

Exit codes: 0 when a property holds or an answer is yes, 1 when it fails or the answer is
no, 2 when the answer is unknown or the state bound was hit, 3 on unusable input.
"""

import argparse
import json
import logging
import pathlib
import sys
from collections.abc import Callable

from abc_justness.checking import bisimilar, check, enumerate_complete
from abc_justness.concurrency import (
    candidate_abstract_transitions,
    concurrent,
    enabled,
    equiv,
    render_abstract,
)
from abc_justness.config import Bounds, ConfigError, load_bounds
from abc_justness.corpus import corpus_names, corpus_path, load_corpus_fairness
from abc_justness.demo import scheduler_suite
from abc_justness.justness import get_justness_checker, justness_methods, witness_lines
from abc_justness.logic import AtomLevelMismatch, LtlSyntaxError, load_fairness, parse_ltl
from abc_justness.paths import MalformedPath, parse_lasso, path_to_dict, render_path
from abc_justness.sos import StateBoundExceeded, reachable, render, step_original
from abc_justness.syntax import (
    Spec,
    SpecError,
    parse_process,
    pretty_print,
    pretty_print_spec,
    read_spec_file,
)
from abc_justness.templates import justness_template, verdict_template

logger = logging.getLogger(__name__)

EXIT_TRUE, EXIT_FALSE, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3

_STATUS_EXIT = {'holds': EXIT_TRUE, 'fails': EXIT_FALSE, 'unknown': EXIT_UNKNOWN}


def _resolve_spec_path(text: str) -> pathlib.Path:
    path = pathlib.Path(text)
    if not path.exists() and path.suffix in ('', '.abc') and path.stem in corpus_names():
        logger.info('Using bundled system %s', path.stem)
        return corpus_path(path.stem)
    if not path.is_file():
        raise FileNotFoundError(f'No specification file {text}')
    return path


def _load(args: argparse.Namespace) -> Spec:
    return read_spec_file(_resolve_spec_path(args.spec))


def _bounds(args: argparse.Namespace) -> Bounds:
    return load_bounds(
        args.config,
        stem=args.stem,
        cycle=args.cycle,
        lift=args.lift,
        finlen=args.finlen,
        max_states=args.max_states,
    )


def _fairness(args: argparse.Namespace, spec: Spec):
    if args.fair is not None:
        return load_fairness(args.fair, spec)
    path = pathlib.Path(args.spec)
    if not path.exists() and path.stem in corpus_names():
        return load_corpus_fairness(path.stem)
    return ()


def _emit(text: str):
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def cmd_parse(args: argparse.Namespace) -> int:
    spec = _load(args)
    _emit(pretty_print_spec(spec))
    return EXIT_TRUE


def cmd_lts(args: argparse.Namespace) -> int:
    spec = _load(args)
    graph = reachable(spec.init, spec, _bounds(args)['max_states'])
    match args.format:
        case 'json':
            _emit(graph.to_json())
        case 'text':
            lines = [f'{i}: {pretty_print(state)}' for i, state in enumerate(graph.states)]
            lines += [
                f'{e.src} -{e.label}-> {e.target}  {render(e.derivation)}' for e in graph.edges
            ]
            _emit('\n'.join(lines))
        case _:
            _emit(graph.to_dot())
    return EXIT_TRUE


def cmd_derivations(args: argparse.Namespace) -> int:
    spec = _load(args)
    graph = reachable(spec.init, spec, _bounds(args)['max_states'])
    if not 0 <= args.state < len(graph.states):
        raise MalformedPath(f'no state with index {args.state}')
    derivations = step_original(graph.states[args.state], spec)
    names = [render(d) for d in derivations]

    if args.format == 'json':
        payload: dict = {
            'state': pretty_print(graph.states[args.state]),
            'derivations': [
                {'name': name, 'label': str(d.label), 'target': pretty_print(d.target)}
                for name, d in zip(names, derivations, strict=True)
            ],
        }
        if args.tables:
            for title, relation in (('concurrent', concurrent), ('equivalent', equiv)):
                payload[title] = [[relation(c, z) for z in derivations] for c in derivations]
        _emit(json.dumps(payload, indent=2))
        return EXIT_TRUE

    lines = [
        f'{k}: {name} -{d.label}-> {pretty_print(d.target)}'
        for k, (name, d) in enumerate(zip(names, derivations, strict=True))
    ]
    if args.tables:
        for title, relation in (('concurrent', concurrent), ('equivalent', equiv)):
            lines.append(title)
            for k, chi in enumerate(derivations):
                row = ''.join('x' if relation(chi, zeta) else '.' for zeta in derivations)
                lines.append(f'  {k:>3} {row}')
    _emit('\n'.join(lines))
    return EXIT_TRUE


def cmd_conc(args: argparse.Namespace) -> int:
    spec = _load(args)
    graph = reachable(spec.init, spec, _bounds(args)['max_states'])
    by_name = {render(edge.derivation): edge.derivation for edge in graph.edges}
    missing = [name for name in (args.chi, args.zeta) if name not in by_name]
    if missing:
        raise MalformedPath(f'no reachable derivation named {missing[0]}')
    answer = concurrent(by_name[args.chi], by_name[args.zeta])
    _emit('true' if answer else 'false')
    return EXIT_TRUE if answer else EXIT_FALSE


def cmd_abstract(args: argparse.Namespace) -> int:
    spec = _load(args)
    graph = reachable(spec.init, spec, _bounds(args)['max_states'])
    rows = []
    for i, state in enumerate(graph.states):
        for nu in candidate_abstract_transitions(state, spec):
            rows.append(
                {
                    'state': i,
                    'transition': render_abstract(nu),
                    'enabled': enabled(nu, state, spec),
                }
            )
    if args.format == 'json':
        _emit(json.dumps(rows, indent=2))
    else:
        lines = [
            f'{r["state"]}: {r["transition"]} {"en" if r["enabled"] else "-"}' for r in rows
        ]
        _emit('\n'.join(lines))
    return EXIT_TRUE


def cmd_just(args: argparse.Namespace) -> int:
    spec = _load(args)
    bounds = _bounds(args)
    path = parse_lasso(args.path, reachable(spec.init, spec, bounds['max_states']))
    methods = justness_methods() if args.method == 'all' else [args.method]
    verdicts = [get_justness_checker(m, spec, bounds['lift']).verdict(path) for m in methods]

    if args.format == 'json':
        _emit(json.dumps({'path': path_to_dict(path), 'verdicts': verdicts}, indent=2))
    else:
        _emit(render_path(path))
        for verdict in verdicts:
            _emit(
                justness_template.render(verdict=verdict, witness_lines=witness_lines(verdict))
            )

    answers = {verdict['just'] for verdict in verdicts}
    if len(answers) > 1:
        logger.warning('Justness checkers disagree on %s', render_path(path))
        return EXIT_UNKNOWN
    return EXIT_TRUE if answers.pop() else EXIT_FALSE


def cmd_lassos(args: argparse.Namespace) -> int:
    spec = _load(args)
    paths = list(enumerate_complete(spec, _fairness(args, spec), _bounds(args)))
    if args.format == 'json':
        _emit(json.dumps([path_to_dict(path) for path in paths], indent=2))
    else:
        texts = [render_path(path) for path in paths]
        _emit('\n'.join(texts) if texts else 'no complete paths within bounds')
    return EXIT_TRUE


def cmd_check(args: argparse.Namespace) -> int:
    spec = _load(args)
    verdict = check(spec, parse_ltl(args.ltl, spec), _fairness(args, spec), _bounds(args))
    if args.format == 'json':
        _emit(json.dumps(verdict, indent=2))
    else:
        _emit(verdict_template.render(verdict=verdict))
    return _STATUS_EXIT[verdict['status']]


def cmd_bisim(args: argparse.Namespace) -> int:
    spec = _load(args)
    left = parse_process(args.left, spec)
    right = parse_process(args.right, left)
    answer = bisimilar(left.init, right.init, right, _bounds(args)['max_states'])
    _emit('true' if answer else 'false')
    return EXIT_TRUE if answer else EXIT_FALSE


def cmd_demo_scheduler(args: argparse.Namespace) -> int:
    bounds = load_bounds(
        args.config,
        stem=args.stem or 12,
        cycle=args.cycle or 12,
        lift=args.lift,
        finlen=args.finlen if args.finlen is not None else 12,
        max_states=args.max_states,
    )
    results = scheduler_suite(bounds)
    for number, result in enumerate(results, start=1):
        mark = 'PASS' if result['passed'] else 'FAIL'
        _emit(f'{mark} property {number}: {result["name"]} ({result["detail"]})')
    return EXIT_TRUE if all(result['passed'] for result in results) else EXIT_FALSE


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-v', '--verbose', action='count', default=0, help='-v for progress, -vv for details'
    )
    common.add_argument('--config', type=pathlib.Path, help='YAML file with bounds')
    common.add_argument('--stem', type=int, help='largest stem of a lasso (default 8)')
    common.add_argument('--cycle', type=int, help='largest cycle of a lasso (default 8)')
    common.add_argument('--lift', type=int, help='largest lift period (default 2)')
    common.add_argument('--finlen', type=int, help='largest finite path (default 12)')
    common.add_argument('--max-states', type=int, help='exploration bound (default 100000)')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog='abc',
        description='Explore ABC specifications and check properties of their complete paths.',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    def command(
        name: str,
        handler: Callable[[argparse.Namespace], int],
        help_text: str,
        formats: tuple[str, ...] = ('text', 'json'),
        takes_spec: bool = True,
    ) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if takes_spec:
            sub.add_argument('spec', help='specification file or bundled system name')
        sub.add_argument('--format', choices=formats, default=formats[0])
        sub.set_defaults(handler=handler)
        return sub

    command('parse', cmd_parse, 'print the normalized specification')
    command('lts', cmd_lts, 'reachable transition system', formats=('dot', 'json', 'text'))

    sub = command('derivations', cmd_derivations, 'derivations leaving a state')
    sub.add_argument('--state', type=int, default=0, help='state index in the reachable graph')
    sub.add_argument('--tables', action='store_true', help='add concurrency and equivalence')

    sub = command('conc', cmd_conc, 'whether one derivation is concurrent with another')
    sub.add_argument('chi')
    sub.add_argument('zeta')

    command('abstract', cmd_abstract, 'abstract transitions and their enabledness')

    sub = command('just', cmd_just, 'justness of a path literal')
    sub.add_argument(
        'path', help="path literal such as '0 -a-> 1 ; 1 -tau-> 1' or with -[derivation]-> steps"
    )
    sub.add_argument('--method', choices=[*justness_methods(), 'all'], default='all')

    sub = command('lassos', cmd_lassos, 'complete paths within the bounds')
    sub.add_argument('--fair', type=pathlib.Path, help='fairness file, one formula per line')

    sub = command('check', cmd_check, 'check an LTL property on complete paths')
    sub.add_argument('--ltl', required=True, help='property over label atoms')
    sub.add_argument('--fair', type=pathlib.Path, help='fairness file, one formula per line')

    sub = command('bisim', cmd_bisim, 'strong bisimilarity of two expressions')
    sub.add_argument('left')
    sub.add_argument('right')

    command(
        'demo-scheduler',
        cmd_demo_scheduler,
        'check the bundled fair scheduler',
        formats=('text',),
        takes_spec=False,
    )
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(
        level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr
    )

    try:
        return args.handler(args)
    except StateBoundExceeded as e:
        logger.error('%s', e)
        return EXIT_UNKNOWN
    except (
        SpecError,
        LtlSyntaxError,
        AtomLevelMismatch,
        ConfigError,
        MalformedPath,
        FileNotFoundError,
    ) as e:
        logger.error('%s', e)
        return EXIT_INPUT


def main():
    raise SystemExit(run())
