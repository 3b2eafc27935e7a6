#!/usr/bin/env python3
"""
Extremal graph realizations - command line

    python app.py solve-max --family cycle --n 6 --out results/cycle6.json
    python app.py solve-min --family cube --svg results/cube_min.svg
    python app.py certify --graph hexagon.json --weights w.json --coords X.json
    python app.py render --family house --weights r.json --coords r.json --svg house.svg
    python app.py sweep --sense max --csv results/catalog.csv

Exit codes: 0 success, 1 input/solver/IO error, 2 solved but certificate failed.
"""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config.environments import PROFILES
from config.manager import ConfigManager
from modules.experiments import ExperimentManager
from modules.graph import Graph, family_names, generate, load_graph
from modules.reporting import read_coordinates, read_weights
from utils.constants import COMMANDS, EXIT_CODES
from utils.exceptions import ExtremalRealizationError
from utils.helpers import family_params, phi_from_args, setup_logging
from utils.validators import Validators

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='app.py',
        description='Maximal and minimal graph realizations from Laplacian eigenvalue optimization',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group('graph source')
    source.add_argument('--family', help=f"catalog family: {', '.join(family_names())}")
    source.add_argument('--n', type=int, help='vertex count parameter (cycle, path, complete, ...)')
    source.add_argument('--p', type=int, help='first size parameter (grid, complete_bipartite)')
    source.add_argument('--q', type=int, help='second size parameter (grid, complete_bipartite)')
    source.add_argument('--graph', help='graph JSON file')
    lengths = common.add_argument_group('squared edge lengths')
    lengths.add_argument('--phi', help='JSON file with a list of squared edge lengths')
    lengths.add_argument('--phi-uniform', type=float, help='same squared length on every edge')
    lengths.add_argument('--phi-list', help='comma separated squared lengths in sorted edge order')
    common.add_argument('--profile', choices=sorted(PROFILES), help='configuration profile')
    common.add_argument('--verbose', action='store_true', help='debug logging')
    common.add_argument('--quiet', action='store_true', help='warnings and errors only')

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument('--tol', type=float, help='duality gap tolerance')
    solver.add_argument('--mu0', type=float, help='initial barrier parameter')
    solver.add_argument('--max-outer', type=int, help='outer iteration cap')

    for command in ('solve-max', 'solve-min'):
        sub = subparsers.add_parser(command, parents=[common, solver],
                                    help=f'solve and realize ({COMMANDS[command]} sense)')
        sub.add_argument('--out', help='result JSON path')
        sub.add_argument('--svg', help='figure path')
        sub.add_argument('--dims', type=int, default=2, help='drawing dimension (2 or 3)')

    sub = subparsers.add_parser('certify', parents=[common], help='certify a given (X, w) pair')
    sub.add_argument('--sense', default='max', help='max or min')
    sub.add_argument('--weights', help='weights JSON (list, {"w": ...} or result file)')
    sub.add_argument('--coords', help='coordinates JSON (rows, {"X": ...} or result file)')
    sub.add_argument('--out', help='certificate JSON path')
    sub.add_argument('--drill', type=int, default=0, help='number of random perturbations to test')
    sub.add_argument('--seed', type=int, default=0, help='seed for --drill')

    sub = subparsers.add_parser('render', parents=[common], help='draw a given realization')
    sub.add_argument('--weights', help='weights JSON')
    sub.add_argument('--coords', help='coordinates JSON')
    sub.add_argument('--svg', help='figure path')
    sub.add_argument('--dims', type=int, default=2, help='drawing dimension (2 or 3)')

    sub = subparsers.add_parser('sweep', parents=[common, solver], help='solve the whole catalog')
    sub.add_argument('--sense', default='max', help='max or min')
    sub.add_argument('--csv', help='summary CSV path')

    return parser


def load_graph_source(args) -> Graph:
    """Graph from --family or --graph, with any phi override applied"""
    if args.graph:
        g = load_graph(args.graph)
    else:
        g = generate(args.family, **family_params(args))
    phi = phi_from_args(args, g.m)
    if phi is not None:
        g = g.with_phi(phi)
    return g


def handle_solve(args, experiments: ExperimentManager) -> Dict[str, Any]:
    """solve-max / solve-min"""
    try:
        g = load_graph_source(args)
    except (ExtremalRealizationError, OSError, ValueError, KeyError) as e:
        logger.error(f"Cannot load graph: {e}")
        return {'success': False, 'message': f'Cannot load graph: {e}'}

    opts = experiments.manager.get_solver_options(tol_gap=args.tol, mu0=args.mu0,
                                                  max_outer=args.max_outer)
    return experiments.solve_instance(g, COMMANDS[args.command], opts=opts, out_path=args.out,
                                      svg_path=args.svg, dims=args.dims)


def _load_pair(args):
    g = load_graph_source(args)
    return g, read_coordinates(args.coords), read_weights(args.weights)


def handle_certify(args, experiments: ExperimentManager) -> Dict[str, Any]:
    try:
        g, X, w = _load_pair(args)
    except (ExtremalRealizationError, OSError, ValueError, KeyError) as e:
        logger.error(f"Cannot load inputs: {e}")
        return {'success': False, 'message': f'Cannot load inputs: {e}'}

    outcome = experiments.certify_instance(g, X, w, args.sense, out_path=args.out)
    if outcome['success'] and args.drill > 0:
        outcome.update(experiments.perturbation_drill(g, X, w, args.sense, args.drill, args.seed))
    return outcome


def handle_render(args, experiments: ExperimentManager) -> Dict[str, Any]:
    try:
        g, X, w = _load_pair(args)
    except (ExtremalRealizationError, OSError, ValueError, KeyError) as e:
        logger.error(f"Cannot load inputs: {e}")
        return {'success': False, 'message': f'Cannot load inputs: {e}'}
    return experiments.render_instance(g, X, w, args.svg, args.dims)


def handle_sweep(args, experiments: ExperimentManager) -> Dict[str, Any]:
    opts = experiments.manager.get_solver_options(tol_gap=args.tol, mu0=args.mu0,
                                                  max_outer=args.max_outer)
    outcome = experiments.sweep(args.sense, csv_path=args.csv, opts=opts)
    if 'frame' in outcome:
        print(outcome['frame'].to_string(index=False))
    return outcome


HANDLERS = {
    'solve-max': handle_solve,
    'solve-min': handle_solve,
    'certify': handle_certify,
    'render': handle_render,
    'sweep': handle_sweep,
}


def exit_code(outcome: Dict[str, Any]) -> int:
    if not outcome.get('success'):
        return EXIT_CODES['ERROR']
    if outcome.get('certified') is False:
        return EXIT_CODES['CERTIFICATE_FAILED']
    return EXIT_CODES['SUCCESS']


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one command, return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors; 2 is reserved for failed certificates
        return EXIT_CODES['SUCCESS'] if e.code == 0 else EXIT_CODES['ERROR']

    setup_logging(args.verbose, args.quiet)

    if hasattr(args, 'sense'):
        check = Validators.validate_sense(args.sense)
        if not check['valid']:
            print(f"error: {check['message']}", file=sys.stderr)
            return EXIT_CODES['ERROR']
        args.sense = check['cleaned']

    check = Validators.validate_run_args(args)
    if not check['valid']:
        print(f"error: {check['message']}", file=sys.stderr)
        return EXIT_CODES['ERROR']

    try:
        experiments = ExperimentManager(ConfigManager(args.profile))
        outcome = HANDLERS[args.command](args, experiments)
    except (ExtremalRealizationError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        outcome = {'success': False, 'message': str(e)}

    stream = sys.stdout if outcome.get('success') else sys.stderr
    print(outcome.get('message', ''), file=stream)
    return exit_code(outcome)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
