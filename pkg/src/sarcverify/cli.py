"""
Command line: `sarcverify verify ...` runs the check and writes the report,
`sarcverify inspect action|orbitals|smax ...` looks at a single action.
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from .caps import ENUMERATION_CAP, ORACLE_BUDGET, S_CAP, VERIFY_DEGREE_CAP
from .catalog import instantiate, load_catalog
from .errors import SarcError
from .fixtures import FIXTURES, fixture
from .maximal_actions import (affine_action, partition_action, product_action, subsets_action)
from .orbital_operations import export_edge_list, orbital_table, orbitals
from .sarc_operations import s_max_bruteforce, s_max_criterion
from .verifier import Verifier

logger = logging.getLogger(__name__)

LOG_LEVEL_ENV = 'SARCVERIFY_LOG_LEVEL'
EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


def setup_logging(verbose: int = 0):
    level = os.environ.get(LOG_LEVEL_ENV, 'WARNING').upper()
    if verbose == 1:
        level = 'INFO'
    elif verbose > 1:
        level = 'DEBUG'
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')


def _csv(text):
    return [t for t in text.split(',') if t]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='sarcverify',
                                     description='s-arc-transitivity of A_n and S_n on cosets of maximal subgroups')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command', required=True)

    v = sub.add_parser('verify', help='run the s <= 2 check and write a report')
    v.add_argument('--n-min', type=int, default=5)
    v.add_argument('--n-max', type=int, default=9)
    v.add_argument('--groups', type=_csv, default=['alt', 'sym'])
    v.add_argument('--families', type=_csv, default=['a', 'b', 'c', 'catalog'])
    v.add_argument('--degree-cap', type=int, default=VERIFY_DEGREE_CAP)
    v.add_argument('--s-cap', type=int, default=S_CAP)
    v.add_argument('--oracle-budget', type=int, default=ORACLE_BUDGET)
    v.add_argument('--catalog', default=None)
    v.add_argument('--n-jobs', type=int, default=1)
    v.add_argument('--out', default=None, help='report JSON path')
    v.add_argument('--tables', default=None, help='prefix of the CSV tables')

    i = sub.add_parser('inspect', help='look at one action')
    i.add_argument('what', choices=['action', 'orbitals', 'smax'])
    i.add_argument('--fixture', choices=sorted(FIXTURES))
    i.add_argument('--n', type=int)
    i.add_argument('--group', choices=['alt', 'sym'], default='sym')
    i.add_argument('--family', choices=['subsets', 'partitions', 'affine', 'product'])
    i.add_argument('--m', type=int)
    i.add_argument('--k', type=int)
    i.add_argument('--p', type=int)
    i.add_argument('--catalog-entry', type=int)
    i.add_argument('--catalog', default=None)
    i.add_argument('--orbital', type=int, default=0)
    i.add_argument('--cap', type=int, default=S_CAP)
    i.add_argument('--method', choices=['criterion', 'brute_force'], default='criterion')
    i.add_argument('--out', default=None, help='JSON output path')
    i.add_argument('--export', default=None, help='edge list path of the chosen orbital')
    return parser


FAMILY_PARAMETERS = {'subsets': [('n', 'm')], 'partitions': [('n', 'm')],
                     'affine': [('n',), ('p', 'k')], 'product': [('m', 'k')]}


def check_family_parameters(args):
    """Raise a usage error unless one of the parameter sets of the family is fully given."""
    options = FAMILY_PARAMETERS[args.family]
    if any(all(getattr(args, name) is not None for name in names) for names in options):
        return
    needs = ' or '.join(' and '.join(f'--{name}' for name in names) for names in options)
    raise SarcError(f'family {args.family} needs {needs}')


def action_from_args(args):
    if args.fixture:
        return fixture(args.fixture)
    if args.catalog_entry is not None:
        entries = load_catalog(args.catalog)
        if not 0 <= args.catalog_entry < len(entries):
            raise SarcError(f'catalog entry {args.catalog_entry} out of range 0..{len(entries) - 1}')
        inst = instantiate(entries[args.catalog_entry])
        if inst.action is None:
            raise SarcError(f'catalog entry rejected: {inst.reason}')
        return inst.action
    if args.family is not None:
        check_family_parameters(args)
    if args.family == 'subsets':
        return subsets_action(args.n, args.m, args.group)
    if args.family == 'partitions':
        if args.m < 1:
            raise SarcError(f'--m must be positive, got {args.m}')
        k = args.k if args.k is not None else args.n // args.m
        return partition_action(args.n, args.m, k, args.group)
    if args.family == 'affine':
        n = args.n if args.n is not None else args.p ** args.k
        if args.p is not None and args.k is not None and args.p ** args.k != n:
            raise SarcError(f'n = {n} is not {args.p}^{args.k}')
        return affine_action(n, args.group)
    if args.family == 'product':
        return product_action(args.m, args.k, args.group)
    raise SarcError('name an action with --fixture, --catalog-entry or --family')


def run_inspect(args) -> dict:
    action = action_from_args(args)
    G = action.induced
    out = {'action': action.name, 'degree': G.degree, 'order': G.order(),
           'stabilizer_order': G.stabilizer_orders([0])[0]}
    if args.what == 'action':
        out['primitive'] = G.is_primitive() if G.is_transitive() else False
        print(action)
        print(f"stabilizer order {out['stabilizer_order']}, primitive {out['primitive']}")
        return out
    digraphs = orbitals(action)
    if args.what == 'orbitals':
        table = orbital_table(digraphs)
        print(table.to_string(index=False))
        out['orbitals'] = [d.summary() for d in digraphs]
    else:
        if not 0 <= args.orbital < len(digraphs):
            raise SarcError(f'orbital {args.orbital} out of range 0..{len(digraphs) - 1}')
        d = digraphs[args.orbital]
        if args.method == 'criterion':
            res = s_max_criterion(action, d, cap=args.cap)
        else:
            res = s_max_bruteforce(action, d, cap=args.cap, budget=ENUMERATION_CAP)
        print(d)
        print(f's_max {res.label} ({res.method}), divisibility cap {res.divisibility_cap}')
        out['orbital'] = d.summary()
        out['result'] = res.to_dict()
    if args.export and digraphs:
        export_edge_list(digraphs[args.orbital], args.export)
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    try:
        if args.command == 'verify':
            verifier = Verifier(n_min=args.n_min, n_max=args.n_max, group_types=args.groups,
                                families=args.families, degree_cap=args.degree_cap, s_cap=args.s_cap,
                                catalog_path=args.catalog, oracle_budget=args.oracle_budget,
                                n_jobs=args.n_jobs, verbose=args.verbose)
            verifier.verify()
            if args.out:
                verifier.save_report(args.out)
            if args.tables:
                verifier.save_tables(args.tables)
            print(verifier)
            print(verifier.conjecture_status())
            for issue in verifier.inconsistencies:
                logger.error(f'inconsistency: {issue}')
            return EXIT_VIOLATIONS if verifier.violations() else EXIT_OK
        out = run_inspect(args)
        if args.out:
            with open(args.out, 'w') as f:
                json.dump(out, f, indent=2, sort_keys=True)
        return EXIT_OK
    except SarcError as e:
        logger.error(str(e))
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
