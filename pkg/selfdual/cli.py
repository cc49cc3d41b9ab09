# Copyright 2024 The selfdual Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line entry point: `python -m selfdual.cli <subcommand> ...`.

Exit codes: 0 on success, 1 when a verification or condition check fails,
2 on usage errors.
"""

from __future__ import absolute_import
import argparse
import logging
import sys

import six

from common.run_config import RunConfig, load_search_config
from . import circulant as circ
from . import constructions
from . import graymap
from . import ring as rng
from .codeops import (alpha_weight, classify_alpha, min_distance,
                      verify_hermitian_self_dual, weight_distribution_exhaustive)
from .constructions import as_f4, building_up, thm1, thm2, thm3
from .errors import (BadSymbol, ConfigInvalid, DimensionMismatch, MixedRings,
                     NotUnitaryLambda, SelfDualError, UnknownEnumeratorLength,
                     UnknownFixture)
from .generator import GeneratorMatrix
from .search import (enumerate_unitary_circulants, format_record,
                     load_base, make_search_config, run_search, table_ids,
                     verify_table, write_records)
from .search.report import dump_html

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (BadSymbol, ConfigInvalid, DimensionMismatch, MixedRings,
                NotUnitaryLambda, UnknownFixture)

SEARCH_DEFAULTS = {
    'k': None, 'seed': 0, 'budget': 10 ** 6, 'target_d': None,
    'extended': False, 'workers': 1, 'out': None, 'lambdas': None, 'mus': None,
    'base': None, 'batch_size': None, 'n': None, 'ring': 'f4',
    'construction': None, 'max_records': None
}


def load_run_config(args):
    if getattr(args, 'config', None):
        return RunConfig.make_from_file(args.config)
    return RunConfig.make_default()


def _symbols(text):
    """'1,2,3' -> ['1', '2', '3']."""
    return [s for s in text.split(',') if s] if text else None


def read_generator(path, ring):
    with open(path) as f:
        rows = [rng.decode_vector(line, ring) for line in f if line.strip()]
    return GeneratorMatrix(ring, rows)


def load_code(args):
    """F4 generator named by --code <table>:<row> or read from --generator."""
    if args.code:
        return load_base(args.code)
    if args.generator:
        return as_f4(read_generator(args.generator, rng.ring_by_name(args.ring)))
    raise ConfigInvalid('give --code <table>:<row> or --generator PATH')


def cmd_verify_table(args):
    run_config = load_run_config(args)
    ids = table_ids() if args.id == 'all' else [args.id]
    rows = [int(r) for r in args.rows.split(',')] if args.rows else None
    reports = []
    for table_id in ids:
        report = verify_table(table_id, rows=rows,
                              budget=run_config.budget(args.extended),
                              info_set_budget=run_config.info_set_budget,
                              workers=args.workers or run_config.workers,
                              method=args.method)
        for line in report.lines():
            print(line)
        print('{}: {}'.format(table_id, report.summary()))
        reports.append(report)
    if args.html:
        dump_html(args.html, reports)
    return EXIT_OK if all(r.all_passed for r in reports) else EXIT_FAILED


def search_settings(args):
    settings = dict(SEARCH_DEFAULTS)
    if args.config:
        settings.update(load_search_config(args.config))
    for key in SEARCH_DEFAULTS:
        value = getattr(args, key, None)
        if value is not None and value is not False:
            settings[key] = value
    for key in ('lambdas', 'mus'):
        if isinstance(settings[key], six.string_types):
            settings[key] = _symbols(settings[key])
    return settings


def cmd_search(args):
    run_config = load_run_config(args)
    s = search_settings(args)
    if not s['construction']:
        raise ConfigInvalid('--construction is required')
    cfg = make_search_config(
        s['construction'], s['ring'], n=s['n'], k=s['k'],
        target_d=s['target_d'], budget=s['budget'], seed=s['seed'],
        lambdas=s['lambdas'], mus=s['mus'], base=s['base'],
        workers=s['workers'], extended=s['extended'],
        batch_size=s['batch_size'] or run_config.batch_size,
        max_records=s['max_records'])
    records = []
    for record in run_search(cfg, run_config):
        if cfg.workers == 1:
            print(format_record(record))
        records.append(record)
    if cfg.workers > 1:
        for record in sorted(records, key=format_record):
            print(format_record(record))
    if s['out']:
        write_records(s['out'], records)
    logging.info('Search emitted %d records', len(records))
    return EXIT_OK


def cmd_wdist(args):
    run_config = load_run_config(args)
    g = load_code(args)
    budget = run_config.budget(args.extended)
    workers = args.workers or run_config.workers
    dist = weight_distribution_exhaustive(g, cutoff=args.cutoff, budget=budget,
                                          workers=workers,
                                          inner_rows=run_config.inner_rows)
    print(dist.to_text())
    try:
        weight = alpha_weight(g.n)
    except UnknownEnumeratorLength:
        return EXIT_OK
    if dist.cutoff is None or dist.cutoff >= weight:
        alpha = dist[weight]
        print('alpha={} ({})'.format(alpha, classify_alpha(g.n, alpha)))
    return EXIT_OK


def cmd_mindist(args):
    run_config = load_run_config(args)
    g = load_code(args)
    d = min_distance(g, method=args.method,
                     budget=run_config.budget(args.extended),
                     level_budget=run_config.info_set_budget,
                     workers=args.workers or run_config.workers)
    print('d={}'.format(d))
    return EXIT_OK


def cmd_gray(args):
    v = rng.decode_vector(args.input, rng.F4U)
    print(rng.encode_vector(graymap.gray_map(v), rng.F4))
    logging.info('Lee weight %d', graymap.lee_weight(v))
    return EXIT_OK


def cmd_unitary_count(args):
    run_config = load_run_config(args)
    ring = rng.ring_by_name(args.ring)
    table = enumerate_unitary_circulants(
        ring, args.n, budget=args.budget or run_config.unitary_budget)
    for mu, count in table.counts().items():
        logging.info('mu=%s: %d', rng.encode(rng.element(ring, mu)), count)
    print(table.total)
    return EXIT_OK


def check_params(args):
    """(construction module, params, dense C or None) from check-params flags."""
    ring = rng.ring_by_name(args.ring)
    tag = args.construction
    if tag == 'thm1':
        params = thm1.make_params(ring, args.lam, args.mu, args.a, args.b, args.c)
        dense_c = None
        if args.dense_c:
            dense_c = circ.DenseMatrix(ring, read_generator(args.dense_c,
                                                            ring).entries)
        return thm1, params, dense_c
    elif tag == 'thm2':
        return thm2, thm2.make_params(ring, args.lam, args.mu,
                                      args.blocks.split(',')), None
    elif tag == 'thm3':
        return thm3, thm3.make_params(ring, args.x1, args.x2, args.x3,
                                      args.blocks.split(',')), None
    elif tag == 'building_up':
        base = load_base(args.base)
        return building_up, building_up.make_params(
            base, args.epsilon, rng.decode_vector(args.delta, base.ring)), None
    raise ConfigInvalid('unknown construction "{}"'.format(tag))


def cmd_check_params(args):
    module, params, dense_c = check_params(args)
    if module is thm1:
        ok = thm1.conditions(params, dense_c=dense_c)
    else:
        ok = module.conditions(params)
    print('conditions: {}'.format('pass' if ok else 'fail'))
    if not ok:
        return EXIT_FAILED
    g = thm1.build(params, dense_c) if module is thm1 else module.build(params)
    f4 = as_f4(g)
    self_dual = verify_hermitian_self_dual(f4)
    print('[{}, {}] self-dual: {}'.format(f4.n, f4.k, self_dual))
    if args.distance:
        run_config = load_run_config(args)
        print('d={}'.format(min_distance(
            f4, level_budget=run_config.info_set_budget)))
    return EXIT_OK if self_dual else EXIT_FAILED


def _add_run_flags(parser):
    parser.add_argument('--config', help='YAML file overriding run settings.')
    parser.add_argument('--extended', action='store_true',
                        help='Use the extended enumeration budget.')
    parser.add_argument('--workers', type=int,
                        help='Worker processes (default from the run config).')


def _add_code_flags(parser):
    parser.add_argument('--code', help='Table row as <table>:<row>, e.g. 26-1:9.')
    parser.add_argument('--generator',
                        help='File with one hex generator row per line.')
    parser.add_argument('--ring', default='f4', choices=sorted(rng.RINGS),
                        help='Ring of the --generator rows.')


def build_parser():
    argparser = argparse.ArgumentParser(
        prog='selfdual',
        description='Hermitian self-dual codes over F4 and F4+uF4.')
    argparser.add_argument('--verbose', action='store_true',
                           help='Log at DEBUG level.')
    sub = argparser.add_subparsers(dest='command')

    p = sub.add_parser('verify-table', help='Verify a shipped code table.')
    p.add_argument('--id', required=True,
                   help='Table id, e.g. 26-1, or "all".')
    p.add_argument('--rows', help='Comma separated row numbers to verify.')
    p.add_argument('--html', help='Also write an HTML report to this path.')
    p.add_argument('--method', default='info_set',
                   choices=['info_set', 'exhaustive'],
                   help='How the minimum distance is found.')
    _add_run_flags(p)
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser('search', help='Random search for self-dual codes.')
    p.add_argument('--construction', choices=constructions.TAGS)
    p.add_argument('--ring', choices=sorted(rng.RINGS))
    p.add_argument('--n', type=int, help='Circulant order.')
    p.add_argument('--k', type=int, help='Number of circulant blocks.')
    p.add_argument('--seed', type=int)
    p.add_argument('--budget', type=int, help='Candidates to draw.')
    p.add_argument('--target-d', dest='target_d', type=int,
                   help='Only emit codes with at least this minimum distance.')
    p.add_argument('--out', help='Write the records to this file.')
    p.add_argument('--lambdas', help='Comma separated lambda (epsilon) symbols.')
    p.add_argument('--mus', help='Comma separated mu symbols.')
    p.add_argument('--base', help='Building-up base code as <table>:<row>.')
    p.add_argument('--batch-size', dest='batch_size', type=int)
    p.add_argument('--max-records', dest='max_records', type=int,
                   help='Stop after emitting this many records.')
    _add_run_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser('wdist', help='Exhaustive weight distribution.')
    _add_code_flags(p)
    p.add_argument('--cutoff', type=int, help='Largest weight to report.')
    _add_run_flags(p)
    p.set_defaults(func=cmd_wdist)

    p = sub.add_parser('mindist', help='Minimum distance.')
    _add_code_flags(p)
    p.add_argument('--method', default='info_set',
                   choices=['info_set', 'exhaustive'])
    _add_run_flags(p)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser('gray', help='Gray image of an F4U vector.')
    p.add_argument('--in', dest='input', required=True,
                   help='Vector in hex notation, e.g. "(5B6)".')
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser('unitary-count', help='Count unitary mu-circulants.')
    p.add_argument('--ring', default='f4', choices=sorted(rng.RINGS))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--budget', type=int,
                   help='Largest number of generating vectors to test.')
    p.add_argument('--config', help='YAML file overriding run settings.')
    p.set_defaults(func=cmd_unitary_count)

    p = sub.add_parser('check-params',
                       help='Check construction conditions for given vectors.')
    p.add_argument('--construction', required=True, choices=constructions.TAGS)
    p.add_argument('--ring', default='f4', choices=sorted(rng.RINGS))
    p.add_argument('--lambda', dest='lam', default='1')
    p.add_argument('--mu', default='1')
    for name in ('a', 'b', 'c', 'x1', 'x2', 'x3', 'epsilon', 'delta', 'base'):
        p.add_argument('--{}'.format(name))
    p.add_argument('--blocks', help='Comma separated block vectors.')
    p.add_argument('--dense-c', dest='dense_c',
                   help='File with the rows of an arbitrary C for thm1.')
    p.add_argument('--distance', action='store_true',
                   help='Also compute the minimum distance.')
    p.add_argument('--config', help='YAML file overriding run settings.')
    p.set_defaults(func=cmd_check_params)
    return argparser


def parse_args(argv=None):
    return build_parser().parse_args(argv)


def main(args):
    logging.getLogger().setLevel(logging.DEBUG if args.verbose else logging.INFO)
    if not getattr(args, 'func', None):
        build_parser().print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except USAGE_ERRORS as err:
        logging.fatal('%s', err)
        return EXIT_USAGE
    except SelfDualError as err:
        logging.fatal('%s', err)
        return EXIT_FAILED


def run(argv=None):
    return main(parse_args(argv))


if __name__ == '__main__':
    sys.exit(run())
