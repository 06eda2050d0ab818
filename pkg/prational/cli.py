# Copyright 2024 The prational Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Command line entry point.

Every subcommand accepts ``--config-file FILE`` and trailing ``KEY VALUE`` pairs, merged into the defaults of
:mod:`prational.default_cfg` in that order; explicit subcommand flags override both.

Exit codes: 0 on success, 1 for bad input or usage, 2 for a broken invariant or a failed self-test.
"""

import argparse
import logging
import os
import sys

from sympy import primerange

from .default_cfg import get_default_cfg
from .errors import DomainError, InvariantViolation, PrationalError, SplittingUndetermined
from .families import ggc_scan, pure_cubic_scan
from .harness import density_scan, render_csv, render_text, reproduce_table
from .invariants import run_suites
from .numberfield import format_element, make_field, make_unit
from .rationality import Status, verdict
from .records import FieldRecord, build_field, data_path, load_prime_table, load_records
from .recurrence import RecurrenceSpec, cross_check, screen
from .registry import Registry
from .ring import IntPoly, check_prime
from .tracker import DensityTracker
from .workers import thread_count


__all__ = ['main', 'COMMANDS']


logger = logging.getLogger("prational")

COMMANDS = Registry('command')

# subcommand flag -> configuration key it overrides
_CONFIG_FLAGS = {
    'table': [('pmin', 'TABLE.PMIN'), ('pmax', 'TABLE.PMAX'), ('format', 'TABLE.FORMAT')],
    'scan': [('pmin', 'SCAN.PMIN'), ('xmax', 'SCAN.XMAX')],
    'recurrence': [('pmax', 'RECURRENCE.PMAX')],
    'pure-cubic': [('pmin', 'PURE_CUBIC.PMIN'), ('pmax', 'PURE_CUBIC.PMAX'), ('h_data', 'PURE_CUBIC.H_DATA')],
    'ggc': [('xmax', 'GGC.XMAX'), ('T', 'GGC.T'), ('data', 'GGC.DATA')],
    'selftest': [('seed', 'SELFTEST.SEED'), ('scale', 'SELFTEST.SCALE')],
}


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write('%s: error: %s\n' % (self.prog, message))
        raise _UsageError(message)


def _coefficients(text):
    try:
        return tuple(int(x) for x in text.replace(',', ';').split(';') if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError('%r is not a list of integers' % text)


def _build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--config-file",
        default=None,
        metavar="FILE",
        help="path to config file",
        type=str,
    )
    common.add_argument(
        "opts",
        help="Modify config options using the command-line",
        default=None,
        nargs=argparse.REMAINDER,
    )

    parser = _ArgumentParser(prog='prational', description='p-rationality of complex cubic and totally imaginary '
                                                           'quartic fields')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    check = commands.add_parser('check', parents=[common], help='verdict for one field and one prime')
    check.add_argument('--poly', type=_coefficients, required=True,
                       help='defining polynomial, constant term first; write --poly=-1,... for a leading minus')
    check.add_argument('--unit', type=_coefficients, required=True, help='fundamental unit in powers of a')
    check.add_argument('--unit-den', type=int, default=1)
    check.add_argument('--h', type=int, required=True, help='class number')
    check.add_argument('--prime', type=int, required=True)
    check.add_argument('--torsion-order', type=int, default=2)
    check.add_argument('--torsion-gen', type=_coefficients, default=None)

    table = commands.add_parser('table', parents=[common], help='exceptional primes of a set of fields')
    table.add_argument('--input', default=None, help='CSV or JSON records, the bundled fields by default')
    table.add_argument('--pmin', type=int)
    table.add_argument('--pmax', type=int)
    table.add_argument('--format', choices=('text', 'csv'))

    scan = commands.add_parser('scan', parents=[common], help='count of p-rational primes per field')
    scan.add_argument('--input', default=None)
    scan.add_argument('--label', default=None, help='only the record with this label')
    scan.add_argument('--pmin', type=int)
    scan.add_argument('--xmax', type=int)

    recurrence = commands.add_parser('recurrence', parents=[common], help='recurrence screen and cross-check')
    recurrence.add_argument('--poly', type=_coefficients, required=True)
    recurrence.add_argument('--prime', type=int, default=None, help='every odd prime up to --pmax when omitted')
    recurrence.add_argument('--pmax', type=int)
    recurrence.add_argument('--unit', type=_coefficients, default=None)

    pure_cubic = commands.add_parser('pure-cubic', parents=[common], help='torsion test for Q(cbrt(p^3 - 1))')
    pure_cubic.add_argument('--pmin', type=int)
    pure_cubic.add_argument('--pmax', type=int)
    pure_cubic.add_argument('--h-data', dest='h_data', default=None)

    ggc = commands.add_parser('ggc', parents=[common], help='primes for which GGC holds in Q(sqrt(-1), sqrt(p^2-1))')
    ggc.add_argument('--xmax', type=int)
    ggc.add_argument('--T', type=float)
    ggc.add_argument('--data', default=None, help='CSV with columns p, h1, hL')

    selftest = commands.add_parser('selftest', parents=[common], help='run the invariant suites')
    selftest.add_argument('--suite', action='append', default=None)
    selftest.add_argument('--seed', type=int)
    selftest.add_argument('--scale', type=float)
    return parser


def _make_cfg(args):
    cfg = get_default_cfg()
    if args.config_file:
        cfg.merge_from_file(args.config_file)
    cfg.merge_from_list(args.opts or [])
    overrides = []
    for dest, key in _CONFIG_FLAGS.get(args.command, []):
        value = getattr(args, dest, None)
        if value is not None:
            overrides += [key, value]
    cfg.merge_from_list(overrides)
    cfg.freeze()
    return cfg


def _setup_logging(cfg):
    logger.setLevel(logging.DEBUG)
    formatter = logging.Formatter("%(asctime)s %(name)s %(levelname)s: %(message)s")
    handlers = []

    ch = logging.StreamHandler(stream=sys.stderr)
    ch.setLevel(logging.INFO)
    ch.setFormatter(formatter)
    handlers.append(ch)

    if cfg.WRITE_LOG:
        os.makedirs(cfg.OUTPUT_DIR, exist_ok=True)
        fh = logging.FileHandler(os.path.join(cfg.OUTPUT_DIR, 'log.txt'))
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(formatter)
        handlers.append(fh)

    for handler in handlers:
        logger.addHandler(handler)
    return handlers


def _load(path):
    return load_records(path or data_path('fields.csv'))


@COMMANDS.register('check')
def check_command(cfg, args):
    record = FieldRecord('command line', args.poly, args.h, args.unit, args.unit_den, args.torsion_order,
                         args.torsion_gen)
    K, unit = build_field(record)
    p = args.prime
    v = verdict(K, p, record, unit, cfg.ENGINE.LOG_PRECISION, cfg.ENGINE.LOG_PRECISION_CAP)
    print('field: %s, signature %s, h = %d' % (K.poly, tuple(K.signature), record.class_number))
    print('unit: %s' % format_element(K, unit.unit, symbol='α', unicode=True))
    for pf in v.factors:
        print('%s = %s: e = %d, f = %d' % (pf.name, pf, pf.e, pf.f))
    if v.condition2 is not None:
        for entry in v.condition2.entries:
            print('%s: ε^%d ≡ %s (mod %d)%s' % (
                entry.factor.name, entry.exponent, format_element(K, entry.residue, symbol='α', unicode=True),
                entry.modulus, ', congruent to 1 mod %s^%d' % (entry.factor.name, entry.factor.e + 1)
                if entry.congruent else ''))
    if v.condition1 is not None:
        print('class field test: %s%s' % (v.condition1.branch.value,
                                          '' if v.condition1.index is None else ', index %d' % v.condition1.index))
    if v.status is Status.P_RATIONAL:
        print('%d-rational' % p)
    elif v.status is Status.NOT_P_RATIONAL:
        print('not %d-rational (%s)' % (p, ', '.join(reason.value for reason in v.reasons)))
    elif v.status is Status.UNDETERMINED:
        print('%d-rationality undetermined (%s)' % (p, ', '.join(reason.value for reason in v.reasons)))
    else:
        print('criterion not applicable at %d: %s' % (p, v.guard.reason))
    return 0


@COMMANDS.register('table')
def table_command(cfg, args):
    rows = reproduce_table(_load(args.input), cfg.TABLE.PMIN, cfg.TABLE.PMAX, thread_count(cfg), cfg.PROGRESS,
                           cfg.ENGINE.LOG_PRECISION, cfg.ENGINE.LOG_PRECISION_CAP)
    if cfg.TABLE.FORMAT == 'csv':
        sys.stdout.write(render_csv(rows))
    else:
        sys.stdout.write(render_text(rows, cfg.TABLE.PMIN, cfg.TABLE.PMAX))
    return 0


@COMMANDS.register('scan')
def scan_command(cfg, args):
    records = _load(args.input)
    if args.label is not None:
        records = [r for r in records if r.label == args.label]
        if not records:
            raise DomainError('no record labelled %r' % args.label)
    for i, record in enumerate(records):
        tracker = DensityTracker(cfg)
        result = density_scan(record, cfg.SCAN.XMAX, cfg.SCAN.PMIN, tracker, cfg.ENGINE.LOG_PRECISION,
                              cfg.ENGINE.LOG_PRECISION_CAP)
        path = tracker.write('density.csv' if len(records) == 1 else 'density_%d.csv' % i)
        print('%s: %d p-rational, %d undetermined, ratio %.4f up to %d (%s)' % (
            record.label, result.count, result.undetermined, result.ratio, result.xmax, path))
    return 0


@COMMANDS.register('recurrence')
def recurrence_command(cfg, args):
    if args.prime is not None:
        check_prime(args.prime)
        primes = [args.prime]
    else:
        primes = [int(p) for p in primerange(3, cfg.RECURRENCE.PMAX + 1)]
    if args.unit is None:
        c = args.poly
        if len(c) != 4 or c[3] != 1:
            raise DomainError('the companion polynomial must be a monic cubic, got %s' % (c,))
        spec = RecurrenceSpec(-c[2], -c[1], -c[0])
        print(spec)
        for p in primes:
            result = screen(spec, p)
            if result.applicable:
                print('p = %d: %s, F(%d) = %d (mod %d)' % (p, result.shape.value, result.index, result.value, p * p))
            else:
                print('p = %d: not applicable (%s)' % (p, result.reason))
        return 0
    K = make_field(IntPoly(args.poly))
    unit = make_unit(K, K.from_power(args.unit))
    spec = RecurrenceSpec.from_unit(K, unit.unit)
    print(spec)
    violations = []
    for p in primes:
        try:
            report = cross_check(K, unit, spec, p)
        except SplittingUndetermined as e:
            print('p = %d: splitting undetermined (%s)' % (p, e))
            continue
        result = report.screen
        if not result.applicable:
            print('p = %d: not applicable (%s)' % (p, result.reason))
            continue
        print('p = %d: %s, F(%d) = %d (mod %d), torsion witness: %s' % (
            p, result.shape.value, result.index, result.value, p * p, 'yes' if report.witness else 'no'))
        if report.violation:
            violations.append(p)
    if violations:
        raise InvariantViolation('nonzero screen without a torsion witness at %s' % ', '.join(map(str, violations)))
    return 0


@COMMANDS.register('pure-cubic')
def pure_cubic_command(cfg, args):
    class_numbers = load_prime_table(cfg.PURE_CUBIC.H_DATA or data_path('pure_cubic_h.csv'), ['h'])
    rows = pure_cubic_scan(cfg.PURE_CUBIC.PMIN, cfg.PURE_CUBIC.PMAX, class_numbers, thread_count(cfg), cfg.PROGRESS)
    for row in rows:
        print('%d  %-16s  witness %-4s  closed form %-3s  %s' % (
            row.p, row.shape.value, row.witness.name if row.witness is not None else '-',
            'ok' if row.closed_form_ok else 'bad', row.class_flag))
    return 0


@COMMANDS.register('ggc')
def ggc_command(cfg, args):
    ingested = load_prime_table(cfg.GGC.DATA, ['h1', 'hL']) if cfg.GGC.DATA else None
    candidates = ggc_scan(cfg.GGC.XMAX, cfg.GGC.T, ingested, cfg.GGC.XMAX_CAP, thread_count(cfg))
    for c in candidates:
        line = 'p = %d  n = %d  m = %d  h = %d  bound %.2f  %s' % (c.p, c.n, c.m, c.hK2, c.bound, c.verdict.value)
        if c.kuroda is not None:
            line += '  q = %s%s' % (c.kuroda.q, '' if c.kuroda.valid else ' (invalid)')
        print(line)
    print('%d primes up to %d' % (len(candidates), cfg.GGC.XMAX))
    return 0


@COMMANDS.register('selftest')
def selftest_command(cfg, args):
    results = run_suites(cfg.SELFTEST.SEED, cfg.SELFTEST.SCALE, args.suite)
    for name, passed, message in results:
        print('%-14s %s  %s' % (name, 'ok  ' if passed else 'FAIL', message))
    return 0 if all(passed for _, passed, _ in results) else 2


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return 1
    except SystemExit as e:
        return e.code or 0

    try:
        cfg = _make_cfg(args)
    except (OSError, KeyError, ValueError, AssertionError) as e:
        sys.stderr.write('prational: bad configuration: %s\n' % e)
        return 1

    handlers = _setup_logging(cfg)
    try:
        logger.debug(args)
        if args.config_file:
            logger.info("Loaded configuration file {}".format(args.config_file))
        logger.debug("Running with config:\n{}".format(cfg))
        return COMMANDS[args.command](cfg, args)
    except InvariantViolation as e:
        logger.error('invariant violated: %s', e)
        return 2
    except KeyError as e:
        logger.error(e.args[0] if e.args else e)
        return 1
    except (PrationalError, OSError) as e:
        logger.error('%s: %s', type(e).__name__, e)
        return 1
    finally:
        for handler in handlers:
            logger.removeHandler(handler)
            handler.close()


if __name__ == '__main__':
    sys.exit(main())
