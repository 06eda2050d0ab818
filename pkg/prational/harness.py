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
"""Tables of exceptional (field, p) pairs and density scans over a range of primes."""

import csv
import enum
import io
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from sympy import primerange

from .errors import DomainError, PrationalError, RecordError
from .rationality import Reason, Status, verdict
from .records import build_field
from .timer import timer
from .workers import map_ordered


__all__ = ['Cell', 'TableRow', 'ExpectedRow', 'DensityResult', 'cell_of', 'evaluate_cell', 'reproduce_table',
           'render_text', 'render_csv', 'load_table_expectations', 'density_scan']


logger = logging.getLogger("prational")


class Cell(enum.Enum):
    P_RATIONAL = 'pRational'
    P_DIVIDES_H = 'pDividesH'
    TORSION_NONTRIVIAL = 'torsionNontrivial'
    UNDETERMINED = 'undetermined'
    NOT_APPLICABLE = 'notApplicable'
    ERROR = 'error'


@dataclass(frozen=True)
class TableRow:
    label: str
    poly: Tuple[int, ...]
    cells: Tuple[Tuple[int, Cell], ...]
    class_divisors: Tuple[int, ...] = ()

    def primes_with(self, *kinds):
        return tuple(p for p, cell in self.cells if cell in kinds)

    @property
    def not_applicable(self):
        return self.primes_with(Cell.NOT_APPLICABLE)

    @property
    def torsion(self):
        return self.primes_with(Cell.TORSION_NONTRIVIAL)

    @property
    def undetermined(self):
        return self.primes_with(Cell.UNDETERMINED)

    @property
    def errors(self):
        return self.primes_with(Cell.ERROR)

    @property
    def not_p_rational(self):
        """Primes with a failed or undecided verdict, undecided ones rendered ``p?`` and failed cells ``p!``."""
        marks = {Cell.TORSION_NONTRIVIAL: '', Cell.P_DIVIDES_H: '', Cell.UNDETERMINED: '?', Cell.ERROR: '!'}
        return tuple('%d%s' % (p, marks[cell]) for p, cell in self.cells if cell in marks)

    @property
    def exceptional(self):
        return bool(self.class_divisors) or any(cell is not Cell.P_RATIONAL for _, cell in self.cells)


def cell_of(v):
    if v.status is Status.NOT_APPLICABLE:
        return Cell.NOT_APPLICABLE
    if Reason.TORSION_NONTRIVIAL in v.reasons:
        return Cell.TORSION_NONTRIVIAL
    if v.status is Status.NOT_P_RATIONAL:
        return Cell.P_DIVIDES_H
    if v.status is Status.UNDETERMINED:
        return Cell.UNDETERMINED
    return Cell.P_RATIONAL


def evaluate_cell(record, p, precision=2, precision_cap=16):
    try:
        K, unit = build_field(record)
        return cell_of(verdict(K, p, record, unit, precision, precision_cap))
    except PrationalError as e:
        logger.warning('%s at %d: %s: %s', record.label, p, type(e).__name__, e)
        return Cell.ERROR


@timer
def reproduce_table(records, pmin, pmax, worker_count=1, report_progress=False, precision=2, precision_cap=16):
    """ Evaluates every (record, p) pair with 5 <= pmin <= p <= pmax.

    Args:
        records (Sequence[FieldRecord]): fields with class numbers.
        pmin (int): smallest prime, at least 5.
        pmax (int): largest prime.
        worker_count (int, optional): threads evaluating cells. Rows come out in record order whatever the count.

    Returns:
        List[TableRow]
    """
    if pmin < 5 or pmax < pmin:
        raise DomainError('need 5 <= pmin <= pmax, got %d, %d' % (pmin, pmax))
    primes = [int(p) for p in primerange(pmin, pmax + 1)]
    tasks = [(record, p) for record in records for p in primes]
    cells = map_ordered(lambda task: evaluate_cell(task[0], task[1], precision, precision_cap), tasks,
                        worker_count, report_progress)
    rows = []
    for i, record in enumerate(records):
        row_cells = cells[i * len(primes):(i + 1) * len(primes)]
        h = record.class_number
        divisors = () if h is None else tuple(p for p in primes if h % p == 0)
        rows.append(TableRow(record.label, record.poly, tuple(zip(primes, row_cells)), divisors))
    return rows


def _cell_text(values):
    return ','.join(str(x) for x in values) if values else '-'


_HEADER = ('field', 'not applicable', 'p|h', 'tor', 'not p-rational')


def render_text(rows, pmin, pmax):
    """Aligned table of the exceptional rows followed by a one line summary of the others."""
    exceptional = [row for row in rows if row.exceptional]
    body = [(row.label, _cell_text(row.not_applicable),
             _cell_text(row.class_divisors), _cell_text(row.torsion), _cell_text(row.not_p_rational))
            for row in exceptional]
    widths = [max(len(line[i]) for line in [_HEADER] + body) for i in range(len(_HEADER))]
    lines = ['  '.join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in [_HEADER] + body]
    regular = [row.label for row in rows if not row.exceptional]
    if regular:
        lines.append('p-rational for every prime %d <= p <= %d: %s' % (pmin, pmax, ', '.join(regular)))
    else:
        lines.append('no field is p-rational for every prime %d <= p <= %d' % (pmin, pmax))
    return '\n'.join(lines) + '\n'


def render_csv(rows):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(['label', 'poly', 'not_applicable', 'p_divides_h', 'tor', 'not_p_rational'])
    for row in rows:
        writer.writerow([row.label, ';'.join(str(c) for c in row.poly), ';'.join(str(p) for p in row.not_applicable),
                         ';'.join(str(p) for p in row.class_divisors), ';'.join(str(p) for p in row.torsion),
                         ';'.join(row.not_p_rational)])
    return stream.getvalue()


@dataclass(frozen=True)
class ExpectedRow:
    table: int
    label: str
    poly: Tuple[int, ...]
    not_applicable: Tuple[int, ...]
    p_divides_h: Tuple[int, ...]
    tor: Tuple[int, ...]
    not_p_rational: Tuple[str, ...]


def load_table_expectations(path):
    """Reads the exceptional pairs of a reference table, keyed by label."""
    def primes(text):
        return tuple(int(x) for x in text.split(';') if x.strip())

    expected = {}
    with open(path, 'r', newline='') as f:
        lines = [(i, line) for i, line in enumerate(f, 1) if line.strip() and not line.lstrip().startswith('#')]
    if not lines:
        return expected
    header = next(csv.reader([lines[0][1]]))
    for line_number, line in lines[1:]:
        row = dict(zip(header, next(csv.reader([line]))))
        try:
            expected[row['label']] = ExpectedRow(
                int(row['table']), row['label'], tuple(int(x) for x in row['poly'].split(';')),
                primes(row['not_applicable']), primes(row['p_divides_h']), primes(row['tor']),
                tuple(x for x in row['not_p_rational'].split(';') if x))
        except (KeyError, ValueError) as e:
            raise RecordError('bad expectation row: %s' % e, path, line_number)
    return expected


@dataclass(frozen=True)
class DensityResult:
    count: int
    undetermined: int
    ratio: float
    per_prime: Tuple[Tuple[int, Status], ...]
    xmax: int
    label: Optional[str] = None


@timer
def density_scan(record, xmax, pmin=5, tracker=None, precision=2, precision_cap=16):
    """ Counts the primes pmin <= p <= xmax at which the field of ``record`` is p-rational.

    Pairs the criterion does not cover are skipped; undecided ones are counted apart.

    Args:
        record (FieldRecord): the field.
        xmax (int): last prime considered, at least 5.
        tracker (DensityTracker, optional): receives the running counts at every evaluated prime.

    Returns:
        DensityResult: ``ratio`` is count / log(xmax).
    """
    if xmax < 5:
        raise DomainError('xmax must be at least 5, got %d' % xmax)
    K, unit = build_field(record)
    count = undetermined = 0
    per_prime = []
    for p in primerange(max(pmin, 3), xmax + 1):
        p = int(p)
        status = verdict(K, p, record, unit, precision, precision_cap).status
        if status is Status.NOT_APPLICABLE:
            continue
        if status is Status.P_RATIONAL:
            count += 1
        elif status is Status.UNDETERMINED:
            undetermined += 1
        per_prime.append((p, status))
        if tracker is not None:
            tracker.update(p, count, undetermined)
    return DensityResult(count, undetermined, float(count / np.log(xmax)), tuple(per_prime), xmax, record.label)
