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
"""Field records: CSV/JSON ingestion, CSV emission and construction of the field and unit they describe.

CSV columns, coefficient lists constant term first and separated by ``;`` (or ``,``)::

    label, degree, poly, h, unit, unit_den, torsion_order, torsion_gen, torsion_gen_den, basis, aux_q, aux_gen_poly,
    aux_power_gen

``basis`` lists the rows of the integral basis in powers of a, rows separated by ``;`` and entries by ``,``,
rationals written as ``n/d``. Lines starting with ``#`` are comments.
"""

import csv
import io
import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .errors import PrationalError, RecordError
from .numberfield import make_field, make_unit
from .ring import IntPoly


__all__ = ['AuxIdeal', 'FieldRecord', 'COLUMNS', 'load_records', 'write_records', 'records_to_csv', 'build_field',
           'load_prime_table', 'data_path']


logger = logging.getLogger("prational")


COLUMNS = ['label', 'degree', 'poly', 'h', 'unit', 'unit_den', 'torsion_order', 'torsion_gen', 'torsion_gen_den',
           'basis', 'aux_q', 'aux_gen_poly', 'aux_power_gen']


def data_path(name):
    """Path of a file bundled in ``prational/data``."""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', name)


@dataclass(frozen=True)
class AuxIdeal:
    """Non-principal prime Q = (q, g(a)) together with a generator of Q^p in the power basis."""
    q: int
    generator_poly: Tuple[int, ...]
    power_generator: Tuple[int, ...]


@dataclass(frozen=True)
class FieldRecord:
    label: str
    poly: Tuple[int, ...]
    class_number: Optional[int] = None
    unit: Tuple[int, ...] = ()
    unit_denominator: int = 1
    torsion_order: int = 2
    torsion_generator: Optional[Tuple[int, ...]] = None
    torsion_generator_denominator: int = 1
    basis: Optional[Tuple[Tuple[Fraction, ...], ...]] = None
    aux_ideal: Optional[AuxIdeal] = None

    @property
    def degree(self):
        return len(self.poly) - 1


def _blank(value):
    return value is None or (isinstance(value, str) and value.strip() == '')


def _int(value, name):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError('%s: %r is not an integer' % (name, value))


def _ints(value, name):
    if isinstance(value, (list, tuple)):
        return tuple(_int(x, name) for x in value)
    parts = str(value).replace(',', ';').split(';')
    return tuple(_int(x.strip(), name) for x in parts if x.strip())


def _basis(value):
    if isinstance(value, (list, tuple)):
        rows = value
    else:
        rows = [row.split(',') for row in str(value).split(';') if row.strip()]
    try:
        return tuple(tuple(Fraction(str(x).strip()) for x in row) for row in rows)
    except (ValueError, ZeroDivisionError):
        raise ValueError('basis: %r is not a matrix of rationals' % (value,))


def _record_from_mapping(row):
    label = str(row.get('label') or '').strip()
    if not label:
        raise ValueError('label is missing')
    if _blank(row.get('poly')):
        raise ValueError('poly is missing')
    poly = _ints(row['poly'], 'poly')
    if len(poly) not in (4, 5) or poly[-1] != 1:
        raise ValueError('poly must be monic of degree 3 or 4, got %s' % (poly,))
    if not _blank(row.get('degree')) and _int(row['degree'], 'degree') != len(poly) - 1:
        raise ValueError('degree %s does not match poly of degree %d' % (row['degree'], len(poly) - 1))
    if _blank(row.get('unit')):
        raise ValueError('unit is missing')

    def optional_int(name, default=None):
        return default if _blank(row.get(name)) else _int(row[name], name)

    aux = None
    if not _blank(row.get('aux_q')):
        if _blank(row.get('aux_gen_poly')) or _blank(row.get('aux_power_gen')):
            raise ValueError('aux_q needs aux_gen_poly and aux_power_gen')
        aux = AuxIdeal(_int(row['aux_q'], 'aux_q'), _ints(row['aux_gen_poly'], 'aux_gen_poly'),
                       _ints(row['aux_power_gen'], 'aux_power_gen'))
    class_number = optional_int('h')
    if class_number is not None and class_number < 1:
        raise ValueError('h must be positive, got %d' % class_number)
    return FieldRecord(
        label=label,
        poly=poly,
        class_number=class_number,
        unit=_ints(row['unit'], 'unit'),
        unit_denominator=optional_int('unit_den', 1),
        torsion_order=optional_int('torsion_order', 2),
        torsion_generator=None if _blank(row.get('torsion_gen')) else _ints(row['torsion_gen'], 'torsion_gen'),
        torsion_generator_denominator=optional_int('torsion_gen_den', 1),
        basis=None if _blank(row.get('basis')) else _basis(row['basis']),
        aux_ideal=aux)


def _csv_rows(path, stream):
    header = None
    for line_number, line in enumerate(stream, 1):
        if not line.strip() or line.lstrip().startswith('#'):
            continue
        values = next(csv.reader([line]))
        if header is None:
            header = [x.strip() for x in values]
            missing = [c for c in ('label', 'poly', 'unit') if c not in header]
            if missing:
                raise RecordError('missing columns %s' % ', '.join(missing), path, line_number)
            continue
        if len(values) > len(header):
            raise RecordError('%d fields, header has %d' % (len(values), len(header)), path, line_number)
        yield line_number, dict(zip(header, values))


def _json_rows(path, stream):
    try:
        data = json.load(stream)
    except ValueError as e:
        raise RecordError('invalid JSON: %s' % e, path)
    if not isinstance(data, list):
        raise RecordError('expected a list of records', path)
    for i, row in enumerate(data, 1):
        if not isinstance(row, dict):
            raise RecordError('record %d is not an object' % i, path)
        yield i, row


def load_records(path, format=None):
    """ Reads and validates field records.

    Malformed rows abort with a :class:`~prational.errors.RecordError` naming the file and line (the record index for
    JSON). Rows that parse but describe no valid field or unit are logged and skipped.

    Args:
        path (str): CSV or JSON file.
        format (str, optional): ``'csv'`` or ``'json'``; guessed from the extension when omitted.

    Returns:
        List[FieldRecord]
    """
    if format is None:
        format = 'json' if path.lower().endswith('.json') else 'csv'
    if format not in ('csv', 'json'):
        raise RecordError('unknown format %r' % format, path)
    try:
        with open(path, 'r', newline='') as f:
            rows = list((_csv_rows if format == 'csv' else _json_rows)(path, f))
    except OSError as e:
        raise RecordError(str(e), path)
    records = []
    for position, row in rows:
        try:
            record = _record_from_mapping(row)
        except ValueError as e:
            raise RecordError(str(e), path, position)
        try:
            build_field(record)
        except PrationalError as e:
            logger.warning('%s:%d: skipping %s: %s', path, position, record.label, e)
            continue
        records.append(record)
    logger.info('loaded %d records from %s', len(records), path)
    return records


def _join(values):
    return ';'.join(str(x) for x in values)


def _row(record):
    aux = record.aux_ideal
    return [record.label, record.degree, _join(record.poly),
            '' if record.class_number is None else record.class_number,
            _join(record.unit), record.unit_denominator, record.torsion_order,
            '' if record.torsion_generator is None else _join(record.torsion_generator),
            record.torsion_generator_denominator,
            '' if record.basis is None else ';'.join(','.join(str(x) for x in row) for row in record.basis),
            '' if aux is None else aux.q,
            '' if aux is None else _join(aux.generator_poly),
            '' if aux is None else _join(aux.power_generator)]


def write_records(records, path_or_stream):
    """Writes records as CSV with the :data:`COLUMNS` header; :func:`load_records` reads them back unchanged."""
    if isinstance(path_or_stream, (str, bytes, os.PathLike)):
        with open(path_or_stream, 'w', newline='') as f:
            return write_records(records, f)
    writer = csv.writer(path_or_stream, lineterminator='\n')
    writer.writerow(COLUMNS)
    for record in records:
        writer.writerow(_row(record))


def records_to_csv(records):
    stream = io.StringIO()
    write_records(records, stream)
    return stream.getvalue()


@lru_cache(maxsize=1024)
def build_field(record):
    """ Field and validated unit data of a record.

    Returns:
        Tuple[NumberField, UnitData]
    """
    K = make_field(IntPoly(record.poly), record.basis)
    unit = K.from_power(record.unit, record.unit_denominator)
    zeta = None
    if record.torsion_generator is not None:
        zeta = K.from_power(record.torsion_generator, record.torsion_generator_denominator)
    return K, make_unit(K, unit, record.torsion_order, zeta)


def load_prime_table(path, columns):
    """ Reads a CSV keyed by a ``p`` column.

    Args:
        path (str): file with a header containing ``p`` and every name in ``columns``.
        columns (Sequence[str]): integer columns to return.

    Returns:
        Dict[int, int] for a single column, Dict[int, Tuple[int, ...]] otherwise.
    """
    table = {}
    try:
        with open(path, 'r', newline='') as f:
            header = None
            for line_number, line in enumerate(f, 1):
                if not line.strip() or line.lstrip().startswith('#'):
                    continue
                values = [x.strip() for x in next(csv.reader([line]))]
                if header is None:
                    header = values
                    missing = [c for c in ['p'] + list(columns) if c not in header]
                    if missing:
                        raise RecordError('missing columns %s' % ', '.join(missing), path, line_number)
                    continue
                row = dict(zip(header, values))
                try:
                    p = int(row['p'])
                    value = tuple(int(row[c]) for c in columns)
                except (KeyError, ValueError):
                    raise RecordError('expected integers in %s' % ', '.join(['p'] + list(columns)), path,
                                      line_number)
                table[p] = value[0] if len(columns) == 1 else value
    except OSError as e:
        raise RecordError(str(e), path)
    return table
