# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
CSV output of experiments.

A file starts with a "# schema=1" comment line, then the header and one row per sweep
point. Reals are written with 17 significant digits so a file round-trips the exact
doubles; the bytes only depend on the records.
'''

from __future__ import annotations

# System imports
import csv
import io
import logging
import math
import numbers
from pathlib import Path
from typing import Any, Dict, Sequence, Union

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import AuditViolation


_logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

ExperimentRecord = Dict[str, Any]


def format_value(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        number = float(value)
        if not math.isfinite(number):
            raise AuditViolation(f'non-finite value {number} in an experiment record')
        return format(number, '.17g')
    return str(value)


def render_records(columns: Sequence[str], records: Sequence[ExperimentRecord]) -> str:
    buffer = io.StringIO()
    buffer.write(f'# schema={SCHEMA_VERSION}\n')
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator='\n',
                            extrasaction='raise')
    writer.writeheader()
    for record in records:
        missing = [column for column in columns if column not in record]
        if missing:
            raise ValueError(f'record lacks columns {missing}')
        writer.writerow({key: format_value(value) for key, value in record.items()})
    return buffer.getvalue()


def write_records(
    path: Union[str, Path],
    columns: Sequence[str],
    records: Sequence[ExperimentRecord],
) -> Path:
    target = Path(path)
    text = render_records(columns, records)
    if target.parent != Path(''):
        target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, 'w', newline='', encoding='utf-8') as stream:
        stream.write(text)
    _logger.info('Wrote %d records to %s', len(records), target)
    return target
