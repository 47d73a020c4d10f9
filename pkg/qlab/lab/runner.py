# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import hashlib
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence

# Third-party imports
from observable import Observable

# Local imports
from qlab.lab.records import ExperimentRecord
from qlab.startup import LabApplication


_logger = logging.getLogger(__name__)

PointTask = Callable[[float, Optional[int]], List[ExperimentRecord]]


def derive_seed(seed: Optional[int], *parts: Any) -> Optional[int]:
    '''A 64-bit seed that only depends on seed and parts (never on scheduling).'''
    if seed is None:
        return None
    text = ':'.join([str(seed)] + [repr(part) for part in parts])
    return int.from_bytes(hashlib.sha256(text.encode('utf-8')).digest()[:8], 'little')


class SweepRunner(Observable):
    '''
    Runs the points of a sweep, concurrently when more than one worker is allowed.

    Each point gets its own seed derived from the experiment seed and the point's key, and
    the records come back sorted by key, so the output does not depend on the worker count.
    Events are triggered from the calling thread.
    '''

    class Events(Enum):
        PointDone = 'point-done'
        Finished = 'finished'

    def __init__(self, threads: Optional[int] = None) -> None:
        super().__init__()
        self._threads = threads if threads is not None else LabApplication().threads
        if self._threads < 1:
            raise ValueError(f'a runner needs at least one worker, got {self._threads}')

    @property
    def threads(self) -> int:
        return self._threads

    def run(
        self,
        keys: Sequence[float],
        task: PointTask,
        seed: Optional[int] = None,
    ) -> List[ExperimentRecord]:
        ordered = sorted(keys)
        results: Dict[float, List[ExperimentRecord]] = {}
        workers = min(self._threads, max(len(ordered), 1))
        _logger.debug('Running %d points on %d workers', len(ordered), workers)

        if workers == 1:
            for key in ordered:
                results[key] = task(key, derive_seed(seed, key))
                self._point_done(key, len(results), len(ordered))
        else:
            with ThreadPoolExecutor(max_workers=workers, thread_name_prefix='sweep') as pool:
                futures = {pool.submit(task, key, derive_seed(seed, key)): key
                           for key in ordered}
                for future in as_completed(futures):
                    key = futures[future]
                    results[key] = future.result()
                    self._point_done(key, len(results), len(ordered))

        records = [record for key in ordered for record in results[key]]
        event = SweepRunner.Events.Finished
        self.trigger(event, event, len(records))
        return records

    def _point_done(self, key: float, done: int, total: int) -> None:
        event = SweepRunner.Events.PointDone
        self.trigger(event, event, key, done, total)
