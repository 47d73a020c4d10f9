# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import threading
import time
from typing import Any, List, Optional

# Third-party imports
import pytest

# Local imports
from qlab.lab import SweepRunner, derive_seed
from qlab.lab.records import ExperimentRecord


def slow_task(key: float, seed: Optional[int]) -> List[ExperimentRecord]:
    # Later keys finish first, so completion order differs from key order.
    time.sleep(0.01 * (10 - key))
    return [{'key': key, 'seed': seed, 'thread': threading.current_thread().name}]


def test_derive_seed() -> None:
    assert derive_seed(None, 1) is None
    assert derive_seed(7, 1.0) == derive_seed(7, 1.0)
    assert derive_seed(7, 1.0) != derive_seed(7, 2.0)
    assert derive_seed(7, 'u', 0) != derive_seed(7, 'v', 0)
    assert derive_seed(8, 1.0) != derive_seed(7, 1.0)
    assert 0 <= derive_seed(7, 1.0) < 2 ** 64


def test_serial_and_parallel_runs_agree() -> None:
    keys = [8.0, 2.0, 4.0, 6.0]
    serial = SweepRunner(threads=1).run(keys, slow_task, seed=11)
    parallel = SweepRunner(threads=4).run(keys, slow_task, seed=11)
    strip = [{k: v for k, v in record.items() if k != 'thread'} for record in serial]
    assert [record['key'] for record in serial] == [2.0, 4.0, 6.0, 8.0]
    assert strip == [{k: v for k, v in record.items() if k != 'thread'} for record in parallel]
    assert serial[0]['seed'] == derive_seed(11, 2.0)


def test_events() -> None:
    seen: List[Any] = []
    runner = SweepRunner(threads=2)

    def on_point(event: SweepRunner.Events, key: float, done: int, total: int) -> None:
        seen.append((event, done, total, threading.current_thread() is threading.main_thread()))

    def on_finished(event: SweepRunner.Events, count: int) -> None:
        seen.append((event, count))

    runner.on(SweepRunner.Events.PointDone, on_point)
    runner.on(SweepRunner.Events.Finished, on_finished)
    runner.run([1.0, 2.0, 3.0], slow_task)

    assert [entry[1] for entry in seen[:3]] == [1, 2, 3]
    assert all(entry[0] is SweepRunner.Events.PointDone and entry[3] for entry in seen[:3])
    assert seen[3] == (SweepRunner.Events.Finished, 3)


def test_task_errors_propagate() -> None:
    def failing(key: float, seed: Optional[int]) -> List[ExperimentRecord]:
        raise RuntimeError(f'point {key}')

    with pytest.raises(RuntimeError):
        SweepRunner(threads=2).run([1.0, 2.0], failing)


def test_worker_count() -> None:
    assert SweepRunner(threads=3).threads == 3
    with pytest.raises(ValueError):
        SweepRunner(threads=0)
