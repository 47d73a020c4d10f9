# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
Command line entry point:

    quasimode-lab <experiment> --config <file> [--out <file>] [--seed <n>] [-v]

Prints one summary line on stdout and writes the records as CSV. Exit status is 0 when
every threshold of the experiment holds, 2 when one is violated and 1 on any error.
'''

from __future__ import annotations

# System imports
import argparse
import logging
import sys
from typing import Any, List, Optional, Sequence

# Third-party imports
import yaml

# Local imports
from qlab.errors import QLabError
from qlab.lab.config import ExperimentKind, load_config
from qlab.lab.experiments import run_experiment
from qlab.lab.records import write_records
from qlab.lab.runner import SweepRunner
from qlab.startup import LabApplication


_logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_THRESHOLD = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    '''Reports usage errors by raising, so they map to the error status.'''

    def error(self, message: str) -> Any:
        raise UsageError(f'{self.prog}: {message}')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='quasimode-lab',
                     description='Quasimode experiments on tori and the sphere.')
    commands = parser.add_subparsers(dest='experiment', metavar='experiment',
                                     parser_class=_Parser)
    commands.required = True
    for kind in ExperimentKind:
        command = commands.add_parser(kind.value, help=f'run a {kind.value} experiment')
        command.add_argument('--config', required=True, help='experiment file (YAML)')
        command.add_argument('--out', default=None, help='CSV output, overrides the file')
        command.add_argument('--seed', type=int, default=None,
                             help='random seed, overrides the file')
        command.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    return parser


def _log_progress(event: SweepRunner.Events, *args: Any) -> None:
    if event is SweepRunner.Events.PointDone:
        key, done, total = args
        _logger.info('Point %g done (%d/%d)', key, done, total)
    else:
        _logger.debug('Sweep finished with %d records', *args)


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    arguments: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        options = build_parser().parse_args(arguments)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_ERROR

    try:
        LabApplication().setup_logger(options.verbose)
        config = load_config(options.config, seed=options.seed, output=options.out,
                             experiment=options.experiment)
        runner = SweepRunner()
        runner.on(SweepRunner.Events.PointDone, _log_progress)
        runner.on(SweepRunner.Events.Finished, _log_progress)
        result = run_experiment(config, runner)
        if config.output is not None:
            write_records(config.output, result.columns, result.records)
        else:
            _logger.warning('No output file given, records are not written')
    except (QLabError, OSError, yaml.YAMLError) as e:
        _logger.debug('Run failed', exc_info=True)
        print(f'{options.experiment}: ERROR {e}', file=sys.stderr)
        return EXIT_ERROR

    print(result.summary())
    return EXIT_PASS if result.passed else EXIT_THRESHOLD


def main() -> None:
    sys.exit(cli_main())
