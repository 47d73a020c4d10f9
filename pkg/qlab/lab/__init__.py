# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

# System imports

# Third-party imports

# Local imports
from .config import (  # noqa: F401
    ExperimentConfig, ExperimentKind, FamilyKind, FamilySpec, FitSpec, LogCorrection, ModelSpec,
    PairSpec, SweepSpec, VariantSpec, from_mapping, load_config, validate,
)
from .fitting import FitResult, fit_exponent  # noqa: F401
from .records import ExperimentRecord, render_records, write_records  # noqa: F401
from .runner import SweepRunner, derive_seed  # noqa: F401
from .experiments import (  # noqa: F401
    ExperimentResult, Experiments, Measurement, build_quasimode, run_bilinear_sweep,
    run_cluster_audit, run_experiment, run_l4_growth, run_remainder_decay, run_split_audit,
    run_weyl_audit, sup_bound,
)
from .cli import cli_main  # noqa: F401
