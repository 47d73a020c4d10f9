# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from qlab.errors import QLabError  # noqa: F401
from qlab.startup.main import LabApplication  # noqa: F401
