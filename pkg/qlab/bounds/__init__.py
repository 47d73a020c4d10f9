# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

# System imports

# Third-party imports

# Local imports
from .exponents import (  # noqa: F401
    ExponentLaw, critical_exponent, h1_product_exponent, l2_remainder_law, lambda_exponent,
    omega_exponent, rank_budget, sigma_p,
)
from .rhs import (  # noqa: F401
    HighDimTail, LowDim, Variant, bilinear_ratio, rhs_bilinear, tail_term,
)
