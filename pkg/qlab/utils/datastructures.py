# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
from collections.abc import Mapping
from typing import Any, Optional

# Third-party imports

# Local imports


class RecursiveDict(dict):
    '''Nested configuration dictionary.

    Mappings merge key by key, everything else (lists included) is replaced: a sweep given in
    an experiment file must not be appended to the packaged default sweep.
    '''

    def merge(self, other: Mapping, strict: bool = False, _path: str = '') -> RecursiveDict:
        '''Merges other into self, in place.

        With strict=True, a key of other that self does not already hold raises a KeyError
        naming its dotted path. Keys whose current value is None accept anything.
        '''
        for k, v in other.items():
            path = f'{_path}.{k}' if _path else str(k)
            if strict and k not in self:
                raise KeyError(path)

            if isinstance(v, Mapping):
                current = self.get(k)
                if not isinstance(current, RecursiveDict):
                    if strict and current is not None:
                        raise KeyError(path)
                    self[k] = RecursiveDict()
                    self[k].merge(v, strict=False, _path=path)
                else:
                    self[k].merge(v, strict=strict, _path=path)
            else:
                self[k] = v

        return self

    def get_path(self, path: str, default: Optional[Any] = None) -> Any:
        '''Returns the value at a dotted path (eg. "limits.mode_cap"), or default.'''
        node: Any = self
        for part in path.split('.'):
            if not isinstance(node, Mapping) or part not in node:
                return default
            node = node[part]
        return node
