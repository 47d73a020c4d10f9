# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import functools
import logging
from typing import Any, Callable, Dict, TypeVar

# Third-party imports

# Local imports


_logger = logging.getLogger(__name__)

F = TypeVar('F', bound=Callable[..., Any])


class SingletonMeta(type):
    '''
    Uses like this:
    > class YourClass(metaclass=SingletonMeta):
    >     ...

    YourClass.forget() drops the cached instance, so the next call builds a fresh one
    (tests use it after changing the environment).
    '''

    _instances: Dict[type, Any] = {}

    def __call__(cls, *args: Any, **kwargs: Any) -> Any:
        if cls not in cls._instances:
            cls._instances[cls] = super().__call__(*args, **kwargs)

        return cls._instances[cls]

    def forget(cls) -> None:
        cls._instances.pop(cls, None)


def registration_decorator(callback: Callable[[F], None]) -> Callable[[F], F]:
    '''Helper for callable decorators: the decorated function is handed to callback (for
    instance to store it in a registry) and is returned unchanged.'''
    def decorator(func: F) -> F:
        _logger.debug('Registering %s', func.__qualname__)
        callback(func)

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            return func(*args, **kwargs)
        return wrapper  # type: ignore

    return decorator
