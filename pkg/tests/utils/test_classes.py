# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
from typing import Callable, Dict

# Third-party imports

# Local imports
from qlab.utils import SingletonMeta, registration_decorator


class ASingleton(metaclass=SingletonMeta):

    def __init__(self) -> None:
        self.values: Dict[str, int] = {}


class AnotherSingleton(metaclass=SingletonMeta):
    ...


def test_singleton_is_shared() -> None:
    first = ASingleton()
    first.values['x'] = 1
    assert ASingleton() is first
    assert ASingleton().values == {'x': 1}
    assert AnotherSingleton() is not first
    assert SingletonMeta._instances[ASingleton] is first


def test_forget() -> None:
    first = ASingleton()
    ASingleton.forget()
    assert ASingleton not in SingletonMeta._instances
    second = ASingleton()
    assert second is not first
    assert second.values == {}
    # Forgetting twice, or a class never built, is harmless
    ASingleton.forget()
    ASingleton.forget()


def test_registration_decorator() -> None:
    registry: Dict[str, Callable[..., int]] = {}

    def register(func: Callable[..., int]) -> None:
        registry[func.__name__] = func

    @registration_decorator(register)
    def double(x: int) -> int:
        '''Twice x'''
        return 2 * x

    assert list(registry) == ['double']
    assert registry['double'](3) == 6
    assert double(4) == 8
    assert double.__name__ == 'double'
    assert double.__doc__ == 'Twice x'
