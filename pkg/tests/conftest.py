"""Shared builders; structures are cached per session since they are immutable."""

import pytest

from skelforge.complexes import Region
from skelforge.presets import build

_cache = {}


def build_cached(name, radius=4):
    key = (name, radius)
    if key not in _cache:
        _cache[key] = build(name, Region((0, 0, 0), radius))
    return _cache[key]


@pytest.fixture(scope="session")
def built():
    return build_cached
