import pytest

import lspace_knots.config as config
from lspace_knots.config import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_WORKERS,
    ImproperlyConfigured,
    configure,
    get_max_depth,
    get_max_workers,
    reset,
)


def test_configure_function():
    configure(max_depth=2, max_workers=4)
    assert get_max_depth() == 2
    assert get_max_workers() == 4


def test_defaults():
    assert get_max_depth() == DEFAULT_MAX_DEPTH
    assert get_max_workers() == DEFAULT_MAX_WORKERS


def test_reset_restores_defaults():
    configure(max_depth=1, max_workers=8)
    reset()
    assert get_max_depth() == DEFAULT_MAX_DEPTH
    assert get_max_workers() == DEFAULT_MAX_WORKERS


@pytest.mark.parametrize("max_depth", (None, 0, -1))
def test_configured_raises_error_on_wrong_depth(max_depth):
    with pytest.raises(ImproperlyConfigured):
        # noinspection PyTypeChecker
        configure(max_depth=max_depth)  # type: ignore


@pytest.mark.parametrize("max_workers", (None, 0))
def test_configured_raises_error_on_wrong_workers(max_workers):
    with pytest.raises(ImproperlyConfigured):
        # noinspection PyTypeChecker
        configure(max_workers=max_workers)  # type: ignore


def test_get_max_depth_raises_error():
    setattr(config, "_max_depth", None)
    with pytest.raises(ImproperlyConfigured):
        get_max_depth()


def test_get_max_workers_raises_error():
    setattr(config, "_max_workers", 0)
    with pytest.raises(ImproperlyConfigured):
        get_max_workers()
