from lspace_knots.exceptions import ImproperlyConfigured

DEFAULT_MAX_DEPTH = 3
DEFAULT_MAX_WORKERS = 1

# entries kept by each memoised invariant
CACHE_MAXSIZE = 4096

_max_depth: int = DEFAULT_MAX_DEPTH
_max_workers: int = DEFAULT_MAX_WORKERS


def configure(
    max_depth: int = DEFAULT_MAX_DEPTH, max_workers: int = DEFAULT_MAX_WORKERS
) -> None:
    """
    Configure census enumeration, should be called before building a census

    :param max_depth: Nesting cap of enumerated expressions, a torus knot has depth 1
    :param max_workers: Number of threads used to evaluate census rows
    """
    global _max_depth, _max_workers

    if max_depth is None or max_depth < 1:
        raise ImproperlyConfigured(
            f"max_depth must be a positive integer, {max_depth} was given"
        )
    _max_depth = max_depth

    if max_workers is None or max_workers < 1:
        raise ImproperlyConfigured(
            f"max_workers must be a positive integer, {max_workers} was given"
        )
    _max_workers = max_workers


def reset() -> None:
    """
    Restore default settings
    """
    global _max_depth, _max_workers

    _max_depth = DEFAULT_MAX_DEPTH
    _max_workers = DEFAULT_MAX_WORKERS


def get_max_depth() -> int:
    """
    Get the census nesting cap
    """
    if _max_depth is None or _max_depth < 1:
        raise ImproperlyConfigured("should call configure with a positive max_depth")
    return _max_depth


def get_max_workers() -> int:
    """
    Get the number of census worker threads
    """
    if _max_workers is None or _max_workers < 1:
        raise ImproperlyConfigured("should call configure with a positive max_workers")
    return _max_workers
