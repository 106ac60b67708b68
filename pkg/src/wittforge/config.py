import os

DEFAULT_MAX_GROUP_ORDER = 4096


def max_group_order() -> int:
    """Cap on the order of groups whose elements get enumerated."""
    raw = os.environ.get("WITTFORGE_MAX_GROUP_ORDER")
    if not raw:
        return DEFAULT_MAX_GROUP_ORDER
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_GROUP_ORDER
    return value if value > 0 else DEFAULT_MAX_GROUP_ORDER


def numba_disabled() -> bool:
    return os.environ.get("WITTFORGE_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
