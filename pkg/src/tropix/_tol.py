import math
import os

REL_TOL = 1e-12
ABS_FLOOR = 1e-15
DEFAULT_EPS = 1e-9


def close(x, y, rel=REL_TOL, floor=ABS_FLOOR):
    """Float comparison for computed quantities; infinities compare by identity."""
    if math.isinf(x) or math.isinf(y):
        return x == y
    return math.isclose(x, y, rel_tol=rel, abs_tol=floor)


def resolve_eps(eps=None):
    """Geometric epsilon: explicit value, else $TROP_EPSILON, else 1e-9."""
    if eps is not None:
        return float(eps)
    env = os.environ.get("TROP_EPSILON")
    if env:
        try:
            value = float(env)
        except ValueError:
            raise ValueError(f"TROP_EPSILON is not a number: {env!r}") from None
        if not (value > 0 and math.isfinite(value)):
            raise ValueError(f"TROP_EPSILON must be a positive finite number, got {env!r}")
        return value
    return DEFAULT_EPS
