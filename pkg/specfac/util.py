import json
import math
import warnings
import numpy as np


# tolerances
TOL_EIG = 1e-9
TOL_ROOT = 1e-12
TOL_EQUITABLE = 1e-12
TOL_RESIDUAL = 1e-8

# caps
MAX_DIM = 2000
CANONICAL_CAP = 16
ENUMERATION_CAP = 9
FACTOR_CAP = 14
BLOCK_CAP = 15
CRITERION_CAP = 26
NEIGHBORHOOD_CAP = 64
SEARCH_BUDGET = 10**6

# significant digits of floats in JSON output
FLOAT_DIGITS = 15


class Graph6Error(ValueError):
    pass


class NotEquitableError(ValueError):
    pass


class NoRealRootError(ValueError):
    pass


class CapabilityError(ValueError):
    """Input is valid but larger than what the exact routines are configured to handle."""

    pass


class InconclusiveSearchError(RuntimeError):
    """Search budget exhausted before an exact answer was reached."""

    pass


def floor3half(s):
    """Exact ⌊3s/2⌋ for a non-negative integer `s`."""
    return (3 * s) // 2


def check_alpha(alpha):
    if not 0 <= alpha < 1:
        raise ValueError("alpha must lie in [0, 1), got {}".format(alpha))
    return float(alpha)


def check_tol(tol, default, name="tol"):
    """
    Validate a user tolerance. Looser than the default is allowed but flagged.
    """
    tol = float(tol)
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError("{} must be a positive finite number, got {}".format(name, tol))
    if tol > default:
        warnings.warn("{}={} is looser than the default {}".format(name, tol, default))
    return tol


def round_sig(x, digits=FLOAT_DIGITS):
    """Round a float to `digits` significant digits, leave other values untouched."""
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return x
        return float("{:.{}g}".format(x, digits))
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.ndarray):
        return [round_sig(v, digits) for v in x.tolist()]
    if isinstance(x, dict):
        return {str(k): round_sig(v, digits) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [round_sig(v, digits) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(round_sig(v, digits) for v in x)
    return x


def to_json(obj):
    """Serialize to a single JSON line, floats rounded to 15 significant digits."""
    return json.dumps(round_sig(obj), sort_keys=True)
