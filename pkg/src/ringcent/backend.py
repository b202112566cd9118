"""Kernel backend selection.

Hot loops exist twice: a numba @njit version and a pure-numpy version.
RINGCENT_BACKEND chooses between them ("numba" or "numpy"); unset means
numba when it imports, numpy otherwise.  The flag is read per call so tests
and benchmarks can flip it at runtime.
"""

import os

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


ENV_BACKEND = "RINGCENT_BACKEND"
ENV_TIME_BUDGET = "RINGCENT_TIME_BUDGET_SECS"

DEFAULT_TIME_BUDGET_SECS = 120.0

# Rough node throughputs used to convert a wall-clock budget into a search
# node cap for one kernel invocation (kernels cannot poll the clock cheaply).
# Measured on the heaviest case (four generators, dense constraint lists).
NODES_PER_SEC = {"numba": 2_000_000, "numpy": 300_000}


def active_backend() -> str:
    """Return "numba" or "numpy" according to the env flag and availability."""
    choice = os.environ.get(ENV_BACKEND, "").strip().lower()
    if choice in ("numba", "numpy"):
        if choice == "numba" and not HAVE_NUMBA:
            return "numpy"
        return choice
    return "numba" if HAVE_NUMBA else "numpy"


def time_budget_secs() -> float:
    """Enumeration wall-clock budget, from RINGCENT_TIME_BUDGET_SECS."""
    raw = os.environ.get(ENV_TIME_BUDGET, "").strip()
    if not raw:
        return DEFAULT_TIME_BUDGET_SECS
    try:
        value = float(raw)
    except ValueError:
        return DEFAULT_TIME_BUDGET_SECS
    return value if value > 0 else DEFAULT_TIME_BUDGET_SECS


def node_cap(remaining_secs: float) -> int:
    """Search node allowance for one kernel call under the remaining budget."""
    rate = NODES_PER_SEC[active_backend()]
    return max(1_000_000, int(remaining_secs * rate))
