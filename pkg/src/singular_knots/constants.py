"""
Constants for Singular Knot Analysis

Corner orders, local grading tables, exit codes, and other reference data.
"""
import os

# Kauffman corner orders used for deterministic iteration
ORDINARY_CORNERS = ('A', 'B', 'C', 'D')
SINGULAR_CORNERS = ('A', 'C', 'D+', 'D-')

# Local gradings per (kind, corner) as (2*S, M)
STANDARD_GRADINGS = {
    'X+': {'A': (0, 0), 'B': (1, 0), 'C': (0, 0), 'D': (-1, -1)},
    'X-': {'A': (0, 0), 'B': (-1, 0), 'C': (0, 0), 'D': (1, 1)},
    'S': {'A': (0, 0), 'C': (0, 0), 'D+': (1, 1), 'D-': (-1, -1)},
}

# Brute-force oracle guard (factorial blow-up)
MAX_ORACLE_VERTICES = 12

# Random braid suite defaults
DEFAULT_SEED = 7
DEFAULT_COUNT = 100
DEFAULT_MAX_CROSSINGS = 8
MAX_RANDOM_STRANDS = 4

# CLI exit codes
EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3
EXIT_DISAGREEMENT = 4
EXIT_VERIFY_FAILED = 5

# Singular mask density; every PLANAR_SUITE_STRIDE-th suite diagram is fully singular
SINGULAR_PROBABILITY = 0.5
PLANAR_SUITE_STRIDE = 4

# Parallelism cap
THREADS_ENV = 'KAUFFMAN_THREADS'


def worker_count(requested=None):
    """
    Number of worker processes allowed for this run.

    Args:
        requested: Workers asked for by the caller (None means "as many as allowed")

    Returns:
        At least 1, never more than KAUFFMAN_THREADS when that is set
    """
    raw = os.environ.get(THREADS_ENV, '')
    try:
        cap = int(raw)
    except ValueError:
        cap = 1
    cap = max(cap, 1)

    if requested is None:
        return cap
    return max(1, min(int(requested), cap))
