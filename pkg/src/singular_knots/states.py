"""
States Module

Generalized Kauffman states of a decorated diagram and their bigradings.

A state assigns to every vertex one of its Kauffman corners so that each
face other than X and Y receives exactly one corner. At a singular vertex the
corners are A, C, D+ and D- (D+ and D- both sit in the D quadrant; B is not
allowed). Each corner carries a local Alexander grading S and Maslov grading
M; the local weight is (-1)^M * T^S.
"""
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .constants import (
    MAX_ORACLE_VERTICES,
    ORDINARY_CORNERS,
    SINGULAR_CORNERS,
    STANDARD_GRADINGS,
    worker_count,
)
from .diagram import Diagram, VertexKind
from .exceptions import InstanceTooLargeError
from .faces import FaceSet, Quadrant, QuadrantPosition, compute_faces
from .laurent import HalfLaurent


class Corner(Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'
    D_PLUS = 'D+'
    D_MINUS = 'D-'

    @property
    def position(self) -> QuadrantPosition:
        if self in (Corner.D_PLUS, Corner.D_MINUS):
            return QuadrantPosition.D
        return QuadrantPosition[self.value]

    @property
    def rank(self) -> int:
        return _CORNER_RANK[self]


_CORNER_RANK = {c: i for i, c in enumerate(Corner)}

ORDINARY = tuple(Corner(c) for c in ORDINARY_CORNERS)
SINGULAR = tuple(Corner(c) for c in SINGULAR_CORNERS)


@dataclass(frozen=True)
class CornerWeights:
    """
    Local gradings per (vertex kind, corner), stored as (2*S, M).

    Kept hashable so it can travel to worker processes and key caches.
    """
    table: Tuple[Tuple[str, str, int, int], ...]

    @classmethod
    def from_mapping(cls, gradings: Mapping[str, Mapping[str, Tuple[int, int]]]) -> 'CornerWeights':
        rows = []
        for kind, corners in gradings.items():
            for corner, (two_s, maslov) in corners.items():
                rows.append((kind, corner, int(two_s), int(maslov)))
        return cls(tuple(sorted(rows)))

    def grading(self, kind: VertexKind, corner: Corner) -> Tuple[int, int]:
        for k, c, two_s, maslov in self.table:
            if k == kind.value and c == corner.value:
                return two_s, maslov
        raise KeyError(f"No grading for corner {corner.value} at a {kind.value} vertex")

    def weight(self, kind: VertexKind, corner: Corner) -> HalfLaurent:
        two_s, maslov = self.grading(kind, corner)
        return HalfLaurent.monomial(two_s, -1 if maslov % 2 else 1)

    def with_override(self, kind: VertexKind, corner: Corner,
                      two_s: int, maslov: int) -> 'CornerWeights':
        """Copy with one entry replaced (used for negative controls)."""
        rows = [r for r in self.table if not (r[0] == kind.value and r[1] == corner.value)]
        rows.append((kind.value, corner.value, two_s, maslov))
        return CornerWeights(tuple(sorted(rows)))

    def lookup(self) -> Dict[Tuple[str, str], Tuple[int, int]]:
        return {(k, c): (s, m) for k, c, s, m in self.table}


STANDARD_WEIGHTS = CornerWeights.from_mapping(STANDARD_GRADINGS)


def allowed_corners(kind: VertexKind) -> Tuple[Corner, ...]:
    return SINGULAR if kind.is_singular else ORDINARY


@dataclass(frozen=True)
class KauffmanState:
    assignment: Tuple[Corner, ...]
    occupancy: Tuple[int, ...]
    two_s: int
    maslov: int

    @property
    def n_grading(self) -> int:
        """N = M - 2S."""
        return self.maslov - self.two_s

    def weight(self) -> HalfLaurent:
        return HalfLaurent.monomial(self.two_s, -1 if self.maslov % 2 else 1)

    def corner_letters(self) -> str:
        return ' '.join(c.value for c in self.assignment)


def format_half(two_s: int) -> str:
    """Render a half-integer given doubled: 3 -> '3/2', -2 -> '-1'."""
    if two_s % 2 == 0:
        return str(two_s // 2)
    return f"{two_s}/2"


# ----------------------------------------------------------------------
# Enumeration
# ----------------------------------------------------------------------

Option = Tuple[int, int]  # (quadrant position, face id)


def corner_options(d: Diagram, faces: FaceSet) -> List[Tuple[Option, ...]]:
    """
    Eligible (quadrant, face) pairs per vertex, in corner order A, B, C, D.

    B is dropped at singular vertices; corners in X or Y are dropped
    everywhere. Two corners of one vertex may share a face.
    """
    face_of = faces.face_of()
    excluded = {faces.region_x, faces.region_y}
    order = tuple(c.position for c in ORDINARY)
    options = []
    for v, vertex in enumerate(d.vertices):
        opts = []
        for pos in order:
            if pos is QuadrantPosition.B and vertex.kind.is_singular:
                continue
            f = face_of[Quadrant(v, pos)]
            if f not in excluded:
                opts.append((int(pos), f))
        options.append(tuple(opts))
    return options


def _search(options: Sequence[Tuple[Option, ...]], eligible: frozenset,
            forced: Optional[Tuple[int, Option]] = None) -> List[Tuple[Option, ...]]:
    n = len(options)
    assigned: List[Optional[Option]] = [None] * n
    used = set()
    remaining = set(range(n))
    found: List[Tuple[Option, ...]] = []

    if forced is not None:
        v, opt = forced
        assigned[v] = opt
        used.add(opt[1])
        remaining.discard(v)

    def recurse():
        if not remaining:
            found.append(tuple(assigned))
            return

        # Fail-first: the vertex with the fewest free corners
        best, best_opts = None, None
        live = set()
        for v in sorted(remaining):
            opts = [o for o in options[v] if o[1] not in used]
            if not opts:
                return
            live.update(f for _, f in opts)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts

        # Every open face must still be reachable
        if not (eligible - used) <= live:
            return

        remaining.discard(best)
        for opt in best_opts:
            assigned[best] = opt
            used.add(opt[1])
            recurse()
            used.discard(opt[1])
        assigned[best] = None
        remaining.add(best)

    recurse()
    return found


def _search_subtree(args):
    options, eligible, forced = args
    return _search(options, eligible, forced)


def _first_branch(options: Sequence[Tuple[Option, ...]]) -> Tuple[int, Tuple[Option, ...]]:
    best = min(range(len(options)), key=lambda v: (len(options[v]), v))
    return best, options[best]


def _expand(d: Diagram, matching: Tuple[Option, ...], weights: CornerWeights) -> List[KauffmanState]:
    lookup = weights.lookup()
    per_vertex = []
    for v, (pos, _) in enumerate(matching):
        kind = d.vertices[v].kind
        if kind.is_singular and pos == QuadrantPosition.D:
            per_vertex.append((Corner.D_PLUS, Corner.D_MINUS))
        else:
            per_vertex.append((Corner(QuadrantPosition(pos).name),))

    occupancy = tuple(f for _, f in matching)
    states = []
    for corners in itertools.product(*per_vertex):
        two_s = maslov = 0
        for vertex, corner in zip(d.vertices, corners):
            s, m = lookup[(vertex.kind.value, corner.value)]
            two_s += s
            maslov += m
        states.append(KauffmanState(tuple(corners), occupancy, two_s, maslov))
    return states


def enumerate_states(
    d: Diagram,
    faces: Optional[FaceSet] = None,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> List[KauffmanState]:
    """
    Enumerate all generalized Kauffman states.

    Args:
        d: Valid, connected diagram
        faces: Result of compute_faces(d) (computed when omitted)
        weights: Local grading table
        workers: Worker processes for the first branching level
            (capped by KAUFFMAN_THREADS; 1 runs in-process)

    Returns:
        States sorted by their corner sequence; the unknot has one empty state

    Example:
        >>> from singular_knots import parse_diagram
        >>> [s.corner_letters() for s in enumerate_states(parse_diagram("S 1 2 2 1\\nQ 1"))]
        ['C']
    """
    if faces is None:
        faces = compute_faces(d)
    if not d.vertices:
        return [KauffmanState((), (), 0, 0)]

    options = corner_options(d, faces)
    eligible = frozenset(faces.eligible)
    n_workers = worker_count(workers)

    if n_workers > 1:
        v, opts = _first_branch(options)
        tasks = [(options, eligible, (v, opt)) for opt in opts]
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            matchings = [m for chunk in pool.map(_search_subtree, tasks) for m in chunk]
    else:
        matchings = _search(options, eligible)

    states = [s for m in matchings for s in _expand(d, m, weights)]
    states.sort(key=lambda s: tuple(c.rank for c in s.assignment))
    return states


def count_states_oracle(d: Diagram, faces: Optional[FaceSet] = None) -> int:
    """
    Count states by brute force over every bijection vertices -> eligible faces.

    Each vertex/face pair contributes the number of allowed corners of the
    vertex in that face, a singular D corner counting twice (D+ and D-).

    Raises:
        InstanceTooLargeError: more than MAX_ORACLE_VERTICES vertices
    """
    n = d.num_vertices
    if n > MAX_ORACLE_VERTICES:
        raise InstanceTooLargeError(n, MAX_ORACLE_VERTICES)
    if faces is None:
        faces = compute_faces(d)
    if n == 0:
        return 1

    column = {f: i for i, f in enumerate(faces.eligible)}
    multiplicity = np.zeros((n, n), dtype=np.int64)
    for face in faces.faces:
        if face.id not in column:
            continue
        for q in face.corners:
            singular = d.vertices[q.vertex].kind.is_singular
            if singular and q.position is QuadrantPosition.B:
                continue
            count = 2 if singular and q.position is QuadrantPosition.D else 1
            multiplicity[q.vertex, column[face.id]] += count

    rows = np.arange(n)
    perms = itertools.permutations(range(n))
    total = 0
    while True:
        block = np.array(list(itertools.islice(perms, 50_000)), dtype=np.intp)
        if block.size == 0:
            break
        total += int(multiplicity[rows, block].prod(axis=1).sum())
    return total


# ----------------------------------------------------------------------
# Bigraded tables
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class BigradedTable:
    """Counts keyed by (Maslov grading M, doubled Alexander grading 2S)."""
    counts: Tuple[Tuple[Tuple[int, int], int], ...]

    @classmethod
    def from_mapping(cls, counts: Mapping[Tuple[int, int], int]) -> 'BigradedTable':
        return cls(tuple(sorted((k, int(c)) for k, c in counts.items() if c)))

    @classmethod
    def from_states(cls, states: Sequence[KauffmanState]) -> 'BigradedTable':
        return cls.from_mapping(Counter((s.maslov, s.two_s) for s in states))

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def euler_characteristic(self) -> HalfLaurent:
        """Sum of (-1)^M * count * T^S."""
        return HalfLaurent(
            (two_s, -count if maslov % 2 else count)
            for (maslov, two_s), count in self.counts
        )

    def is_diagonal(self) -> bool:
        """True when every entry has M = 2S."""
        return all(maslov == two_s for (maslov, two_s), _ in self.counts)

    def alexander_profile(self) -> List[int]:
        """Counts per Alexander grading, lowest first, gaps filled with 0."""
        by_s = Counter()
        for (_, two_s), count in self.counts:
            by_s[two_s] += count
        if not by_s:
            return []
        lo, hi = min(by_s), max(by_s)
        return [by_s.get(k, 0) for k in range(lo, hi + 1, 2)]

    def to_json(self) -> List[List[int]]:
        return [[maslov, two_s, count] for (maslov, two_s), count in self.counts]

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {'maslov': maslov, 'two_s': two_s, 'alexander': format_half(two_s), 'count': count}
            for (maslov, two_s), count in self.counts
        ]
        return pd.DataFrame(rows, columns=['maslov', 'two_s', 'alexander', 'count'])

    def to_matrix(self) -> pd.DataFrame:
        """Maslov grading (rows, descending) by Alexander grading (columns)."""
        df = self.to_frame()
        if df.empty:
            return df
        matrix = df.pivot_table(index='maslov', columns='two_s', values='count',
                                aggfunc='sum', fill_value=0)
        matrix = matrix.sort_index(ascending=False)
        matrix.columns = [format_half(c) for c in matrix.columns]
        matrix.index.name = 'M'
        return matrix


def generator_table(d: Diagram, weights: CornerWeights = STANDARD_WEIGHTS,
                    workers: Optional[int] = 1) -> BigradedTable:
    """Histogram of (M, 2S) over all generalized Kauffman states."""
    return BigradedTable.from_states(enumerate_states(d, weights=weights, workers=workers))


def states_frame(d: Diagram, states: Sequence[KauffmanState]) -> pd.DataFrame:
    """One row per state: corner per vertex, then S, M, N."""
    rows = []
    for s in states:
        row = {f"v{i}": c.value for i, c in enumerate(s.assignment)}
        row.update({'S': format_half(s.two_s), 'M': s.maslov, 'N': s.n_grading})
        rows.append(row)
    columns = [f"v{i}" for i in range(d.num_vertices)] + ['S', 'M', 'N']
    return pd.DataFrame(rows, columns=columns)
