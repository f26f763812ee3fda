"""
Faces Module

Trace the regions of a planar diagram from its rotation system.

Quadrant k of a vertex lies between slot k and slot k+1 (counterclockwise),
so quadrant 0 is D (between the incoming edges), 1 is C, 2 is B (between
the outgoing edges) and 3 is A.
"""
from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, List, Tuple

from .diagram import Diagram
from .exceptions import (
    DegenerateMarkingError,
    DiagramValidationError,
    NonPlanarDiagramError,
)


class QuadrantPosition(IntEnum):
    D = 0
    C = 1
    B = 2
    A = 3


@dataclass(frozen=True)
class Quadrant:
    vertex: int
    position: QuadrantPosition

    def __str__(self) -> str:
        return f"{self.position.name}{self.vertex}"


@dataclass(frozen=True)
class Face:
    id: int
    corners: Tuple[Quadrant, ...]


@dataclass(frozen=True)
class FaceSet:
    faces: Tuple[Face, ...]
    region_x: int
    region_y: int

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def eligible(self) -> Tuple[int, ...]:
        """Face ids available to Kauffman states (all but X and Y)."""
        return tuple(f.id for f in self.faces if f.id not in (self.region_x, self.region_y))

    def face_of(self) -> Dict[Quadrant, int]:
        return {q: f.id for f in self.faces for q in f.corners}


def _trace(d: Diagram) -> Tuple[List[Tuple[Quadrant, ...]], Dict[Tuple[int, int], int]]:
    ends = d.edge_ends
    other_end: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for tail, head in ends.values():
        other_end[tail] = head
        other_end[head] = tail

    face_index: Dict[Tuple[int, int], int] = {}
    cycles: List[Tuple[Quadrant, ...]] = []
    for v in range(d.num_vertices):
        for k in range(4):
            if (v, k) in face_index:
                continue
            corners = []
            cur = (v, k)
            while cur not in face_index:
                face_index[cur] = len(cycles)
                corners.append(Quadrant(cur[0], QuadrantPosition(cur[1])))
                w, j = other_end[(cur[0], (cur[1] + 1) % 4)]
                cur = (w, j)
            if cur != (v, k):
                raise NonPlanarDiagramError(
                    f"Face trace from quadrant {k} of vertex {v} does not close"
                )
            cycles.append(tuple(corners))
    return cycles, face_index


def compute_faces(d: Diagram) -> FaceSet:
    """
    Trace the faces of a connected diagram and locate X and Y.

    Args:
        d: Valid, connected diagram

    Returns:
        FaceSet with faces in discovery order (vertex id, then quadrant)

    Raises:
        DiagramValidationError: the diagram is split
        NonPlanarDiagramError: V - E + F != 2
        DegenerateMarkingError: both sides of Q lie in one face
    """
    if d.split:
        raise DiagramValidationError(
            f"Diagram '{d.name}' is split; faces are only traced for connected diagrams"
        )
    if not d.vertices:
        # The unknot: inside and outside, no corners
        return FaceSet((Face(0, ()), Face(1, ())), 0, 1)

    cycles, face_index = _trace(d)
    faces = tuple(Face(i, corners) for i, corners in enumerate(cycles))

    euler = d.num_vertices - d.num_edges + len(faces)
    if euler != 2:
        raise NonPlanarDiagramError(
            f"Diagram '{d.name}' is not planar: V - E + F = "
            f"{d.num_vertices} - {d.num_edges} + {len(faces)} = {euler}\n"
            f"Check that strand positions are closed up without swapping"
        )

    (v, s), _ = d.edge_ends[d.marked_edge]
    region_x = face_index[(v, s)]
    region_y = face_index[(v, (s - 1) % 4)]
    if region_x == region_y:
        raise DegenerateMarkingError(
            f"Both sides of marked edge {d.marked_edge} lie in face {region_x}"
        )
    return FaceSet(faces, region_x, region_y)
