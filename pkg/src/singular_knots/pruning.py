"""
Pruning Module

Prunings of Kauffman states on planar singular diagrams.

The pruning of a state deletes one incoming edge at every vertex: the left
incoming edge (inL) when the state sits in the A or D- corner, the right
incoming edge (inR) when it sits in the C or D+ corner. Prunings are always
connected, and distinct states have distinct prunings.
"""
from collections import OrderedDict
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import pandas as pd

from .diagram import Diagram, is_planar_singular
from .exceptions import NotPlanarSingularError
from .states import Corner, KauffmanState, enumerate_states

LEFT_REMOVING = (Corner.A, Corner.D_MINUS)
RIGHT_REMOVING = (Corner.C, Corner.D_PLUS)


@dataclass(frozen=True)
class Pruning:
    num_vertices: int
    kept_edges: Tuple[Tuple[int, int, int], ...]  # (label, tail vertex, head vertex)
    removed_edges: Tuple[int, ...]                # removed incoming label per vertex

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(self.num_vertices))
        for label, tail, head in self.kept_edges:
            g.add_edge(tail, head, key=label)
        return g

    @property
    def kept_labels(self) -> Tuple[int, ...]:
        return tuple(label for label, _, _ in self.kept_edges)


def _require_planar(d: Diagram) -> None:
    if not is_planar_singular(d):
        raise NotPlanarSingularError(
            f"Diagram '{d.name}' has {d.num_vertices - d.num_singular} ordinary crossing(s)\n"
            f"Prunings are defined for diagrams whose vertices are all singular"
        )


def pruning_graph(d: Diagram, state: KauffmanState) -> Pruning:
    """
    Build the pruning of a state.

    Args:
        d: Planar singular diagram
        state: One of its Kauffman states

    Returns:
        Pruning keeping every edge except one incoming edge per vertex

    Raises:
        NotPlanarSingularError: d has an ordinary crossing
    """
    _require_planar(d)
    removed = []
    for vertex, corner in zip(d.vertices, state.assignment):
        if corner in LEFT_REMOVING:
            removed.append(vertex.in_left)
        elif corner in RIGHT_REMOVING:
            removed.append(vertex.in_right)
        else:
            raise ValueError(f"Corner {corner.value} does not occur at a singular vertex")

    dropped = set(removed)
    kept = tuple(
        (label, tail, head)
        for label, ((tail, _), (head, _)) in sorted(d.edge_ends.items())
        if label not in dropped
    )
    return Pruning(d.num_vertices, kept, tuple(removed))


def is_connected(p: Pruning) -> bool:
    """Weak connectivity over all vertices; an isolated vertex disconnects."""
    if p.num_vertices == 0:
        return True
    return nx.is_weakly_connected(p.graph())


def degrees_ok(p: Pruning) -> bool:
    """In-degree exactly 1 and out-degree at most 2 at every vertex."""
    g = p.graph()
    return all(g.in_degree(v) == 1 and g.out_degree(v) <= 2 for v in g.nodes)


def equivalence_classes(
    d: Diagram,
    states: Optional[Sequence[KauffmanState]] = None,
) -> List[List[KauffmanState]]:
    """
    Group states whose prunings remove the same edges.

    Classes are listed in order of first appearance. Every class is a
    singleton on a planar singular diagram.

    Raises:
        NotPlanarSingularError: d has an ordinary crossing
    """
    _require_planar(d)
    if states is None:
        states = enumerate_states(d)
    classes: 'OrderedDict[Tuple[int, ...], List[KauffmanState]]' = OrderedDict()
    for state in states:
        key = pruning_graph(d, state).removed_edges
        classes.setdefault(key, []).append(state)
    return list(classes.values())


def pruning_frame(d: Diagram, states: Optional[Sequence[KauffmanState]] = None) -> pd.DataFrame:
    """One row per state: removed edges, connectivity and degree check."""
    _require_planar(d)
    if states is None:
        states = enumerate_states(d)
    rows = []
    for state in states:
        p = pruning_graph(d, state)
        g = p.graph()
        rows.append({
            'corners': state.corner_letters(),
            'removed': ','.join(str(label) for label in p.removed_edges),
            'kept': len(p.kept_edges),
            'connected': is_connected(p),
            'degrees_ok': degrees_ok(p),
            'max_out_degree': max((g.out_degree(v) for v in g.nodes), default=0),
        })
    return pd.DataFrame(rows, columns=['corners', 'removed', 'kept', 'connected',
                                       'degrees_ok', 'max_out_degree'])


def pruning_report(d: Diagram) -> dict:
    """Counts used by the verifier: states, connected prunings, class sizes."""
    states = enumerate_states(d)
    frame = pruning_frame(d, states)
    classes = equivalence_classes(d, states)
    sizes = [len(c) for c in classes]
    return {
        'name': d.name,
        'states': len(states),
        'connected': int(frame['connected'].sum()) if len(frame) else 0,
        'degrees_ok': bool(frame['degrees_ok'].all()) if len(frame) else True,
        'classes': len(classes),
        'max_class_size': max(sizes, default=0),
        'passed': bool(frame['connected'].all()) and max(sizes, default=0) <= 1,
    }
