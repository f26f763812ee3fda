"""
Diagram Module

Data model, .skd parser and structural operations for oriented singular
knot diagrams.

A diagram is a 4-valent graph with a rotation system. Each vertex lists its
edge labels counterclockwise as (inL, inR, outR, outL); strands run
inL -> outR and inR -> outL. Every edge label occurs once as an incoming
slot and once as an outgoing slot. Vertex-free closed components are kept as
`circles` (they arise from oriented resolutions); the unknot is the diagram
with no vertices and the single circle 1.
"""
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .exceptions import (
    DiagramSyntaxError,
    DiagramValidationError,
    InvalidBraidError,
    SplitClosureError,
)


class VertexKind(Enum):
    POSITIVE = 'X+'
    NEGATIVE = 'X-'
    SINGULAR = 'S'

    @property
    def is_singular(self) -> bool:
        return self is VertexKind.SINGULAR


class ResolutionMode(Enum):
    PLUS = 'plus'
    MINUS = 'minus'
    ORIENTED = 'oriented'


@dataclass(frozen=True)
class Vertex:
    kind: VertexKind
    slots: Tuple[int, int, int, int]

    @property
    def in_left(self) -> int:
        return self.slots[0]

    @property
    def in_right(self) -> int:
        return self.slots[1]

    @property
    def out_right(self) -> int:
        return self.slots[2]

    @property
    def out_left(self) -> int:
        return self.slots[3]

    def with_kind(self, kind: VertexKind) -> 'Vertex':
        return Vertex(kind, self.slots)


@dataclass(frozen=True)
class Diagram:
    vertices: Tuple[Vertex, ...]
    marked_edge: int
    name: str = ''
    circles: Tuple[int, ...] = field(default=())

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def edges(self) -> frozenset:
        labels = {label for v in self.vertices for label in v.slots}
        return frozenset(labels | set(self.circles))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def singular_vertices(self) -> Tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.vertices) if v.kind.is_singular)

    @property
    def num_singular(self) -> int:
        return len(self.singular_vertices)

    @cached_property
    def edge_ends(self) -> Dict[int, Tuple[Tuple[int, int], Tuple[int, int]]]:
        """
        Map each attached edge label to ((tail vertex, slot), (head vertex, slot)).

        The tail is the outgoing slot, the head the incoming one.
        """
        tails: Dict[int, Tuple[int, int]] = {}
        heads: Dict[int, Tuple[int, int]] = {}
        for i, v in enumerate(self.vertices):
            for s, label in enumerate(v.slots):
                (heads if s < 2 else tails)[label] = (i, s)
        return {label: (tails[label], heads[label]) for label in tails if label in heads}

    def graph(self) -> nx.MultiGraph:
        """Underlying 4-valent multigraph (vertex ids, one edge per label)."""
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.num_vertices))
        for label, ((tail, _), (head, _)) in self.edge_ends.items():
            g.add_edge(tail, head, key=label)
        return g

    @cached_property
    def is_connected(self) -> bool:
        if not self.vertices:
            return len(self.circles) == 1
        return not self.circles and nx.is_connected(self.graph())

    @property
    def split(self) -> bool:
        return not self.is_connected

    @property
    def is_unknot(self) -> bool:
        return not self.vertices and len(self.circles) == 1


def unknot_diagram(name: str = 'unknot') -> Diagram:
    return Diagram((), 1, name, circles=(1,))


# ----------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------

def validate_diagram(d: Diagram, require_connected: bool = True) -> Diagram:
    """
    Check the structural invariants of a diagram.

    Args:
        d: Diagram to check
        require_connected: Reject split diagrams when True

    Returns:
        The same diagram, for chaining

    Raises:
        DiagramValidationError: dangling label, duplicate slot use,
            invalid Q, or disconnected diagram
    """
    incoming: Dict[int, int] = {}
    outgoing: Dict[int, int] = {}
    for i, v in enumerate(d.vertices):
        for s, label in enumerate(v.slots):
            if not isinstance(label, int) or label <= 0:
                raise DiagramValidationError(
                    f"Vertex {i}: edge labels must be positive integers, got {label!r}"
                )
            side = incoming if s < 2 else outgoing
            if label in side:
                kind = 'incoming' if s < 2 else 'outgoing'
                raise DiagramValidationError(
                    f"Duplicate slot use: edge {label} is {kind} at vertex "
                    f"{side[label]} and vertex {i}"
                )
            side[label] = i

    for label in sorted(set(incoming) ^ set(outgoing)):
        missing = 'outgoing' if label in incoming else 'incoming'
        raise DiagramValidationError(
            f"Dangling edge label {label}: no {missing} slot uses it"
        )

    attached = set(incoming)
    if len(set(d.circles)) != len(d.circles) or attached & set(d.circles):
        raise DiagramValidationError("Circle labels must be distinct and unattached")

    if d.marked_edge not in d.edges:
        raise DiagramValidationError(
            f"Invalid Q: edge {d.marked_edge} is not an edge of the diagram"
        )

    if require_connected and not d.is_connected:
        raise DiagramValidationError(
            f"Diagram '{d.name}' is disconnected\n"
            f"Kauffman states need a connected diagram"
        )
    return d


# ----------------------------------------------------------------------
# .skd parsing and serialization
# ----------------------------------------------------------------------

_KIND_CODES = {k.value: k for k in VertexKind}


def _int_token(token: str, line: int, column: int, what: str,
               allow_negative: bool = False) -> int:
    try:
        value = int(token)
    except ValueError:
        raise DiagramSyntaxError(f"Expected {what}, got {token!r}", line, column) from None
    if value == 0 or (value < 0 and not allow_negative):
        raise DiagramSyntaxError(f"Expected {what}, got {token!r}", line, column)
    return value


def _int_list(token: str, line: int, column: int, what: str,
              allow_negative: bool = False) -> List[int]:
    values = []
    offset = 0
    for part in token.split(','):
        values.append(_int_token(part, line, column + offset, what, allow_negative))
        offset += len(part) + 1
    return values


def parse_diagram(text: str, name: Optional[str] = None) -> Diagram:
    """
    Parse and validate a diagram in .skd format.

    Args:
        text: Source text (vertex lines, braid line or unknot, plus a Q line)
        name: Name used when the source has no `diagram` header

    Returns:
        A validated, connected Diagram

    Raises:
        DiagramSyntaxError: malformed line (line/column reported)
        DiagramValidationError: structural invariant violated

    Example:
        >>> d = parse_diagram("S 1 2 2 1\\nQ 1")
        >>> d.num_vertices, d.num_edges
        (1, 2)
    """
    header_name = None
    vertices: List[Vertex] = []
    marked: Optional[int] = None
    unknot_line = None
    braid = None
    body_line = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r'\S+', raw)]
        head, col = tokens[0]
        rest = tokens[1:]

        if head == 'diagram':
            if not rest:
                raise DiagramSyntaxError("`diagram` needs a name", lineno, col)
            header_name = ' '.join(t for t, _ in rest)

        elif head == 'Q':
            if marked is not None:
                raise DiagramSyntaxError("More than one Q line", lineno, col)
            if len(rest) != 1:
                raise DiagramSyntaxError("Q takes exactly one edge label", lineno, col)
            marked = _int_token(rest[0][0], lineno, rest[0][1], 'edge label')

        elif head == 'unknot':
            if rest:
                raise DiagramSyntaxError("`unknot` takes no arguments", lineno, rest[0][1])
            if body_line is not None:
                raise DiagramSyntaxError(
                    "`unknot` must be the only vertex line", lineno, col
                )
            unknot_line = body_line = lineno

        elif head in _KIND_CODES:
            if unknot_line is not None or braid is not None:
                raise DiagramSyntaxError(
                    "Vertex lines cannot follow `unknot` or `braid`", lineno, col
                )
            if len(rest) != 4:
                raise DiagramSyntaxError(
                    f"{head} needs 4 edge labels (inL inR outR outL), got {len(rest)}",
                    lineno, col,
                )
            slots = tuple(_int_token(t, lineno, c, 'edge label') for t, c in rest)
            vertices.append(Vertex(_KIND_CODES[head], slots))
            body_line = lineno if body_line is None else body_line

        elif head == 'braid':
            if body_line is not None:
                raise DiagramSyntaxError(
                    "`braid` must be the only body line", lineno, col
                )
            if len(rest) not in (2, 4) or (len(rest) == 4 and rest[2][0] != 'sing'):
                raise DiagramSyntaxError(
                    "Expected `braid <n> <w1,...,wk> [sing p1,...,pm]`", lineno, col
                )
            strands = _int_token(rest[0][0], lineno, rest[0][1], 'strand count')
            word = _int_list(rest[1][0], lineno, rest[1][1], 'nonzero braid letter',
                             allow_negative=True)
            mask = []
            if len(rest) == 4:
                mask = _int_list(rest[3][0], lineno, rest[3][1], 'word position')
            braid = (strands, word, mask)
            body_line = lineno

        else:
            raise DiagramSyntaxError(f"Unknown keyword {head!r}", lineno, col)

    name = header_name or name or ''

    if braid is not None:
        d = from_braid(*braid, name=name)
        return d if marked is None else with_marked_edge(d, marked)

    if marked is None:
        raise DiagramValidationError("Missing Q line (exactly one marked edge is required)")

    if unknot_line is not None:
        if marked != 1:
            raise DiagramValidationError("Invalid Q: the unknot's only edge is 1, use `Q 1`")
        return unknot_diagram(name or 'unknot')

    if not vertices:
        raise DiagramValidationError("Empty diagram: no vertex, braid or unknot line")

    return validate_diagram(Diagram(tuple(vertices), marked, name))


def serialize(d: Diagram) -> str:
    """Emit .skd text for a connected diagram."""
    if d.split:
        raise DiagramValidationError(
            f"Diagram '{d.name}' is split and has no .skd form"
        )
    lines = []
    if d.name:
        lines.append(f"diagram {d.name}")
    if d.is_unknot:
        lines += ['unknot', 'Q 1']
        return '\n'.join(lines) + '\n'
    for v in d.vertices:
        lines.append(f"{v.kind.value} " + ' '.join(str(s) for s in v.slots))
    lines.append(f"Q {d.marked_edge}")
    return '\n'.join(lines) + '\n'


def diagram_to_json(d: Diagram) -> dict:
    return {
        'name': d.name,
        'vertices': [{'kind': v.kind.value, 'slots': list(v.slots)} for v in d.vertices],
        'q': d.marked_edge,
        'edges': d.num_edges,
    }


# ----------------------------------------------------------------------
# Braid closures
# ----------------------------------------------------------------------

def from_braid(
    strands: int,
    word: Sequence[int],
    singular_mask: Iterable[int] = (),
    name: str = '',
) -> Diagram:
    """
    Build the closure of a braid word.

    Strands run upward in positions 1..n. Letter +i / -i is a positive /
    negative crossing between positions i and i+1; masked letters (1-based word
    positions) become singular vertices. Q is the closure arc of position 1.

    Args:
        strands: Number of strands
        word: Nonzero letters with |letter| < strands
        singular_mask: Word positions to singularize
        name: Diagram name

    Returns:
        Connected Diagram with labels 1..E

    Raises:
        InvalidBraidError: bad strand count, letter or mask position
        SplitClosureError: the closure is disconnected

    Example:
        >>> d = from_braid(3, [1, 2, 1, 2, 1, 2], range(1, 7))
        >>> d.num_vertices, d.num_edges, d.num_singular
        (6, 12, 6)
    """
    word = [int(x) for x in word]
    mask = {int(p) for p in singular_mask}

    if strands < 1:
        raise InvalidBraidError(f"Strand count must be positive, got {strands}")
    for pos, letter in enumerate(word, 1):
        if letter == 0 or abs(letter) >= strands:
            raise InvalidBraidError(
                f"Invalid letter {letter} at position {pos} for a {strands}-strand braid"
            )
    for p in sorted(mask):
        if not 1 <= p <= len(word):
            raise InvalidBraidError(
                f"Mask position {p} outside the word (positions 1..{len(word)})"
            )

    if not word:
        if strands == 1:
            return unknot_diagram(name or 'unknot')
        raise SplitClosureError(f"Empty {strands}-strand braid closes to a split link")

    current = list(range(1, strands + 1))
    next_label = strands + 1
    raw: List[Tuple[VertexKind, Tuple[int, int, int, int]]] = []
    for pos, letter in enumerate(word, 1):
        i = abs(letter) - 1
        out_left, out_right = next_label, next_label + 1
        next_label += 2
        if pos in mask:
            kind = VertexKind.SINGULAR
        else:
            kind = VertexKind.POSITIVE if letter > 0 else VertexKind.NEGATIVE
        raw.append((kind, (current[i], current[i + 1], out_right, out_left)))
        current[i], current[i + 1] = out_left, out_right

    untouched = [p for p, label in enumerate(current, 1) if label == p]
    if untouched:
        raise SplitClosureError(
            f"Strand position(s) {untouched} never cross: the closure is split"
        )

    closure = {final: start for start, final in enumerate(current, 1)}
    closed = [(kind, tuple(closure.get(s, s) for s in slots)) for kind, slots in raw]
    compact = {label: i for i, label in enumerate(sorted({s for _, slots in closed for s in slots}), 1)}
    vertices = tuple(Vertex(kind, tuple(compact[s] for s in slots)) for kind, slots in closed)

    d = Diagram(vertices, compact[1], name)
    if not d.is_connected:
        raise SplitClosureError(
            f"Braid word {word} on {strands} strands closes to a split link"
        )
    return validate_diagram(d)


# ----------------------------------------------------------------------
# Local modifications
# ----------------------------------------------------------------------

def _vertex(d: Diagram, v: int) -> Vertex:
    if not 0 <= v < d.num_vertices:
        raise DiagramValidationError(
            f"Vertex id {v} out of range (diagram has {d.num_vertices} vertices)"
        )
    return d.vertices[v]


def _replace_vertex(d: Diagram, v: int, vertex: Vertex) -> Diagram:
    vertices = d.vertices[:v] + (vertex,) + d.vertices[v + 1:]
    return replace(d, vertices=vertices)


def _splice(d: Diagram, v: int) -> Diagram:
    # inL joins outL, inR joins outR; merged labels keep their smallest member
    a, b, c, e = d.vertices[v].slots
    merge = nx.Graph()
    merge.add_nodes_from(d.edges)
    merge.add_edges_from([(a, e), (b, c)])
    rep = {}
    for component in nx.connected_components(merge):
        smallest = min(component)
        for label in component:
            rep[label] = smallest

    vertices = tuple(
        Vertex(w.kind, tuple(rep[s] for s in w.slots))
        for i, w in enumerate(d.vertices) if i != v
    )
    attached = {s for w in vertices for s in w.slots}
    merged = {rep[label] for label in (a, b, c, e)}
    circles = tuple(sorted(set(d.circles) | {label for label in merged if label not in attached}))
    return Diagram(vertices, rep[d.marked_edge], d.name, circles)


def resolve(d: Diagram, v: int, mode: ResolutionMode) -> Diagram:
    """
    Resolve vertex v.

    PLUS / MINUS turn a singular vertex into a positive / negative crossing
    with the same slots. ORIENTED deletes the vertex and splices inL -> outL and
    inR -> outR; the result may be split (check `.split`).

    Raises:
        DiagramValidationError: PLUS/MINUS at an ordinary crossing, bad vertex id
    """
    vertex = _vertex(d, v)
    if mode is ResolutionMode.ORIENTED:
        return _splice(d, v)
    if not vertex.kind.is_singular:
        raise DiagramValidationError(
            f"Vertex {v} is an ordinary crossing; {mode.value} resolution needs a singular vertex"
        )
    kind = VertexKind.POSITIVE if mode is ResolutionMode.PLUS else VertexKind.NEGATIVE
    return _replace_vertex(d, v, vertex.with_kind(kind))


def singularize(d: Diagram, v: int) -> Diagram:
    """Turn an ordinary crossing into a singular vertex, slots unchanged."""
    vertex = _vertex(d, v)
    if vertex.kind.is_singular:
        raise DiagramValidationError(f"Vertex {v} is already singular")
    return _replace_vertex(d, v, vertex.with_kind(VertexKind.SINGULAR))


def switch_crossing(d: Diagram, v: int) -> Diagram:
    """Swap the sign of an ordinary crossing."""
    vertex = _vertex(d, v)
    if vertex.kind.is_singular:
        raise DiagramValidationError(f"Vertex {v} is singular and has no sign to switch")
    kind = VertexKind.NEGATIVE if vertex.kind is VertexKind.POSITIVE else VertexKind.POSITIVE
    return _replace_vertex(d, v, vertex.with_kind(kind))


def with_vertex_kind(d: Diagram, v: int, kind: VertexKind) -> Diagram:
    return _replace_vertex(d, v, _vertex(d, v).with_kind(kind))


def is_planar_singular(d: Diagram) -> bool:
    return all(v.kind.is_singular for v in d.vertices)


def with_marked_edge(d: Diagram, q: int) -> Diagram:
    """Copy of d with marked edge q."""
    if q not in d.edges:
        raise DiagramValidationError(
            f"Invalid Q: edge {q} is not an edge of diagram '{d.name}'\n"
            f"Edges: {sorted(d.edges)}"
        )
    return replace(d, marked_edge=q)


def num_components(d: Diagram) -> int:
    """Number of link components (strands follow inL->outR, inR->outL)."""
    g = nx.Graph()
    g.add_nodes_from(d.edges)
    for v in d.vertices:
        g.add_edge(v.in_left, v.out_right)
        g.add_edge(v.in_right, v.out_left)
    return nx.number_connected_components(g)
