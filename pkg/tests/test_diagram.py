import pytest

from singular_knots.diagram import (
    ResolutionMode,
    VertexKind,
    diagram_to_json,
    from_braid,
    is_planar_singular,
    num_components,
    parse_diagram,
    resolve,
    serialize,
    singularize,
    switch_crossing,
    unknot_diagram,
    with_marked_edge,
)
from singular_knots.exceptions import (
    DiagramSyntaxError,
    DiagramValidationError,
    InvalidBraidError,
    SplitClosureError,
)
from singular_knots.verify import random_suite

TREFOIL_TEXT = """\
# positive trefoil
diagram trefoil
X+ 1 2 4 3
X+ 3 4 6 5
X+ 5 6 2 1
Q 1
"""


def test_parse_vertex_lines():
    d = parse_diagram(TREFOIL_TEXT)
    assert d.name == 'trefoil'
    assert d.num_vertices == 3
    assert d.num_edges == 6
    assert d.marked_edge == 1
    assert all(v.kind is VertexKind.POSITIVE for v in d.vertices)
    assert d.vertices[0].in_left == 1 and d.vertices[0].out_left == 3


def test_parse_braid_line_matches_from_braid():
    d = parse_diagram("braid 2 1,1,1\n", name='t')
    assert d.vertices == from_braid(2, [1, 1, 1]).vertices
    assert d.vertices == parse_diagram(TREFOIL_TEXT).vertices


def test_braid_line_with_q_override():
    d = parse_diagram("braid 2 1,1,1 sing 2\nQ 4\n")
    assert d.marked_edge == 4
    assert d.singular_vertices == (1,)


def test_unknot():
    d = parse_diagram("unknot\nQ 1\n")
    assert d.is_unknot
    assert d.num_vertices == 0 and d.num_edges == 1
    assert d == unknot_diagram()


def test_edge_ends():
    d = parse_diagram(TREFOIL_TEXT)
    assert d.edge_ends[1] == ((2, 3), (0, 0))
    assert d.edge_ends[4] == ((0, 2), (1, 1))


def test_from_braid_labels_torus_link():
    d = from_braid(3, [1, 2, 1, 2, 1, 2], range(1, 7))
    assert [v.slots for v in d.vertices] == [
        (1, 2, 5, 4), (5, 3, 7, 6), (4, 6, 9, 8),
        (9, 7, 11, 10), (8, 10, 12, 1), (12, 11, 3, 2),
    ]
    assert d.marked_edge == 1
    assert is_planar_singular(d)


def test_from_braid_negative_letters():
    d = from_braid(2, [-1, -1, -1])
    assert all(v.kind is VertexKind.NEGATIVE for v in d.vertices)


def test_from_braid_single_strand_is_unknot():
    assert from_braid(1, []).is_unknot


@pytest.mark.parametrize("strands,word,mask", [
    (2, [2], ()),
    (2, [0], ()),
    (0, [1], ()),
    (2, [1, 1, 1], (4,)),
])
def test_from_braid_rejects_bad_input(strands, word, mask):
    with pytest.raises(InvalidBraidError):
        from_braid(strands, word, mask)


@pytest.mark.parametrize("strands,word", [(3, [1]), (2, []), (3, [1, 1])])
def test_from_braid_split_closure(strands, word):
    with pytest.raises(SplitClosureError):
        from_braid(strands, word)


@pytest.mark.parametrize("text,line,column", [
    ("X+ 1 2 3\nQ 1", 1, 1),
    ("Q 1\nfoo 1", 2, 1),
    ("X+ 1 2 a 3\nQ 1", 1, 8),
    ("S 1 2 2 1\nQ 1\nQ 2", 3, 1),
    ("braid 2 1,x,1\n", 1, 11),
])
def test_syntax_errors_report_position(text, line, column):
    with pytest.raises(DiagramSyntaxError) as info:
        parse_diagram(text)
    assert info.value.line == line
    assert info.value.column == column
    assert str(info.value).startswith(f"line {line}, column {column}:")


@pytest.mark.parametrize("text,fragment", [
    ("S 1 2 2 1\n", "Missing Q"),
    ("X+ 1 2 3 4\nQ 1", "Dangling"),
    ("X+ 1 1 2 2\nQ 1", "Duplicate"),
    ("S 1 2 2 1\nQ 5", "Invalid Q"),
    ("X+ 1 2 2 1\nX+ 3 4 4 3\nQ 1", "disconnected"),
])
def test_validation_errors(text, fragment):
    with pytest.raises(DiagramValidationError, match=fragment):
        parse_diagram(text)


def test_literal_crosswise_trefoil_parses():
    # Valid at parse level; rejected later by the face trace
    d = parse_diagram("X+ 1 2 3 4\nX+ 4 3 5 6\nX+ 6 5 1 2\nQ 1")
    assert d.num_vertices == 3 and d.num_edges == 6


def test_serialize_round_trip(torus33sing):
    again = parse_diagram(serialize(torus33sing))
    assert again.vertices == torus33sing.vertices
    assert again.marked_edge == torus33sing.marked_edge
    assert again.name == torus33sing.name


def test_diagram_to_json(sing_kink):
    assert diagram_to_json(sing_kink) == {
        'name': 'sing-kink',
        'vertices': [{'kind': 'S', 'slots': [1, 2, 2, 1]}],
        'q': 1,
        'edges': 2,
    }


def test_resolve_crossing_modes(sing_kink):
    plus = resolve(sing_kink, 0, ResolutionMode.PLUS)
    minus = resolve(sing_kink, 0, ResolutionMode.MINUS)
    assert plus.vertices[0].kind is VertexKind.POSITIVE
    assert minus.vertices[0].kind is VertexKind.NEGATIVE
    assert plus.vertices[0].slots == (1, 2, 2, 1)
    with pytest.raises(DiagramValidationError):
        resolve(plus, 0, ResolutionMode.PLUS)


def test_oriented_resolution_of_kink_is_split(sing_kink):
    smoothed = resolve(sing_kink, 0, ResolutionMode.ORIENTED)
    assert smoothed.num_vertices == 0
    assert smoothed.circles == (1, 2)
    assert smoothed.split


def test_oriented_resolution_of_trefoil(trefoil):
    smoothed = resolve(trefoil, 0, ResolutionMode.ORIENTED)
    assert smoothed.num_vertices == 2
    assert smoothed.is_connected
    assert num_components(smoothed) == 2
    assert [v.slots for v in smoothed.vertices] == [(1, 2, 6, 5), (5, 6, 2, 1)]


def test_bad_vertex_id(trefoil):
    with pytest.raises(DiagramValidationError, match="out of range"):
        resolve(trefoil, 7, ResolutionMode.ORIENTED)


def test_switch_and_singularize(trefoil):
    switched = switch_crossing(trefoil, 1)
    assert switched.vertices[1].kind is VertexKind.NEGATIVE
    assert switch_crossing(switched, 1) == trefoil
    sing = singularize(trefoil, 2)
    assert sing.singular_vertices == (2,)
    with pytest.raises(DiagramValidationError):
        switch_crossing(sing, 2)
    with pytest.raises(DiagramValidationError):
        singularize(sing, 2)


def test_with_marked_edge(trefoil):
    assert with_marked_edge(trefoil, 5).marked_edge == 5
    with pytest.raises(DiagramValidationError, match="Invalid Q"):
        with_marked_edge(trefoil, 9)


def test_num_components(corpus):
    assert num_components(corpus['trefoil']) == 1
    assert num_components(corpus['hopf+']) == 2
    assert num_components(corpus['sing-hopf2']) == 2
    assert num_components(corpus['torus33sing']) == 3
    assert num_components(corpus['unknot']) == 1


def test_graph_is_four_valent(torus33sing):
    g = torus33sing.graph()
    assert g.number_of_nodes() == 6
    assert g.number_of_edges() == 12
    assert all(deg == 4 for _, deg in g.degree())


def test_plus_resolution_then_singularize_is_identity():
    for d, _ in random_suite(seed=19, count=40, max_crossings=7):
        for v in d.singular_vertices:
            assert singularize(resolve(d, v, ResolutionMode.PLUS), v) == d


def test_torus_singularized_vertex_by_vertex():
    d = from_braid(3, [1, 2, 1, 2, 1, 2])
    for v in range(d.num_vertices):
        d = singularize(d, v)
    assert d == from_braid(3, [1, 2, 1, 2, 1, 2], range(1, 7))


def test_full_mask_equals_singularizing_every_crossing():
    for _, recipe in random_suite(seed=23, count=40, max_crossings=7):
        strands, word = recipe['strands'], recipe['word']
        d = from_braid(strands, word)
        for v in range(d.num_vertices):
            d = singularize(d, v)
        assert d == from_braid(strands, word, range(1, len(word) + 1))


def test_serialize_round_trip_on_random_diagrams():
    for d, _ in random_suite(seed=29, count=40, max_crossings=8):
        assert parse_diagram(serialize(d)) == d
