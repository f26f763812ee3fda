import pytest

from singular_knots.diagram import parse_diagram, resolve, ResolutionMode
from singular_knots.exceptions import DiagramValidationError, NonPlanarDiagramError
from singular_knots.faces import Quadrant, QuadrantPosition, compute_faces


@pytest.mark.parametrize("name,faces", [
    ('unknot', 2),
    ('kink+', 3),
    ('sing-kink', 3),
    ('trefoil', 5),
    ('hopf+', 4),
    ('figure8', 6),
    ('torus33sing', 8),
])
def test_face_counts(corpus, name, faces):
    assert compute_faces(corpus[name]).num_faces == faces


def test_euler_formula_on_corpus(corpus):
    for d in corpus.values():
        if d.num_vertices:
            assert d.num_vertices - d.num_edges + compute_faces(d).num_faces == 2


def test_every_quadrant_in_exactly_one_face(torus33sing):
    fs = compute_faces(torus33sing)
    corners = [q for f in fs.faces for q in f.corners]
    assert len(corners) == 4 * torus33sing.num_vertices
    assert len(set(corners)) == len(corners)


def test_eligible_faces_match_vertex_count(corpus):
    for d in corpus.values():
        fs = compute_faces(d)
        assert fs.region_x != fs.region_y
        assert len(fs.eligible) == d.num_vertices


def test_marked_regions_torus(torus33sing):
    fs = compute_faces(torus33sing)
    face_of = fs.face_of()
    x_corners = {q for f in fs.faces if f.id == fs.region_x for q in f.corners}
    y_corners = {q for f in fs.faces if f.id == fs.region_y for q in f.corners}
    assert x_corners == {
        Quadrant(0, QuadrantPosition.A),
        Quadrant(4, QuadrantPosition.A),
        Quadrant(2, QuadrantPosition.A),
    }
    assert y_corners == {
        Quadrant(0, QuadrantPosition.D),
        Quadrant(5, QuadrantPosition.A),
        Quadrant(4, QuadrantPosition.B),
    }
    assert face_of[Quadrant(0, QuadrantPosition.A)] == fs.region_x


def test_kink_faces(sing_kink):
    fs = compute_faces(sing_kink)
    face_of = fs.face_of()
    # B and D share the outer face; C is the loop interior
    assert face_of[Quadrant(0, QuadrantPosition.B)] == face_of[Quadrant(0, QuadrantPosition.D)]
    assert fs.eligible == (face_of[Quadrant(0, QuadrantPosition.C)],)


def test_unknot_faces(corpus):
    fs = compute_faces(corpus['unknot'])
    assert (fs.region_x, fs.region_y) == (0, 1)
    assert fs.eligible == ()


def test_crosswise_closure_is_not_planar():
    d = parse_diagram("X+ 1 2 3 4\nX+ 4 3 5 6\nX+ 6 5 1 2\nQ 1")
    with pytest.raises(NonPlanarDiagramError, match="not planar"):
        compute_faces(d)


def test_split_diagram_rejected(sing_kink):
    with pytest.raises(DiagramValidationError, match="split"):
        compute_faces(resolve(sing_kink, 0, ResolutionMode.ORIENTED))
