import pytest

from singular_knots.alexander import alexander_state_sum
from singular_knots.constants import ORDINARY_CORNERS, SINGULAR_CORNERS, STANDARD_GRADINGS
from singular_knots.diagram import VertexKind, from_braid
from singular_knots.exceptions import InstanceTooLargeError
from singular_knots.faces import Quadrant, compute_faces
from singular_knots.laurent import HalfLaurent
from singular_knots.states import (
    STANDARD_WEIGHTS,
    BigradedTable,
    Corner,
    allowed_corners,
    count_states_oracle,
    enumerate_states,
    format_half,
    generator_table,
    states_frame,
)


def letters(states):
    return [s.corner_letters() for s in states]


def test_trefoil_states(trefoil):
    states = enumerate_states(trefoil)
    assert letters(states) == ['B B C', 'B C D', 'C D D']
    assert [s.weight() for s in states] == [
        HalfLaurent({2: 1}), HalfLaurent({0: -1}), HalfLaurent({-2: 1}),
    ]


def test_trefoil_table(trefoil):
    assert generator_table(trefoil).as_dict() == {(-2, -2): 1, (-1, 0): 1, (0, 2): 1}


def test_sing_kink_single_state(sing_kink):
    (state,) = enumerate_states(sing_kink)
    assert state.assignment == (Corner.C,)
    assert (state.two_s, state.maslov, state.n_grading) == (0, 0, 0)
    assert generator_table(sing_kink).as_dict() == {(0, 0): 1}


def test_unknot_has_empty_state(corpus):
    (state,) = enumerate_states(corpus['unknot'])
    assert state.assignment == ()
    assert state.weight() == 1


def test_occupancy_is_a_bijection_onto_eligible_faces(corpus):
    for d in corpus.values():
        fs = compute_faces(d)
        face_of = fs.face_of()
        for s in enumerate_states(d, fs):
            assert sorted(s.occupancy) == sorted(fs.eligible)
            for v, corner in enumerate(s.assignment):
                assert face_of[Quadrant(v, corner.position)] == s.occupancy[v]


def test_corners_respect_vertex_kind(corpus):
    for d in corpus.values():
        for s in enumerate_states(d):
            for vertex, corner in zip(d.vertices, s.assignment):
                if vertex.kind is VertexKind.SINGULAR:
                    assert corner not in (Corner.B, Corner.D)
                else:
                    assert corner not in (Corner.D_PLUS, Corner.D_MINUS)


@pytest.mark.parametrize("name", [
    'unknot', 'kink+', 'sing-kink', 'trefoil', 'trefoil-', 'figure8',
    'hopf+', 'sing-hopf2', 'sing-trefoil1', 'trefoil-sing3', 'torus33sing',
])
def test_oracle_matches_enumeration(corpus, name):
    d = corpus[name]
    assert count_states_oracle(d) == len(enumerate_states(d))


def test_torus_state_count(torus33sing):
    assert count_states_oracle(torus33sing) == 21
    assert len(enumerate_states(torus33sing)) == 21


def test_oracle_size_guard():
    d = from_braid(2, [1] * 13)
    with pytest.raises(InstanceTooLargeError) as info:
        count_states_oracle(d)
    assert info.value.vertices == 13


def test_planar_states_lie_on_diagonal(torus33sing, trefoil_sing3):
    for d in (torus33sing, trefoil_sing3):
        assert all(s.maslov == s.two_s for s in enumerate_states(d))


def test_alexander_parity_is_fixed(corpus):
    for d in corpus.values():
        assert len({s.two_s % 2 for s in enumerate_states(d)}) == 1


def test_torus_profile(torus33sing):
    table = generator_table(torus33sing)
    assert table.total == 21
    assert table.alexander_profile() == [1, 5, 9, 5, 1]
    assert table.is_diagonal()


def test_table_euler_characteristic_is_state_sum(corpus):
    for d in corpus.values():
        assert generator_table(d).euler_characteristic() == alexander_state_sum(d)


def test_table_json_and_matrix(torus33sing):
    table = generator_table(torus33sing)
    assert table.to_json() == [[-4, -4, 1], [-2, -2, 5], [0, 0, 9], [2, 2, 5], [4, 4, 1]]
    matrix = table.to_matrix()
    assert list(matrix.index) == [4, 2, 0, -2, -4]
    assert list(matrix.columns) == ['-2', '-1', '0', '1', '2']
    assert matrix.loc[0, '0'] == 9
    assert matrix.loc[4, '0'] == 0


def test_profile_fills_gaps():
    table = BigradedTable.from_mapping({(0, -2): 1, (0, 2): 3})
    assert table.alexander_profile() == [1, 0, 3]
    assert BigradedTable.from_mapping({}).alexander_profile() == []


def test_states_frame(trefoil):
    frame = states_frame(trefoil, enumerate_states(trefoil))
    assert list(frame.columns) == ['v0', 'v1', 'v2', 'S', 'M', 'N']
    assert frame.iloc[0].tolist() == ['B', 'B', 'C', '1', 0, -2]


def test_format_half():
    assert format_half(3) == '3/2'
    assert format_half(-1) == '-1/2'
    assert format_half(-2) == '-1'
    assert format_half(0) == '0'


def test_weights_table():
    assert STANDARD_WEIGHTS.grading(VertexKind.SINGULAR, Corner.D_PLUS) == (1, 1)
    assert STANDARD_WEIGHTS.weight(VertexKind.POSITIVE, Corner.D) == HalfLaurent({-1: -1})
    d_sum = (STANDARD_WEIGHTS.weight(VertexKind.SINGULAR, Corner.D_PLUS)
             + STANDARD_WEIGHTS.weight(VertexKind.SINGULAR, Corner.D_MINUS))
    assert d_sum == HalfLaurent({1: -1, -1: -1})
    with pytest.raises(KeyError):
        STANDARD_WEIGHTS.grading(VertexKind.SINGULAR, Corner.B)


def test_weight_override_is_a_copy():
    corrupted = STANDARD_WEIGHTS.with_override(VertexKind.SINGULAR, Corner.D_PLUS, 1, 0)
    assert corrupted.grading(VertexKind.SINGULAR, Corner.D_PLUS) == (1, 0)
    assert STANDARD_WEIGHTS.grading(VertexKind.SINGULAR, Corner.D_PLUS) == (1, 1)


def test_parallel_enumeration_matches(monkeypatch, torus33sing):
    monkeypatch.setenv('KAUFFMAN_THREADS', '2')
    sequential = enumerate_states(torus33sing, workers=1)
    parallel = enumerate_states(torus33sing, workers=2)
    assert parallel == sequential


def test_corner_orders_follow_constants():
    assert [c.value for c in allowed_corners(VertexKind.POSITIVE)] == list(ORDINARY_CORNERS)
    assert [c.value for c in allowed_corners(VertexKind.SINGULAR)] == list(SINGULAR_CORNERS)
    for kind, corners in STANDARD_GRADINGS.items():
        order = ORDINARY_CORNERS if kind != 'S' else SINGULAR_CORNERS
        assert sorted(corners) == sorted(order)
