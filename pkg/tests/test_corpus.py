import pytest

from singular_knots.corpus import (
    CORPUS,
    corpus_frame,
    corpus_names,
    get_entry,
    load_corpus,
    load_diagram,
)
from singular_knots.exceptions import DiagramSyntaxError


def test_every_entry_parses():
    diagrams = load_corpus()
    assert list(diagrams) == corpus_names()
    for name, d in diagrams.items():
        assert d.name == name
        assert d.is_connected


def test_flagship_entry():
    entry = get_entry('torus33sing')
    assert entry.goldens == ['delta', 'chi_hfa', 'states']
    d = entry.diagram()
    assert (d.num_vertices, d.num_edges, d.num_singular) == (6, 12, 6)


def test_load_with_q_override():
    assert load_diagram('corpus:trefoil', q=4).marked_edge == 4


def test_unknown_entry():
    with pytest.raises(FileNotFoundError, match="Unknown corpus entry"):
        load_diagram('corpus:granny')


def test_load_from_file(tmp_path):
    path = tmp_path / 'kink.skd'
    path.write_text("S 1 2 2 1\nQ 1\n")
    d = load_diagram(str(path))
    assert d.name == 'kink'
    assert d.num_singular == 1


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError, match="not found"):
        load_diagram(str(tmp_path / 'nope.skd'))


def test_bad_file(tmp_path):
    path = tmp_path / 'bad.skd'
    path.write_text("X+ 1 2\nQ 1\n")
    with pytest.raises(DiagramSyntaxError):
        load_diagram(str(path))


def test_corpus_frame():
    frame = corpus_frame()
    assert len(frame) == len(CORPUS)
    row = frame.set_index('name').loc['torus33sing']
    assert bool(row['planar'])
    assert row['vertices'] == 6
    assert not bool(frame.set_index('name').loc['trefoil', 'planar'])
