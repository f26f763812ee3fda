import json

import pytest

import cli.kauffman as kauffman
from cli.kauffman import main
from singular_knots.exceptions import DegenerateMarkingError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_json(capsys):
    code, out, _ = run(capsys, 'parse', 'corpus:torus33sing', '--json')
    assert code == 0
    summary = json.loads(out)
    assert (summary['vertices'], summary['edges'], summary['faces']) == (6, 12, 8)
    assert summary['planar'] is True
    assert summary['components'] == 3


def test_parse_unknot(capsys):
    code, out, _ = run(capsys, 'parse', 'corpus:unknot')
    assert code == 0
    assert 'planar      true' in out


def test_alexander_both_methods(capsys):
    code, out, _ = run(capsys, 'alexander', 'corpus:torus33sing', '--method', 'both')
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == 'T^2 + 5*T + 9 + 5*T^-1 + T^-2'
    assert lines[-1] == 'methods agree'


@pytest.mark.parametrize("name,expected", [
    ('trefoil', 'T - 1 + T^-1'),
    ('sing-kink', '1'),
    ('sing-hopf2', '-T^(1/2) - T^(-1/2)'),
])
def test_alexander_single_method(capsys, name, expected):
    code, out, _ = run(capsys, 'alexander', f'corpus:{name}')
    assert code == 0
    assert out.strip() == expected


def test_alexander_json_is_deterministic(capsys):
    _, first, _ = run(capsys, 'alexander', 'corpus:figure8', '--method', 'both', '--json')
    _, second, _ = run(capsys, 'alexander', 'corpus:figure8', '--method', 'both', '--json')
    assert first == second
    assert json.loads(first)['methods_agree'] is True


def test_euler_torus(capsys):
    code, out, _ = run(capsys, 'euler', 'corpus:torus33sing', '--json')
    payload = json.loads(out)
    assert code == 0
    assert payload['ell'] == 5
    assert payload['chi_hfa'] == [[-4, 1], [0, -6], [4, 21], [6, -21], [10, 6], [14, -1]]


def test_euler_text(capsys):
    code, out, _ = run(capsys, 'euler', 'corpus:sing-kink')
    assert code == 0
    assert 'chi(HF^-)   1' in out
    assert 'ell         0' in out
    assert 'chi(HFa)    1' in out


def test_euler_without_singular_vertex(capsys):
    code, out, err = run(capsys, 'euler', 'corpus:trefoil', '--json')
    assert code == 0
    assert json.loads(out)['chi_hfa'] is None
    assert '[INFO]' in err


def test_homology_planar_and_chain(capsys):
    code, out, _ = run(capsys, 'homology', 'corpus:torus33sing', '--json')
    payload = json.loads(out)
    assert code == 0
    assert payload['planar'] is True
    assert [r for _, _, r in payload['ranks']] == [1, 5, 9, 5, 1]

    code, out, _ = run(capsys, 'homology', 'corpus:trefoil')
    assert code == 0
    assert 'not homology' in out


def test_states_tsv(capsys):
    code, out, _ = run(capsys, 'states', 'corpus:trefoil', '--tsv')
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == 'v0\tv1\tv2\tS\tM\tN'
    assert lines[1] == 'B\tB\tC\t1\t0\t-2'
    assert len(lines) == 4


def test_states_oracle(capsys):
    code, out, _ = run(capsys, 'states', 'corpus:torus33sing', '--oracle', '--json')
    payload = json.loads(out)
    assert code == 0
    assert payload['count'] == payload['oracle'] == 21


def test_marked_edge_override(capsys):
    code, out, _ = run(capsys, 'alexander', 'corpus:torus33sing', '--q', '7')
    assert code == 0
    assert out.strip() == 'T^2 + 5*T + 9 + 5*T^-1 + T^-2'


def test_invalid_marked_edge(capsys):
    code, _, err = run(capsys, 'alexander', 'corpus:trefoil', '--q', '99')
    assert code == 2
    assert 'Invalid Q' in err


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / 'bad.skd'
    path.write_text("X+ 1 2\nQ 1\n")
    code, _, err = run(capsys, 'parse', str(path))
    assert code == 2
    assert 'line 1' in err


def test_non_planar_file(capsys, tmp_path):
    path = tmp_path / 'crosswise.skd'
    path.write_text("X+ 1 2 3 4\nX+ 4 3 5 6\nX+ 6 5 1 2\nQ 1\n")
    code, _, err = run(capsys, 'parse', str(path))
    assert code == 2
    assert 'not planar' in err


def test_invalid_utf8_file(capsys, tmp_path):
    path = tmp_path / 'latin.skd'
    path.write_bytes(b"S 1 2 2 1\nQ 1 # \xff\xfe\n")
    code, _, err = run(capsys, 'parse', str(path))
    assert code == 2
    assert '[ERROR]' in err
    assert 'line 2, column 7: invalid UTF-8 byte 0xff at offset 16' in err


def test_io_errors(capsys, tmp_path):
    assert run(capsys, 'parse', str(tmp_path / 'missing.skd'))[0] == 1
    assert run(capsys, 'alexander', 'corpus:granny')[0] == 1


def test_degenerate_marking_exit_code(capsys, monkeypatch):
    def degenerate(d):
        raise DegenerateMarkingError("Both sides of marked edge 1 lie in face 0")
    monkeypatch.setattr(kauffman, 'compute_faces', degenerate)
    code, _, err = run(capsys, 'parse', 'corpus:trefoil')
    assert code == 3
    assert '[ERROR]' in err


def test_verify(capsys):
    code, out, _ = run(capsys, 'verify', '--seed', '7', '--count', '5', '--max-crossings', '5')
    assert code == 0
    assert 'PASS' in out.splitlines()


def test_verify_rejects_zero_crossing_cap(capsys):
    code, _, err = run(capsys, 'verify', '--max-crossings', '0')
    assert code == 2
    assert 'max_crossings must be at least 1' in err


def test_corpus_listing(capsys):
    code, out, _ = run(capsys, 'corpus')
    assert code == 0
    assert 'torus33sing' in out

    code, out, _ = run(capsys, 'corpus', 'sing-kink')
    assert code == 0
    assert out.splitlines() == ['diagram sing-kink', 'S 1 2 2 1', 'Q 1']
