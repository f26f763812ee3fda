"""
Corpus Module

Built-in diagrams with golden values, and the input loader shared by the
command line and the analysis chapters.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from .diagram import Diagram, is_planar_singular, parse_diagram, with_marked_edge
from .exceptions import DiagramSyntaxError

# Project root (relative to this file)
PROJECT_ROOT = Path(__file__).parent.parent.parent

CORPUS_PREFIX = 'corpus:'


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    source: str
    delta: Optional[str] = None
    chi_hfa: Optional[str] = None
    states: Optional[int] = None

    def diagram(self) -> Diagram:
        return parse_diagram(self.source, name=self.name)

    @property
    def goldens(self) -> List[str]:
        present = [('delta', self.delta), ('chi_hfa', self.chi_hfa), ('states', self.states)]
        return [key for key, value in present if value is not None]


CORPUS: Dict[str, CorpusEntry] = {e.name: e for e in [
    CorpusEntry(
        'unknot', 'Crossingless unknot',
        "unknot\nQ 1\n",
        delta='1', states=1,
    ),
    CorpusEntry(
        'kink+', 'Unknot with one positive kink',
        "X+ 1 2 2 1\nQ 1\n",
        delta='1', states=1,
    ),
    CorpusEntry(
        'sing-kink', 'Unknot with one singular kink',
        "S 1 2 2 1\nQ 1\n",
        delta='1', chi_hfa='1', states=1,
    ),
    CorpusEntry(
        'trefoil', 'Positive trefoil, closure of sigma1^3',
        "braid 2 1,1,1\n",
        delta='T - 1 + T^-1', states=3,
    ),
    CorpusEntry(
        'trefoil-', 'Negative trefoil, closure of sigma1^-3',
        "braid 2 -1,-1,-1\n",
        delta='T - 1 + T^-1', states=3,
    ),
    CorpusEntry(
        'figure8', 'Figure-eight knot, closure of (sigma1 sigma2^-1)^2',
        "braid 3 1,-2,1,-2\n",
        delta='-T + 3 - T^-1', states=5,
    ),
    CorpusEntry(
        'hopf+', 'Positive Hopf link, closure of sigma1^2',
        "braid 2 1,1\n",
        delta='T^(1/2) - T^(-1/2)', states=2,
    ),
    CorpusEntry(
        'sing-hopf2', 'Hopf diagram with both crossings singular',
        "braid 2 1,1 sing 1,2\n",
        delta='-T^(1/2) - T^(-1/2)', chi_hfa='T^(3/2) - T^(-1/2)', states=2,
    ),
    CorpusEntry(
        'sing-trefoil1', 'Trefoil with its first crossing singular',
        "braid 2 1,1,1 sing 1\n",
        delta='T^-1', chi_hfa='T^-1', states=1,
    ),
    CorpusEntry(
        'trefoil-sing3', 'Trefoil diagram with all three crossings singular',
        "braid 2 1,1,1 sing 1,2,3\n",
        delta='T + 2 + T^-1', chi_hfa='T^3 - 2*T + T^-1', states=4,
    ),
    CorpusEntry(
        'torus33sing', 'Closure of (sigma1 sigma2)^3 with all six crossings singular',
        "braid 3 1,2,1,2,1,2 sing 1,2,3,4,5,6\n",
        delta='T^2 + 5*T + 9 + 5*T^-1 + T^-2',
        chi_hfa='-T^7 + 6*T^5 - 21*T^3 + 21*T^2 - 6 + T^-2',
        states=21,
    ),
]}


def corpus_names() -> List[str]:
    return list(CORPUS)


def get_entry(name: str) -> CorpusEntry:
    if name not in CORPUS:
        raise FileNotFoundError(
            f"Unknown corpus entry: {name}\n"
            f"Available: {', '.join(CORPUS)}"
        )
    return CORPUS[name]


def read_skd(path: Path) -> str:
    """
    Read a .skd file as UTF-8.

    Raises:
        DiagramSyntaxError: the file is not valid UTF-8 (line and column of
            the first bad byte)
    """
    data = path.read_bytes()
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        line = data.count(b'\n', 0, e.start) + 1
        column = e.start - (data.rfind(b'\n', 0, e.start) + 1) + 1
        raise DiagramSyntaxError(
            f"invalid UTF-8 byte 0x{data[e.start]:02x} at offset {e.start}", line, column
        ) from e


def load_diagram(source: str, q: Optional[int] = None) -> Diagram:
    """
    Load a diagram from `corpus:<name>` or a .skd file path.

    Args:
        source: Corpus reference or path
        q: Optional marked-edge override

    Returns:
        Validated Diagram

    Raises:
        FileNotFoundError: unknown corpus name or missing file
        DiagramSyntaxError: the file is not UTF-8 or does not parse
        KauffmanError: the diagram does not validate

    Example:
        >>> load_diagram('corpus:torus33sing').num_vertices
        6
        >>> load_diagram('corpus:trefoil', q=4).marked_edge
        4
    """
    if source.startswith(CORPUS_PREFIX):
        d = get_entry(source[len(CORPUS_PREFIX):]).diagram()
    else:
        path = Path(source)
        if not path.exists():
            raise FileNotFoundError(
                f"Diagram file not found: {path}\n"
                f"Use corpus:<name> for a built-in diagram ({', '.join(CORPUS)})"
            )
        d = parse_diagram(read_skd(path), name=path.stem)

    if q is not None:
        d = with_marked_edge(d, q)
    return d


def load_corpus() -> Dict[str, Diagram]:
    return {name: entry.diagram() for name, entry in CORPUS.items()}


def corpus_frame() -> pd.DataFrame:
    """Listing of all entries: size, planarity and available golden values."""
    rows = []
    for entry in CORPUS.values():
        d = entry.diagram()
        rows.append({
            'name': entry.name,
            'vertices': d.num_vertices,
            'singular': d.num_singular,
            'planar': is_planar_singular(d),
            'goldens': ','.join(entry.goldens),
            'description': entry.description,
        })
    return pd.DataFrame(rows, columns=['name', 'vertices', 'singular', 'planar',
                                       'goldens', 'description'])
