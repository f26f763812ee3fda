"""
Singular Knots Library

Kauffman states, Alexander polynomials and planar Floer ranks of singular
knot diagrams.
"""
from .laurent import (
    HalfLaurent,
    T_HALF,
    T_MINUS_HALF,
    one_minus_T_power,
    invert_T,
    is_symmetric,
    render,
    parse_half_laurent,
)

from .diagram import (
    Diagram,
    Vertex,
    VertexKind,
    ResolutionMode,
    parse_diagram,
    validate_diagram,
    serialize,
    diagram_to_json,
    from_braid,
    unknot_diagram,
    resolve,
    singularize,
    switch_crossing,
    with_marked_edge,
    is_planar_singular,
    num_components,
)

from .faces import (
    Face,
    FaceSet,
    Quadrant,
    QuadrantPosition,
    compute_faces,
)

from .states import (
    Corner,
    CornerWeights,
    STANDARD_WEIGHTS,
    KauffmanState,
    BigradedTable,
    enumerate_states,
    count_states_oracle,
    generator_table,
    states_frame,
)

from .alexander import (
    AlexanderResult,
    SkeinBranch,
    alexander_state_sum,
    alexander_skein,
    classical_skein_check,
    resolved_state_sum,
    euler_hfb,
    euler_hfa,
    admissible_marked_edges,
    alexander_report,
)

from .pruning import (
    Pruning,
    pruning_graph,
    is_connected,
    equivalence_classes,
)

from .homology import (
    HomologyTable,
    ChainTable,
    hfb_planar,
    chain_table,
)

from .corpus import (
    CORPUS,
    CorpusEntry,
    load_diagram,
    load_corpus,
)

from .verify import (
    random_braid_diagram,
    random_suite,
    run_verification,
)

from .exceptions import (
    KauffmanError,
    DiagramSyntaxError,
    DiagramValidationError,
    NonPlanarDiagramError,
    DegenerateMarkingError,
)

__all__ = [
    # Polynomials
    'HalfLaurent', 'T_HALF', 'T_MINUS_HALF', 'one_minus_T_power', 'invert_T',
    'is_symmetric', 'render', 'parse_half_laurent',
    # Diagrams
    'Diagram', 'Vertex', 'VertexKind', 'ResolutionMode', 'parse_diagram',
    'validate_diagram', 'serialize', 'diagram_to_json', 'from_braid',
    'unknot_diagram', 'resolve', 'singularize', 'switch_crossing',
    'with_marked_edge', 'is_planar_singular', 'num_components',
    # Faces
    'Face', 'FaceSet', 'Quadrant', 'QuadrantPosition', 'compute_faces',
    # States
    'Corner', 'CornerWeights', 'STANDARD_WEIGHTS', 'KauffmanState',
    'BigradedTable', 'enumerate_states', 'count_states_oracle',
    'generator_table', 'states_frame',
    # Alexander
    'AlexanderResult', 'SkeinBranch', 'alexander_state_sum', 'alexander_skein',
    'classical_skein_check', 'resolved_state_sum', 'euler_hfb', 'euler_hfa',
    'admissible_marked_edges', 'alexander_report',
    # Pruning
    'Pruning', 'pruning_graph', 'is_connected', 'equivalence_classes',
    # Homology
    'HomologyTable', 'ChainTable', 'hfb_planar', 'chain_table',
    # Corpus
    'CORPUS', 'CorpusEntry', 'load_diagram', 'load_corpus',
    # Verification
    'random_braid_diagram', 'random_suite', 'run_verification',
    # Errors
    'KauffmanError', 'DiagramSyntaxError', 'DiagramValidationError',
    'NonPlanarDiagramError', 'DegenerateMarkingError',
]
