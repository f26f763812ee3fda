"""
Alexander Polynomial Module

Two independent routes to the Alexander polynomial of a singular diagram:

- the generalized Kauffman state sum, and
- the singular skein recursion, which removes singular vertices one at a
  time until only ordinary diagrams remain.

Also the Euler characteristics of the two Floer homologies and a few
classical identities used as cross-checks.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from .diagram import (
    Diagram,
    ResolutionMode,
    VertexKind,
    resolve,
    switch_crossing,
    with_marked_edge,
    with_vertex_kind,
)
from .exceptions import (
    DiagramValidationError,
    NoSingularVertexError,
    RecursionGuardError,
)
from .faces import Quadrant, QuadrantPosition, compute_faces
from .laurent import (
    T_HALF,
    T_MINUS_HALF,
    HalfLaurent,
    is_symmetric,
    one_minus_T_power,
    render,
    to_json,
)
from .states import STANDARD_WEIGHTS, Corner, CornerWeights, enumerate_states, format_half


class SkeinBranch(Enum):
    PLUS = 'plus'
    MINUS = 'minus'


# Method names used in reports and on the command line
STATE_SUM = 'state-sum'
SKEIN_PLUS = 'skein-plus'
SKEIN_MINUS = 'skein-minus'


@dataclass(frozen=True)
class AlexanderResult:
    delta: HalfLaurent
    method: str
    ell: Optional[int] = None

    def __str__(self) -> str:
        return render(self.delta)


def alexander_state_sum(
    d: Diagram,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> HalfLaurent:
    """
    Alexander polynomial as the sum over states of (-1)^M * T^S.

    Split diagrams evaluate to 0 without tracing faces.

    Example:
        >>> from singular_knots import from_braid
        >>> str(alexander_state_sum(from_braid(2, [1, 1, 1])))
        'T - 1 + T^-1'
    """
    if d.split:
        return HalfLaurent.zero()
    if d.is_unknot:
        return HalfLaurent.one()
    total = HalfLaurent.zero()
    for state in enumerate_states(d, weights=weights, workers=workers):
        total = total + state.weight()
    return total


def _skein(d: Diagram, branch: SkeinBranch, weights: CornerWeights,
           depth: int, limit: int) -> HalfLaurent:
    if depth > limit:
        raise RecursionGuardError(depth, limit)
    if d.split:
        return HalfLaurent.zero()
    if d.is_unknot:
        return HalfLaurent.one()
    if not d.singular_vertices:
        return alexander_state_sum(d, weights)

    v = d.singular_vertices[0]
    if branch is SkeinBranch.PLUS:
        crossed, unit = resolve(d, v, ResolutionMode.PLUS), T_HALF
    else:
        crossed, unit = resolve(d, v, ResolutionMode.MINUS), T_MINUS_HALF
    smoothed = resolve(d, v, ResolutionMode.ORIENTED)

    return (_skein(crossed, branch, weights, depth + 1, limit)
            - unit * _skein(smoothed, branch, weights, depth + 1, limit))


def alexander_skein(
    d: Diagram,
    branch: SkeinBranch = SkeinBranch.PLUS,
    weights: CornerWeights = STANDARD_WEIGHTS,
) -> HalfLaurent:
    """
    Alexander polynomial by the singular skein recursion.

    PLUS uses Delta(K) = Delta(K+) - T^(1/2) Delta(K0), MINUS uses
    Delta(K) = Delta(K-) - T^(-1/2) Delta(K0). The lowest-id singular vertex
    is resolved first; nonsingular diagrams fall back to the state sum.

    Args:
        d: Valid diagram (split diagrams evaluate to 0)
        branch: Which skein relation to recurse with
        weights: Weights for the nonsingular base case

    Returns:
        The polynomial, equal to alexander_state_sum(d)

    Raises:
        RecursionGuardError: recursion deeper than the number of singular vertices
    """
    return _skein(d, branch, weights, 0, d.num_singular)


def compute_alexander(
    d: Diagram,
    method: str = STATE_SUM,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> AlexanderResult:
    ell = d.num_singular - 1 if d.num_singular else None
    if method == STATE_SUM:
        delta = alexander_state_sum(d, weights, workers)
    elif method == SKEIN_PLUS:
        delta = alexander_skein(d, SkeinBranch.PLUS, weights)
    elif method == SKEIN_MINUS:
        delta = alexander_skein(d, SkeinBranch.MINUS, weights)
    else:
        raise ValueError(f"Unknown method: {method}")
    return AlexanderResult(delta, method, ell)


def compare_methods(
    d: Diagram,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> Dict[str, AlexanderResult]:
    """Evaluate the state sum and both skein branches."""
    return {
        method: compute_alexander(d, method, weights, workers)
        for method in (STATE_SUM, SKEIN_PLUS, SKEIN_MINUS)
    }


def methods_agree(results: Dict[str, AlexanderResult]) -> bool:
    values = {r.delta for r in results.values()}
    return len(values) == 1


def classical_skein_check(
    d: Diagram,
    v: int,
    weights: CornerWeights = STANDARD_WEIGHTS,
) -> bool:
    """
    Check Delta(K+) - Delta(K-) = (T^(1/2) - T^(-1/2)) Delta(K0) at vertex v.

    At a singular vertex K+/K- are its two crossing resolutions; at an
    ordinary crossing one of them is d itself and the other is the switched
    crossing.
    """
    if not 0 <= v < d.num_vertices:
        raise DiagramValidationError(
            f"Vertex id {v} out of range (diagram has {d.num_vertices} vertices)"
        )
    kind = d.vertices[v].kind
    if kind.is_singular:
        plus = resolve(d, v, ResolutionMode.PLUS)
        minus = resolve(d, v, ResolutionMode.MINUS)
    elif kind is VertexKind.POSITIVE:
        plus, minus = d, switch_crossing(d, v)
    else:
        plus, minus = switch_crossing(d, v), d
    smoothed = resolve(d, v, ResolutionMode.ORIENTED)

    lhs = alexander_state_sum(plus, weights) - alexander_state_sum(minus, weights)
    rhs = (T_HALF - T_MINUS_HALF) * alexander_state_sum(smoothed, weights)
    return lhs == rhs


def resolved_state_sum(
    d: Diagram,
    v: int,
    weights: CornerWeights = STANDARD_WEIGHTS,
) -> HalfLaurent:
    """
    State sum with v read as a resolved point.

    Vertex v is treated as an ordinary crossing whose local contribution is
    1 at the B and D corners and 0 at A and C; every other vertex keeps its
    usual weights. The result equals the Alexander polynomial of the oriented
    resolution at v.
    """
    if d.split:
        return HalfLaurent.zero()
    as_crossing = with_vertex_kind(d, v, VertexKind.POSITIVE)
    lookup = weights.lookup()

    total = HalfLaurent.zero()
    for state in enumerate_states(as_crossing, weights=weights):
        corner = state.assignment[v]
        if corner not in (Corner.B, Corner.D):
            continue
        two_s, maslov = lookup[(VertexKind.POSITIVE.value, corner.value)]
        total = total + HalfLaurent.monomial(
            state.two_s - two_s, -1 if (state.maslov - maslov) % 2 else 1
        )
    return total


def euler_hfb(d: Diagram, weights: CornerWeights = STANDARD_WEIGHTS,
              workers: Optional[int] = 1) -> HalfLaurent:
    """Graded Euler characteristic of HF^-: the Alexander polynomial itself."""
    return alexander_state_sum(d, weights, workers)


def euler_hfa(d: Diagram, weights: CornerWeights = STANDARD_WEIGHTS,
              workers: Optional[int] = 1) -> HalfLaurent:
    """
    Graded Euler characteristic of HFa: (1 - T)^ell * Delta(T).

    ell is the number of singular vertices minus one.

    Raises:
        NoSingularVertexError: d has only ordinary crossings

    Example:
        >>> from singular_knots import from_braid
        >>> str(euler_hfa(from_braid(2, [1, 1], [1, 2])))
        'T^(3/2) - T^(-1/2)'
    """
    if not d.num_singular:
        raise NoSingularVertexError(
            f"Diagram '{d.name}' has no singular vertex; chi(HFa) needs at least one"
        )
    ell = d.num_singular - 1
    return one_minus_T_power(ell) * alexander_state_sum(d, weights, workers)


def euler_hfa_table(chi: HalfLaurent) -> List[dict]:
    """Coefficients of chi(HFa) by Alexander grading, highest first."""
    return [{'alexander': format_half(k), 'coefficient': c} for k, c in reversed(chi.items())]


# ----------------------------------------------------------------------
# Marked edge
# ----------------------------------------------------------------------

def admissible_marked_edges(d: Diagram) -> List[int]:
    """Edges whose two sides lie in different faces (every edge of a knotted diagram)."""
    if d.split:
        return []
    if d.is_unknot:
        return [d.marked_edge]
    faces = compute_faces(d)
    face_of = faces.face_of()
    admissible = []
    for label, ((v, s), _) in sorted(d.edge_ends.items()):
        left = face_of[Quadrant(v, QuadrantPosition(s))]
        right = face_of[Quadrant(v, QuadrantPosition((s - 1) % 4))]
        if left != right:
            admissible.append(label)
    return admissible


def marked_edge_values(d: Diagram, weights: CornerWeights = STANDARD_WEIGHTS) -> Dict[int, HalfLaurent]:
    """State sum for every admissible choice of marked edge."""
    return {
        q: alexander_state_sum(with_marked_edge(d, q), weights)
        for q in admissible_marked_edges(d)
    }


def is_q_independent(d: Diagram, weights: CornerWeights = STANDARD_WEIGHTS) -> bool:
    return len(set(marked_edge_values(d, weights).values())) <= 1


# ----------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------

def alexander_report(
    d: Diagram,
    methods: str = 'both',
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> dict:
    """
    JSON-ready summary of the Alexander computation.

    Args:
        d: Valid diagram
        methods: 'state-sum', 'skein' (both branches) or 'both'
        weights: Local grading table
        workers: Worker processes for state enumeration

    Returns:
        dict with delta, ell, chi_hfa (None without singular vertices),
        methods_agree, symmetric and one rendered value per method
    """
    if methods == 'state-sum':
        names = [STATE_SUM]
    elif methods == 'skein':
        names = [SKEIN_PLUS, SKEIN_MINUS]
    elif methods == 'both':
        names = [STATE_SUM, SKEIN_PLUS, SKEIN_MINUS]
    else:
        raise ValueError(f"Unknown method selection: {methods}")

    results = {name: compute_alexander(d, name, weights, workers) for name in names}
    delta = results[names[0]].delta
    ell = d.num_singular - 1 if d.num_singular else None
    chi = one_minus_T_power(ell) * delta if ell is not None else None

    return {
        'name': d.name,
        'delta': to_json(delta),
        'ell': ell,
        'chi_hfa': to_json(chi) if chi is not None else None,
        'methods_agree': methods_agree(results),
        'symmetric': is_symmetric(delta),
        'methods': {name: render(r.delta) for name, r in results.items()},
    }
