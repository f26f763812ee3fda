"""
Homology Module

Bigraded HF^- ranks of planar singular diagrams, and chain-level generator
tables for everything else.

On a diagram whose vertices are all singular, every state has M = 2S, so the
differential of the state complex vanishes and the generator table is the
homology. For other diagrams only the generators are available.
"""
from dataclasses import dataclass, field
from typing import Optional, Union

import pandas as pd

from .diagram import Diagram, is_planar_singular
from .exceptions import (
    CertificateViolationError,
    DiagramValidationError,
    NotPlanarSingularError,
)
from .laurent import HalfLaurent, to_json
from .states import STANDARD_WEIGHTS, BigradedTable, CornerWeights, enumerate_states

CHAIN_DISCLAIMER = (
    "Chain-level generator counts, not homology: the diagram has ordinary "
    "crossings, so ranks are upper bounds for HF^- ranks."
)


@dataclass(frozen=True)
class HomologyTable:
    ranks: BigradedTable
    planar_certificate: bool = True

    def euler_characteristic(self) -> HalfLaurent:
        return self.ranks.euler_characteristic()

    def to_json(self) -> dict:
        return {
            'planar': True,
            'ranks': self.ranks.to_json(),
            'euler': to_json(self.euler_characteristic()),
        }

    def to_matrix(self) -> pd.DataFrame:
        return self.ranks.to_matrix()


@dataclass(frozen=True)
class ChainTable:
    generators: BigradedTable
    disclaimer: str = field(default=CHAIN_DISCLAIMER)
    is_homology: bool = False

    def euler_characteristic(self) -> HalfLaurent:
        return self.generators.euler_characteristic()

    def to_json(self) -> dict:
        return {
            'planar': False,
            'ranks': self.generators.to_json(),
            'euler': to_json(self.euler_characteristic()),
            'disclaimer': self.disclaimer,
        }

    def to_matrix(self) -> pd.DataFrame:
        return self.generators.to_matrix()


def hfb_planar(
    d: Diagram,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> HomologyTable:
    """
    HF^- ranks of a planar singular diagram.

    Every state is checked for M = 2S before the table is emitted; the ranks
    then sit on the diagonal Maslov = 2 * Alexander.

    Args:
        d: Connected diagram with only singular vertices
        weights: Local grading table
        workers: Worker processes for state enumeration

    Returns:
        HomologyTable whose signed Euler characteristic is the Alexander polynomial

    Raises:
        NotPlanarSingularError: d has an ordinary crossing
        DiagramValidationError: d is split
        CertificateViolationError: a state has M != 2S

    Example:
        >>> from singular_knots import from_braid
        >>> hfb_planar(from_braid(2, [1, 1, 1], [1, 2, 3])).ranks.alexander_profile()
        [1, 2, 1]
    """
    if not is_planar_singular(d):
        raise NotPlanarSingularError(
            f"Diagram '{d.name}' has ordinary crossings; use chain_table() instead"
        )
    if d.split:
        raise DiagramValidationError(f"Diagram '{d.name}' is split")

    states = enumerate_states(d, weights=weights, workers=workers)
    for state in states:
        if state.maslov != state.two_s:
            raise CertificateViolationError(
                f"State {state.corner_letters()} of '{d.name}' has "
                f"M = {state.maslov} but 2S = {state.two_s}"
            )
    return HomologyTable(BigradedTable.from_states(states))


def chain_table(
    d: Diagram,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> ChainTable:
    """Generator counts per (M, 2S) with the non-homology disclaimer attached."""
    states = enumerate_states(d, weights=weights, workers=workers)
    return ChainTable(BigradedTable.from_states(states))


def homology_or_chain(
    d: Diagram,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
) -> Union[HomologyTable, ChainTable]:
    if is_planar_singular(d):
        return hfb_planar(d, weights, workers)
    return chain_table(d, weights, workers)
