"""
Verification Module

Aggregated invariant suite over the corpus and seeded random braid diagrams.

Each diagram runs the same list of checks; a check returns True, False or
None (not applicable, e.g. pruning lemmas on a non-planar diagram).
"""
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from .alexander import (
    alexander_state_sum,
    classical_skein_check,
    compare_methods,
    is_q_independent,
    methods_agree,
    resolved_state_sum,
)
from .constants import (
    DEFAULT_COUNT,
    DEFAULT_MAX_CROSSINGS,
    DEFAULT_SEED,
    MAX_ORACLE_VERTICES,
    MAX_RANDOM_STRANDS,
    PLANAR_SUITE_STRIDE,
    SINGULAR_PROBABILITY,
    worker_count,
)
from .corpus import CORPUS, CorpusEntry
from .diagram import Diagram, ResolutionMode, from_braid, is_planar_singular, resolve
from .exceptions import CertificateViolationError, InvalidBraidError, SplitClosureError
from .homology import hfb_planar
from .laurent import one_minus_T_power, render
from .pruning import pruning_report
from .states import STANDARD_WEIGHTS, BigradedTable, CornerWeights, count_states_oracle, enumerate_states

# Report columns, in display order
CHECKS = (
    'method_agreement',
    'q_independence',
    'classical_skein',
    'resolved_contribution',
    'oracle',
    'chain_euler',
    'pruning_lemmas',
    'planar_diagonal',
    'golden',
)


def random_braid_diagram(
    rng: np.random.Generator,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    name: str = '',
    singular_probability: float = SINGULAR_PROBABILITY,
) -> Tuple[Diagram, dict]:
    """
    Draw a connected singular braid closure.

    Strand count is 2..4 (never more than max_crossings + 1), letters have
    random generator and sign, and each crossing is singularized with
    probability singular_probability (1.0 gives a planar singular diagram).
    Split closures are redrawn.

    Returns:
        (diagram, recipe) where recipe holds strands, word and mask

    Raises:
        InvalidBraidError: max_crossings < 1
    """
    if max_crossings < 1:
        raise InvalidBraidError(f"max_crossings must be at least 1, got {max_crossings}")
    top = min(MAX_RANDOM_STRANDS, max_crossings + 1)
    while True:
        strands = int(rng.integers(2, top + 1))
        length = int(rng.integers(strands - 1, max_crossings + 1))
        generators = rng.integers(1, strands, size=length)
        signs = rng.choice([-1, 1], size=length)
        word = [int(g * s) for g, s in zip(generators, signs)]
        mask = [int(p) + 1 for p in np.flatnonzero(rng.random(length) < singular_probability)]
        try:
            d = from_braid(strands, word, mask, name=name)
        except SplitClosureError:
            continue
        return d, {'strands': strands, 'word': word, 'mask': mask}


def random_suite(
    seed: int = DEFAULT_SEED,
    count: int = DEFAULT_COUNT,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
) -> List[Tuple[Diagram, dict]]:
    """
    Deterministic list of random diagrams named rand-000, rand-001, ...

    Every PLANAR_SUITE_STRIDE-th diagram (rand-003, rand-007, ...) has all
    crossings singular.
    """
    rng = np.random.default_rng(seed)
    suite = []
    for i in range(count):
        planar = i % PLANAR_SUITE_STRIDE == PLANAR_SUITE_STRIDE - 1
        p = 1.0 if planar else SINGULAR_PROBABILITY
        suite.append(random_braid_diagram(rng, max_crossings, name=f"rand-{i:03d}",
                                          singular_probability=p))
    return suite


def _golden(d: Diagram, entry: CorpusEntry, delta, weights: CornerWeights) -> bool:
    ok = True
    if entry.delta is not None:
        ok &= render(delta) == entry.delta
    if entry.chi_hfa is not None:
        ok &= render(one_minus_T_power(d.num_singular - 1) * delta) == entry.chi_hfa
    if entry.states is not None:
        ok &= len(enumerate_states(d, weights=weights)) == entry.states
    return bool(ok)


def check_diagram(
    d: Diagram,
    weights: CornerWeights = STANDARD_WEIGHTS,
    entry: Optional[CorpusEntry] = None,
) -> Dict[str, Optional[bool]]:
    """
    Run every check on one diagram.

    Args:
        d: Connected diagram
        weights: Local grading table (override to build negative controls)
        entry: Corpus entry whose golden values should be compared

    Returns:
        Mapping check name -> True / False / None (not applicable)
    """
    results = compare_methods(d, weights)
    delta = results['state-sum'].delta
    states = enumerate_states(d, weights=weights)
    planar = is_planar_singular(d)

    row: Dict[str, Optional[bool]] = {
        'method_agreement': methods_agree(results),
        'q_independence': is_q_independent(d, weights),
        'classical_skein': all(classical_skein_check(d, v, weights) for v in range(d.num_vertices)),
        'resolved_contribution': all(
            resolved_state_sum(d, v, weights)
            == alexander_state_sum(resolve(d, v, ResolutionMode.ORIENTED), weights)
            for v in range(d.num_vertices)
        ),
        'oracle': (len(states) == count_states_oracle(d)
                   if d.num_vertices <= MAX_ORACLE_VERTICES else None),
        'chain_euler': BigradedTable.from_states(states).euler_characteristic() == delta,
        'pruning_lemmas': pruning_report(d)['passed'] if planar else None,
        'planar_diagonal': None,
        'golden': _golden(d, entry, delta, weights) if entry is not None else None,
    }
    if planar:
        try:
            row['planar_diagonal'] = hfb_planar(d, weights).ranks.is_diagonal()
        except CertificateViolationError:
            row['planar_diagonal'] = False
    return row


def _check_task(args) -> Dict[str, Optional[bool]]:
    d, weights, entry = args
    return check_diagram(d, weights, entry)


@dataclass(frozen=True)
class VerificationReport:
    frame: pd.DataFrame

    @property
    def passed(self) -> bool:
        checks = self.frame[list(CHECKS)]
        return not (checks == False).any().any()  # noqa: E712

    def failures(self) -> pd.DataFrame:
        checks = self.frame[list(CHECKS)]
        return self.frame[(checks == False).any(axis=1)]  # noqa: E712

    def summary(self) -> pd.DataFrame:
        """Pass/fail/skip counts per check."""
        rows = []
        for check in CHECKS:
            col = self.frame[check]
            rows.append({
                'check': check,
                'passed': int((col == True).sum()),  # noqa: E712
                'failed': int((col == False).sum()),  # noqa: E712
                'skipped': int(col.isna().sum()),
            })
        return pd.DataFrame(rows, columns=['check', 'passed', 'failed', 'skipped'])

    def to_json(self) -> dict:
        return {
            'passed': self.passed,
            'summary': self.summary().to_dict(orient='records'),
            'failures': self.failures()['diagram'].tolist(),
        }


def run_verification(
    seed: int = DEFAULT_SEED,
    count: int = DEFAULT_COUNT,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    include_corpus: bool = True,
    weights: CornerWeights = STANDARD_WEIGHTS,
    workers: Optional[int] = 1,
    verbose: bool = False,
) -> VerificationReport:
    """
    Run the invariant suite on the corpus and a seeded random suite.

    Args:
        seed: Random suite seed
        count: Number of random diagrams
        max_crossings: Crossing cap for random diagrams
        include_corpus: Also check (and golden-compare) the built-in corpus
        weights: Local grading table
        workers: Worker processes (capped by KAUFFMAN_THREADS)
        verbose: Progress bar and [INFO] lines on stderr

    Returns:
        VerificationReport, one row per diagram in a fixed order

    Example:
        >>> report = run_verification(seed=7, count=5, max_crossings=4)
        >>> report.passed
        True
    """
    tasks = []
    sources = []
    if include_corpus:
        for entry in CORPUS.values():
            tasks.append((entry.diagram(), weights, entry))
            sources.append('corpus')
    for d, recipe in random_suite(seed, count, max_crossings):
        tasks.append((d, weights, None))
        sources.append(f"braid {recipe['strands']} {recipe['word']} sing {recipe['mask']}")

    if verbose:
        print(f"[INFO] Checking {len(tasks)} diagrams (seed={seed}, "
              f"max_crossings={max_crossings})", file=sys.stderr)

    n_workers = worker_count(workers)
    progress = dict(total=len(tasks), desc="Verify", disable=not verbose, file=sys.stderr)
    if n_workers > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            rows = list(tqdm(pool.map(_check_task, tasks), **progress))
    else:
        rows = [_check_task(t) for t in tqdm(tasks, **progress)]

    records = []
    for (d, _, _), source, row in zip(tasks, sources, rows):
        records.append({
            'diagram': d.name,
            'vertices': d.num_vertices,
            'singular': d.num_singular,
            'source': source,
            **row,
        })
    frame = pd.DataFrame(records, columns=['diagram', 'vertices', 'singular', 'source', *CHECKS])
    report = VerificationReport(frame)

    if verbose:
        status = 'PASS' if report.passed else 'FAIL'
        print(f"[{status}] {len(report.failures())} of {len(frame)} diagrams failed", file=sys.stderr)
    return report
