#!/usr/bin/env python3
"""
Chapter 2: Do the State Sum and the Skein Recursion Agree?

Question: On random singular braid closures, does the generalized Kauffman
state sum give the same Alexander polynomial as both branches of the
singular skein recursion, and how do the two methods scale?

Methodology:
1. Draw a seeded random suite of braid closures (2-4 strands, up to 8
   crossings, each crossing singular with probability 1/2)
2. Evaluate Delta by state sum, plus-branch skein and minus-branch skein
3. Compare state counts with the brute-force matching oracle
4. Record runtimes and agreement rates by crossing number

Usage:
    python analysis.py
"""
import sys
import time
from pathlib import Path

# Add project root to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from tqdm import tqdm

from singular_knots import (
    SkeinBranch,
    alexander_skein,
    alexander_state_sum,
    count_states_oracle,
    enumerate_states,
    random_suite,
    render,
)
from singular_knots.constants import DEFAULT_COUNT, DEFAULT_MAX_CROSSINGS, DEFAULT_SEED

# Output directories
FIGURES_DIR = Path(__file__).parent / "figures"
RESULTS_DIR = Path(__file__).parent / "results"
FIGURES_DIR.mkdir(exist_ok=True)
RESULTS_DIR.mkdir(exist_ok=True)

# Plot style
plt.style.use('seaborn-v0_8-whitegrid')
sns.set_palette("husl")


def timed(func, *args):
    start = time.perf_counter()
    value = func(*args)
    return value, time.perf_counter() - start


def survey_random_diagrams():
    """Evaluate every method on the seeded random suite."""
    print("=" * 60)
    print("  Chapter 2: State Sum vs Skein Recursion")
    print("=" * 60)

    print(f"\n[1] Drawing {DEFAULT_COUNT} random diagrams (seed={DEFAULT_SEED})...")
    suite = random_suite(DEFAULT_SEED, DEFAULT_COUNT, DEFAULT_MAX_CROSSINGS)

    print("\n[2] Evaluating methods...")
    rows = []
    for d, recipe in tqdm(suite, desc="Diagrams"):
        state_sum, t_sum = timed(alexander_state_sum, d)
        plus, t_plus = timed(alexander_skein, d, SkeinBranch.PLUS)
        minus, t_minus = timed(alexander_skein, d, SkeinBranch.MINUS)
        states = len(enumerate_states(d))
        rows.append({
            'diagram': d.name,
            'strands': recipe['strands'],
            'crossings': d.num_vertices,
            'singular': d.num_singular,
            'states': states,
            'oracle': count_states_oracle(d),
            'delta': render(state_sum),
            'plus_agrees': plus == state_sum,
            'minus_agrees': minus == state_sum,
            'time_state_sum': t_sum,
            'time_skein_plus': t_plus,
            'time_skein_minus': t_minus,
        })

    df = pd.DataFrame(rows)
    df['oracle_agrees'] = df['states'] == df['oracle']
    df['all_agree'] = df['plus_agrees'] & df['minus_agrees'] & df['oracle_agrees']
    print(f"  Diagrams: {len(df)}")
    print(f"  Full agreement: {df['all_agree'].sum()} / {len(df)}")
    return df


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    print("\n[3] Agreement and runtime by crossing number...")
    summary = df.groupby('crossings').agg(
        diagrams=('diagram', 'count'),
        mean_states=('states', 'mean'),
        max_states=('states', 'max'),
        agreement_rate=('all_agree', 'mean'),
        median_state_sum_ms=('time_state_sum', lambda s: s.median() * 1000),
        median_skein_ms=('time_skein_plus', lambda s: s.median() * 1000),
    ).reset_index()
    print(summary.to_string(index=False, float_format=lambda x: f"{x:.2f}"))
    return summary


def create_visualizations(df: pd.DataFrame):
    print("\n[4] Creating visualizations...")

    # Figure 1: state counts against crossings, colored by singular count
    fig, ax = plt.subplots(figsize=(10, 6))
    sns.stripplot(data=df, x='crossings', y='states', hue='singular',
                  palette='viridis', jitter=0.25, size=6, ax=ax)
    ax.set_xlabel('Crossings (ordinary + singular)', fontsize=12)
    ax.set_ylabel('Generalized Kauffman states', fontsize=12)
    ax.set_title('State count by diagram size', fontsize=14)
    ax.legend(title='Singular vertices', fontsize=9)
    plt.tight_layout()
    plt.savefig(FIGURES_DIR / 'fig01_states_by_crossings.png', dpi=150)
    plt.close()
    print("  Saved: fig01_states_by_crossings.png")

    # Figure 2: runtime per method
    times = df.melt(
        id_vars=['crossings'],
        value_vars=['time_state_sum', 'time_skein_plus', 'time_skein_minus'],
        var_name='method', value_name='seconds',
    )
    times['method'] = times['method'].str.replace('time_', '').str.replace('_', ' ')
    times['ms'] = times['seconds'] * 1000
    fig, ax = plt.subplots(figsize=(10, 6))
    sns.boxplot(data=times, x='crossings', y='ms', hue='method', ax=ax)
    ax.set_yscale('log')
    ax.set_xlabel('Crossings', fontsize=12)
    ax.set_ylabel('Runtime (ms, log scale)', fontsize=12)
    ax.set_title('Runtime per method', fontsize=14)
    plt.tight_layout()
    plt.savefig(FIGURES_DIR / 'fig02_runtime_by_method.png', dpi=150)
    plt.close()
    print("  Saved: fig02_runtime_by_method.png")


def save_results(df: pd.DataFrame, summary: pd.DataFrame):
    print("\n[5] Saving results...")
    df.to_csv(RESULTS_DIR / 'per_diagram.csv', index=False)
    print("  Saved: per_diagram.csv")
    summary.to_csv(RESULTS_DIR / 'agreement_by_crossings.csv', index=False)
    print("  Saved: agreement_by_crossings.csv")


def main():
    df = survey_random_diagrams()
    summary = summarize(df)
    create_visualizations(df)
    save_results(df, summary)

    print("\n" + "=" * 60)
    status = 'DONE' if df['all_agree'].all() else 'FAIL'
    print(f"  [{status}] Analysis complete!")
    print("=" * 60)
    print(f"  Figures: {FIGURES_DIR}")
    print(f"  Results: {RESULTS_DIR}")
    if status == 'FAIL':
        sys.exit(1)


if __name__ == "__main__":
    main()
