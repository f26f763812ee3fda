#!/usr/bin/env python3
"""
Chapter 3: Prunings of Planar Singular Diagrams

Question: On diagrams whose crossings are all singular, is the pruning of
every Kauffman state connected, and does each pruning determine its state?

Methodology:
1. Draw seeded random braid words and singularize every crossing
2. Enumerate states and build each state's pruning
3. Check weak connectivity, in-degree 1 and out-degree <= 2
4. Group states by pruning and record class sizes

Usage:
    python analysis.py
"""
import sys
from pathlib import Path

# Add project root to path
PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns
from tqdm import tqdm

from singular_knots import enumerate_states, equivalence_classes, from_braid, random_suite
from singular_knots.constants import DEFAULT_MAX_CROSSINGS, DEFAULT_SEED
from singular_knots.pruning import pruning_frame

# Output directories
FIGURES_DIR = Path(__file__).parent / "figures"
RESULTS_DIR = Path(__file__).parent / "results"
FIGURES_DIR.mkdir(exist_ok=True)
RESULTS_DIR.mkdir(exist_ok=True)

# Plot style
plt.style.use('seaborn-v0_8-whitegrid')
sns.set_palette("husl")

NUM_DIAGRAMS = 60


def planar_suite():
    """Random braid closures with every crossing singular."""
    planar = []
    for d, recipe in random_suite(DEFAULT_SEED, NUM_DIAGRAMS, DEFAULT_MAX_CROSSINGS):
        word = recipe['word']
        mask = range(1, len(word) + 1)
        planar.append((from_braid(recipe['strands'], word, mask, name=d.name), recipe))
    return planar


def check_prunings():
    print("=" * 60)
    print("  Chapter 3: Prunings of Planar Singular Diagrams")
    print("=" * 60)

    print(f"\n[1] Building {NUM_DIAGRAMS} planar singular diagrams...")
    suite = planar_suite()

    print("\n[2] Checking prunings...")
    per_diagram = []
    per_state = []
    for d, recipe in tqdm(suite, desc="Diagrams"):
        states = enumerate_states(d)
        frame = pruning_frame(d, states)
        frame.insert(0, 'diagram', d.name)
        per_state.append(frame)

        classes = equivalence_classes(d, states)
        per_diagram.append({
            'diagram': d.name,
            'strands': recipe['strands'],
            'vertices': d.num_vertices,
            'states': len(states),
            'connected': int(frame['connected'].sum()),
            'degrees_ok': bool(frame['degrees_ok'].all()),
            'classes': len(classes),
            'max_class_size': max((len(c) for c in classes), default=0),
        })

    diagrams = pd.DataFrame(per_diagram)
    states_df = pd.concat(per_state, ignore_index=True)
    diagrams['all_connected'] = diagrams['connected'] == diagrams['states']
    diagrams['singleton_classes'] = diagrams['max_class_size'] <= 1

    print(f"  States checked: {len(states_df)}")
    print(f"  Connected prunings: {int(states_df['connected'].sum())} / {len(states_df)}")
    print(f"  Degree check: {int(states_df['degrees_ok'].sum())} / {len(states_df)}")
    print(f"  Diagrams with singleton classes: "
          f"{int(diagrams['singleton_classes'].sum())} / {len(diagrams)}")
    return diagrams, states_df


def create_visualizations(diagrams: pd.DataFrame, states_df: pd.DataFrame):
    print("\n[3] Creating visualizations...")

    # Figure 1: out-degree profile of pruning vertices
    fig, ax = plt.subplots(figsize=(8, 5))
    counts = states_df['max_out_degree'].value_counts().sort_index()
    ax.bar(counts.index.astype(str), counts.values, color='#1f77b4',
           edgecolor='black', linewidth=0.5)
    ax.set_xlabel('Largest out-degree in the pruning', fontsize=12)
    ax.set_ylabel('States', fontsize=12)
    ax.set_title('Out-degree of pruning vertices (in-degree is always 1)', fontsize=13)
    plt.tight_layout()
    plt.savefig(FIGURES_DIR / 'fig01_out_degree.png', dpi=150)
    plt.close()
    print("  Saved: fig01_out_degree.png")

    # Figure 2: states vs equivalence classes
    fig, ax = plt.subplots(figsize=(8, 6))
    sns.scatterplot(data=diagrams, x='states', y='classes', hue='vertices',
                    palette='viridis', s=60, ax=ax)
    top = max(diagrams['states'].max(), 1)
    ax.plot([0, top], [0, top], '--', color='gray', linewidth=1, label='classes = states')
    ax.set_xlabel('States', fontsize=12)
    ax.set_ylabel('Pruning classes', fontsize=12)
    ax.set_title('Each pruning determines its state', fontsize=13)
    ax.legend(fontsize=9)
    plt.tight_layout()
    plt.savefig(FIGURES_DIR / 'fig02_classes_vs_states.png', dpi=150)
    plt.close()
    print("  Saved: fig02_classes_vs_states.png")


def save_results(diagrams: pd.DataFrame, states_df: pd.DataFrame):
    print("\n[4] Saving results...")
    diagrams.to_csv(RESULTS_DIR / 'pruning_by_diagram.csv', index=False)
    print("  Saved: pruning_by_diagram.csv")
    states_df.to_csv(RESULTS_DIR / 'pruning_by_state.csv', index=False)
    print("  Saved: pruning_by_state.csv")


def main():
    diagrams, states_df = check_prunings()
    create_visualizations(diagrams, states_df)
    save_results(diagrams, states_df)

    passed = diagrams['all_connected'].all() and diagrams['singleton_classes'].all() \
        and diagrams['degrees_ok'].all()
    print("\n" + "=" * 60)
    print(f"  [{'DONE' if passed else 'FAIL'}] Analysis complete!")
    print("=" * 60)
    print(f"  Figures: {FIGURES_DIR}")
    print(f"  Results: {RESULTS_DIR}")
    if not passed:
        sys.exit(1)


if __name__ == "__main__":
    main()
