#!/usr/bin/env python3
"""
Chapter 1: The Singularized (3,3) Torus Link

Question: For the closure of (sigma1 sigma2)^3 with all six crossings made
singular, what are the Alexander polynomial, the Euler characteristic of HFa
and the bigraded HF^- ranks?

Expected:
- Delta(T) = T^2 + 5T + 9 + 5T^-1 + T^-2 by state sum and by both skein branches
- chi(HFa) = (1 - T)^5 * Delta(T) = -T^7 + 6T^5 - 21T^3 + 21T^2 - 6 + T^-2
- HF^- ranks 1, 5, 9, 5, 1 on the diagonal Maslov = 2 * Alexander

Methodology:
1. Build the diagram from its braid word and trace faces
2. Enumerate all generalized Kauffman states
3. Compute Delta by three methods
4. Multiply by (1 - T)^5 for chi(HFa)
5. Tabulate planar HF^- ranks and draw the bigraded table

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

from singular_knots import (
    compute_faces,
    enumerate_states,
    euler_hfa,
    hfb_planar,
    load_diagram,
    render,
    states_frame,
)
from singular_knots.alexander import compare_methods, euler_hfa_table, methods_agree
from singular_knots.corpus import get_entry

# Output directories
FIGURES_DIR = Path(__file__).parent / "figures"
RESULTS_DIR = Path(__file__).parent / "results"
FIGURES_DIR.mkdir(exist_ok=True)
RESULTS_DIR.mkdir(exist_ok=True)

# Plot style
plt.style.use('seaborn-v0_8-whitegrid')
sns.set_palette("husl")

ENTRY = 'torus33sing'


def describe_diagram():
    """Load the diagram and report its size."""
    print("=" * 60)
    print("  Chapter 1: The Singularized (3,3) Torus Link")
    print("=" * 60)

    print("\n[1] Building diagram...")
    d = load_diagram(f"corpus:{ENTRY}")
    faces = compute_faces(d)
    print(f"  Vertices: {d.num_vertices} (singular: {d.num_singular})")
    print(f"  Edges: {d.num_edges}")
    print(f"  Faces: {faces.num_faces} (X = {faces.region_x}, Y = {faces.region_y})")
    return d


def list_states(d):
    print("\n[2] Enumerating Kauffman states...")
    states = enumerate_states(d)
    frame = states_frame(d, states)
    print(f"  States: {len(states)}")
    print(frame['S'].value_counts().sort_index().to_string())
    return states, frame


def compute_polynomials(d):
    """Delta by every method, then chi(HFa)."""
    print("\n[3] Alexander polynomial...")
    results = compare_methods(d)
    for name, result in results.items():
        print(f"  {name:<12} {render(result.delta)}")
    agree = methods_agree(results)
    print(f"  Methods agree: {agree}")

    print("\n[4] Euler characteristic of HFa...")
    chi = euler_hfa(d)
    print(f"  ell = {d.num_singular - 1}")
    print(f"  chi(HFa) = {render(chi)}")

    entry = get_entry(ENTRY)
    delta = results['state-sum'].delta
    golden = pd.DataFrame([
        {'quantity': 'delta', 'computed': render(delta), 'expected': entry.delta},
        {'quantity': 'chi_hfa', 'computed': render(chi), 'expected': entry.chi_hfa},
    ])
    golden['match'] = golden['computed'] == golden['expected']
    return results, chi, golden


def tabulate_homology(d):
    print("\n[5] Planar HF^- ranks...")
    table = hfb_planar(d)
    matrix = table.to_matrix()
    print(matrix.to_string())
    print(f"  Profile: {table.ranks.alexander_profile()}")
    print(f"  Diagonal support: {table.ranks.is_diagonal()}")
    return table, matrix


def create_visualizations(matrix: pd.DataFrame, chi):
    print("\n[6] Creating visualizations...")

    # Figure 1: bigraded rank table
    fig, ax = plt.subplots(figsize=(7, 6))
    sns.heatmap(matrix, annot=True, fmt='d', cmap='Blues', cbar=False,
                linewidths=0.5, linecolor='gray', ax=ax)
    ax.set_xlabel('Alexander grading s', fontsize=12)
    ax.set_ylabel('Maslov grading d', fontsize=12)
    ax.set_title('HF$^-$ ranks of the singularized (3,3) torus link', fontsize=13)
    plt.tight_layout()
    plt.savefig(FIGURES_DIR / 'fig01_bigraded_ranks.png', dpi=150)
    plt.close()
    print("  Saved: fig01_bigraded_ranks.png")

    # Figure 2: chi(HFa) coefficients
    coeffs = pd.DataFrame(euler_hfa_table(chi)).iloc[::-1]
    fig, ax = plt.subplots(figsize=(9, 5))
    colors = ['#2ca02c' if c > 0 else '#d62728' for c in coeffs['coefficient']]
    ax.bar(coeffs['alexander'], coeffs['coefficient'], color=colors, edgecolor='black', linewidth=0.5)
    ax.axhline(0, color='black', linewidth=0.8)
    for x, y in zip(coeffs['alexander'], coeffs['coefficient']):
        ax.text(x, y + (0.8 if y > 0 else -1.8), str(y), ha='center', fontsize=10)
    ax.set_xlabel('Alexander grading', fontsize=12)
    ax.set_ylabel('Coefficient', fontsize=12)
    ax.set_title('Euler characteristic of HFa by Alexander grading', fontsize=13)
    plt.tight_layout()
    plt.savefig(FIGURES_DIR / 'fig02_chi_hfa.png', dpi=150)
    plt.close()
    print("  Saved: fig02_chi_hfa.png")


def save_results(states_df, results, chi, golden, table):
    print("\n[7] Saving results...")

    states_df.to_csv(RESULTS_DIR / 'states.csv', index=False)
    print("  Saved: states.csv")

    methods = pd.DataFrame([
        {'method': name, 'delta': render(r.delta)} for name, r in results.items()
    ])
    methods.to_csv(RESULTS_DIR / 'alexander_methods.csv', index=False)
    print("  Saved: alexander_methods.csv")

    pd.DataFrame(euler_hfa_table(chi)).to_csv(RESULTS_DIR / 'chi_hfa.csv', index=False)
    print("  Saved: chi_hfa.csv")

    table.ranks.to_frame().to_csv(RESULTS_DIR / 'homology_ranks.csv', index=False)
    print("  Saved: homology_ranks.csv")

    golden.to_csv(RESULTS_DIR / 'golden_comparison.csv', index=False)
    print("  Saved: golden_comparison.csv")


def main():
    d = describe_diagram()
    states, states_df = list_states(d)
    results, chi, golden = compute_polynomials(d)
    table, matrix = tabulate_homology(d)

    create_visualizations(matrix, chi)
    save_results(states_df, results, chi, golden, table)

    print("\n" + "=" * 60)
    status = 'DONE' if golden['match'].all() else 'FAIL'
    print(f"  [{status}] Analysis complete!")
    print("=" * 60)
    print(f"  Figures: {FIGURES_DIR}")
    print(f"  Results: {RESULTS_DIR}")
    if status == 'FAIL':
        sys.exit(1)


if __name__ == "__main__":
    main()
