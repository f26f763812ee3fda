#!/usr/bin/env python3
"""
Validate Chapter Analyses

Runs each chapter's analysis.py and checks that every figure and result file
listed in the chapter README was written.

Usage:
    python scripts/validate_code.py           # Validate all chapters
    python scripts/validate_code.py 02        # Validate one chapter
"""
import argparse
import re
import subprocess
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent
CHAPTERS_DIR = PROJECT_ROOT / "chapters"
TIMEOUT_SECONDS = 600
MIN_FIGURE_BYTES = 1000

OUTPUT_ROW = re.compile(r"^\|\s*([\w.\-]+\.(?:png|csv))\s*\|", re.MULTILINE)


def expected_outputs(chapter_dir: Path) -> dict:
    """File names listed in the README's Figures and Results tables."""
    readme = chapter_dir / "README.md"
    if not readme.exists():
        return {'figures': [], 'results': []}
    names = OUTPUT_ROW.findall(readme.read_text())
    return {
        'figures': [n for n in names if n.endswith('.png')],
        'results': [n for n in names if n.endswith('.csv')],
    }


def validate_chapter(chapter_dir: Path, verbose: bool = False) -> dict:
    """
    Run one chapter and check its outputs.

    Returns:
        dict with keys: name, status, missing, error
    """
    result = {'name': chapter_dir.name, 'status': 'UNKNOWN', 'missing': [], 'error': None}

    analysis_py = chapter_dir / "analysis.py"
    if not analysis_py.exists():
        result['status'] = 'SKIP'
        result['error'] = 'No analysis.py found'
        return result

    print(f"\n  Running: {chapter_dir.name}/analysis.py")
    proc = subprocess.run(
        [sys.executable, str(analysis_py)],
        capture_output=True,
        text=True,
        cwd=PROJECT_ROOT,
        timeout=TIMEOUT_SECONDS,
    )
    if verbose:
        print(proc.stdout)

    if proc.returncode != 0:
        result['status'] = 'FAIL'
        tail = (proc.stdout + proc.stderr)[-500:]
        result['error'] = tail or f'exit code {proc.returncode}'
        return result

    expected = expected_outputs(chapter_dir)
    for name in expected['figures']:
        path = chapter_dir / "figures" / name
        if not path.exists():
            result['missing'].append(name)
        elif path.stat().st_size < MIN_FIGURE_BYTES:
            result['status'] = 'WARN'
            result['error'] = f'{name} is suspiciously small'
    for name in expected['results']:
        if not (chapter_dir / "results" / name).exists():
            result['missing'].append(name)

    if result['missing']:
        result['status'] = 'FAIL'
        result['error'] = 'missing ' + ', '.join(result['missing'])
    elif result['status'] != 'WARN':
        result['status'] = 'PASS'
    return result


def main():
    parser = argparse.ArgumentParser(description='Validate chapter analyses')
    parser.add_argument('chapter', nargs='?', help='Chapter number prefix (e.g., 02)')
    parser.add_argument('-v', '--verbose', action='store_true', help='Print chapter output')
    args = parser.parse_args()

    print("=" * 60)
    print("  Singular Knots - Chapter Validation")
    print("=" * 60)

    if args.chapter:
        chapters = sorted(CHAPTERS_DIR.glob(f"{args.chapter}*"))
        if not chapters:
            print(f"  ERROR: No chapter matching '{args.chapter}' found")
            return 1
    else:
        chapters = sorted(d for d in CHAPTERS_DIR.iterdir()
                          if d.is_dir() and not d.name.startswith('.'))

    results = []
    for chapter_dir in chapters:
        try:
            result = validate_chapter(chapter_dir, verbose=args.verbose)
        except subprocess.TimeoutExpired:
            result = {'name': chapter_dir.name, 'status': 'TIMEOUT', 'missing': [],
                      'error': f'Execution exceeded {TIMEOUT_SECONDS} seconds'}
        results.append(result)

        print(f"  [{result['status']}] {result['name']}")
        if result['error']:
            print(f"      {result['error'][:200]}")

    counts = {s: sum(1 for r in results if r['status'] == s)
              for s in ('PASS', 'FAIL', 'TIMEOUT', 'WARN', 'SKIP')}
    failed = counts['FAIL'] + counts['TIMEOUT']

    print("\n" + "=" * 60)
    print(f"  Summary: {counts['PASS']} passed, {failed} failed, "
          f"{counts['WARN']} warnings, {counts['SKIP']} skipped")
    print("=" * 60)
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
