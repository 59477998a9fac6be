"""Exact wall-crossing engine: combinatorial sums, diagrammatic decay
calculus, a truncated symmetry-factor oracle, and numeric integral checks."""
