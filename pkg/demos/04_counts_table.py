"""
Counting superspecial curves by automorphism group
==================================================

For each prime, every pair of square roots of supersingular Legendre
parameters yields a candidate (a, b).  Candidates are filtered by the
Hasse-Witt matrix and grouped by a complete isomorphism invariant of the
branch locus.
"""

# %%
import time

from howe3.cli import render_table
from howe3.enumeration import enumerate_structured, table

start = time.perf_counter()
rows = table(8, 60)
print(render_table(rows, "md"))
print(f"({time.perf_counter() - start:.1f}s)")

# %%
# Each class carries a representative, its point count and the reduced order.
for rec in enumerate_structured(47):
    a, b = rec.representative
    print(f"a={a!s:>10} b={b!s:>10}  {rec.aut.value:9s} order {rec.reduced_order:2d}  N={rec.N}")
