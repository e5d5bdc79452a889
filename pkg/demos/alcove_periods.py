"""Weighted simplices whose quasi-polynomials have large minimal periods.

The simplex conv{0, e_1/m_1, ..., e_d/m_d} with positive integer weights m
has a counting quasi-polynomial whose minimal period is lcm-driven by the
weights. The five weight vectors below reach periods 6, 12, 60, 12, and 6,
and all five quasi-polynomials satisfy the gcd property.
"""

import time

from ehrkit import has_gcd_property, minimal_period, weighted_simplex_quasi
from ehrkit.corpus import ALCOVE_WEIGHTS

for name, weights in ALCOVE_WEIGHTS.items():
    start = time.time()
    q = weighted_simplex_quasi(weights)
    reduced = minimal_period(q)
    elapsed = time.time() - start
    print(
        f"{name}: weights {weights}, minimal period {reduced.period}, "
        f"gcd property {has_gcd_property(q)}, {elapsed:.2f}s"
    )
