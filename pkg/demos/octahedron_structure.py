"""The shifted octahedron: a symmetric quasi-polynomial without the gcd property.

Centrally symmetric polytopes always produce symmetric constituent lists
(f_k = f_{rho-k}). The stronger gcd property (f_k = f_l whenever
gcd(rho, k) = gcd(rho, l)) characterizes zonotopes, and the octahedron is the
smallest centrally symmetric non-zonotope: shifting it by (1/5, 1/5, 1/5)
breaks the gcd property while keeping the symmetry.
"""

from fractions import Fraction

from ehrkit import (
    AlmostIntegralPolytope,
    LatticePolytope,
    classify,
    ehrhart_quasi,
    has_gcd_property,
    is_symmetric,
)

octa = LatticePolytope(
    [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
)
c = (Fraction(1, 5),) * 3

q = ehrhart_quasi(AlmostIntegralPolytope(octa, c))
print(f"period: {q.period}")
for k in range(1, q.period + 1):
    print(f"  f_{k} = {q.constituent(k)}")
print(f"symmetric:    {is_symmetric(q)}   (f_1 = f_4 and f_2 = f_3)")
print(f"gcd property: {has_gcd_property(q)}  (gcd(5,1) = gcd(5,2) but f_1 != f_2)")
print()

report = classify(octa, witness=True, budget=500)
print(f"centrally symmetric: {report['centrally_symmetric'] is not None}")
print(f"zonotope:            {report['zonotope']}")
print(f"non-symmetric 2-face witness: {report['non_symmetric_2face']}")
w = report["gcd_violation_witness"]
print(f"gcd violation witness: translate {w.translate} after {w.attempts} attempts")
