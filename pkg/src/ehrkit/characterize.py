"""Witness searches for translation vectors whose quasi-polynomials break
symmetry (non-centrally-symmetric base) or the gcd property of
constituents (non-zonotope base), plus the bundled classifier.

A witness is a rational translate c together with two residues whose
constituents provably differ.  Absence of a witness within the budget
proves nothing; the report says so explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import count as icount, product
from typing import Iterable, Optional

from .counting import ehrhart_quasi, translated_enumerator
from .geometry import (
    AlmostIntegralPolytope,
    LatticePolytope,
    is_centrally_symmetric,
    is_zonotope,
    minkowski_facet_check,
)
from .linalg import lcm_denominators, vec_neg, vec_scale, vec_sub

DEFAULT_BUDGET = 10000


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a witness search.

    When found, ``constituents[i]`` is the residue ``residues[i]``
    constituent of the quasi-polynomial of translate + base, and the two
    differ while their residues lie in the same symmetry or gcd class.
    """

    kind: str  # "asymmetry" | "gcd_violation"
    found: bool
    translate: Optional[tuple]
    residues: Optional[tuple]
    constituents: Optional[tuple]
    attempts: int
    budget_exhausted: bool


def _reduce_mod_one(v) -> tuple:
    return tuple(Fraction(x) % 1 for x in v)


def _grid_candidates(d: int, qs: Iterable[int]):
    for q in qs:
        for tup in product(range(q), repeat=d):
            if any(tup):
                yield tuple(Fraction(a, q) for a in tup)


def _facet_direction_candidates(P: LatticePolytope):
    """Directions inside facets flagged by the parallel-volume check.

    When the facet pairing fails, translating along the offending facet
    is where asymmetric behaviour is expected first."""
    for face in minkowski_facet_check(P):
        verts = [P.vertices[i] for i in face.vertex_indices]
        for v in verts[1:]:
            u = vec_sub(v, verts[0])
            for q in (3, 4, 5):
                yield _reduce_mod_one(vec_scale(Fraction(1, q), u))


def _scaling_candidates(P: LatticePolytope):
    """Odd-denominator scalings of simple integer directions."""
    d = P.ambient_dim
    dirs = [(1,) * d] + [tuple(int(i == j) for i in range(d)) for j in range(d)]
    for q in (3, 5, 7, 9):
        for u in dirs:
            yield _reduce_mod_one(vec_scale(Fraction(1, q), u))


def asymmetry_witness(P: LatticePolytope, budget: int = DEFAULT_BUDGET) -> WitnessReport:
    """Search for c with L_{(P,c)} != L_{(P,-c)}.

    Such a c makes the quasi-polynomial of c + P asymmetric: its
    residue-1 and residue-(rho-1) constituents are exactly those two
    enumerators.  Candidates: facet-guided directions first, then grids
    (1/q) Z^d ∩ [0,1)^d for q = 2, 3, 4, ...
    """

    def candidates():
        yield from _facet_direction_candidates(P)
        yield from _grid_candidates(P.ambient_dim, icount(2))

    attempts = 0
    seen = set()
    for c in candidates():
        if attempts >= budget:
            break
        # denominator <= 2 forces -c = c (mod Z^d), so no witness there
        if c in seen or all(x == 0 for x in c) or lcm_denominators(c) <= 2:
            continue
        seen.add(c)
        attempts += 1
        f_pos = translated_enumerator(P, c)
        f_neg = translated_enumerator(P, vec_neg(c))
        if f_pos != f_neg:
            rho = lcm_denominators(c)
            return WitnessReport(
                kind="asymmetry",
                found=True,
                translate=c,
                residues=(1, rho - 1),
                constituents=(f_pos, f_neg),
                attempts=attempts,
                budget_exhausted=False,
            )
    return WitnessReport("asymmetry", False, None, None, None, attempts, True)


def gcd_violation_witness(P: LatticePolytope, budget: int = DEFAULT_BUDGET) -> WitnessReport:
    """Search for c with odd den(c) and L_{(P,c)} != L_{(P,2c)}.

    With rho = den(c) odd, gcd(rho, 1) = gcd(rho, 2) = 1, so differing
    residue-1 and residue-2 constituents violate the gcd property.
    Candidates: odd scalings of coordinate directions, then odd-q grids.
    """

    def candidates():
        yield from _scaling_candidates(P)
        yield from _grid_candidates(P.ambient_dim, icount(3, 2))

    attempts = 0
    seen = set()
    for c in candidates():
        if attempts >= budget:
            break
        if c in seen or all(x == 0 for x in c) or lcm_denominators(c) % 2 == 0:
            continue
        seen.add(c)
        attempts += 1
        f_one = translated_enumerator(P, c)
        f_two = translated_enumerator(P, vec_scale(2, c))
        if f_one != f_two:
            return WitnessReport(
                kind="gcd_violation",
                found=True,
                translate=c,
                residues=(1, 2),
                constituents=(f_one, f_two),
                attempts=attempts,
                budget_exhausted=False,
            )
    return WitnessReport("gcd_violation", False, None, None, None, attempts, True)


def verify_witness(P: LatticePolytope, report: WitnessReport) -> bool:
    """Re-derive the claimed constituents through the full quasi-polynomial."""
    if not report.found:
        return False
    rho = lcm_denominators(report.translate)
    k, l = report.residues
    if report.kind == "asymmetry":
        if (k + l) % rho != 0:
            return False
    elif report.kind == "gcd_violation":
        if math.gcd(rho, k) != math.gcd(rho, l):
            return False
    else:
        return False
    q = ehrhart_quasi(AlmostIntegralPolytope(P, report.translate))
    f_k, f_l = q.constituent(k), q.constituent(l)
    return f_k == report.constituents[0] and f_l == report.constituents[1] and f_k != f_l


def classify(P: LatticePolytope, witness: bool = False, budget: int = DEFAULT_BUDGET) -> dict:
    """One structured verdict: central symmetry, facet pairing, zonotope
    test, and (on request) the two witness searches."""
    center = is_centrally_symmetric(P)
    violations = minkowski_facet_check(P) if P.dim >= 1 else []
    zono, bad_face = is_zonotope(P)
    report = {
        "centrally_symmetric": center is not None,
        "center": center,
        "minkowski_violations": violations,
        "zonotope": zono,
        "non_symmetric_2face": bad_face,
    }
    if witness:
        if center is None:
            report["asymmetry_witness"] = asymmetry_witness(P, budget)
        if not zono:
            report["gcd_violation_witness"] = gcd_violation_witness(P, budget)
    return report
