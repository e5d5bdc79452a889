"""Exact lattice-point counting in dilated translated polytopes, the
translated enumerator polynomial, Ehrhart quasi-polynomials by
interpolation, and the weighted-simplex counter.

Counting is enumeration over an integer bounding box, sliced along the
last coordinate so the inner work per slab is a handful of integer
comparisons.  That is the right tool at desk scale; nothing here aims at
Barvinok-style asymptotics.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .geometry import AlmostIntegralPolytope, LatticePolytope, affine_hull, hrep
from .linalg import (
    DimensionMismatch,
    IntMatrix,
    dot,
    integer_point_in_translated_span,
    is_integer_vector,
    lcm_denominators,
    solve_columns,
    vec_add,
    vec_scale,
    vec_sub,
)
from .qpoly import Polynomial, QuasiPolynomial


class InterpolationGuardFailed(RuntimeError):
    """An extra interpolation sample disagreed with the fitted polynomial.

    This signals an internal inconsistency (wrong degree bound or a
    counting bug), never bad user input.
    """


_hrep = lru_cache(maxsize=None)(hrep)


def _count_fulldim(P: LatticePolytope, c, t) -> int:
    """Count integer points of c + tP for full-dimensional P.

    ``t`` may be a positive Fraction (used by the rational-dilation
    path); the inequality bounds are floored to integers up front so the
    enumeration loop is pure integer arithmetic.
    """
    d = P.ambient_dim
    bounds = [(a, math.floor(t * b + dot(a, c))) for a, b in _hrep(P).inequalities]
    pts = [vec_add(c, vec_scale(t, v)) for v in P.vertices]
    lo = [math.ceil(min(p[i] for p in pts)) for i in range(d)]
    hi = [math.floor(max(p[i] for p in pts)) for i in range(d)]
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    if d == 1:
        l, h = lo[0], hi[0]
        for (a,), M in bounds:
            if a > 0:
                h = min(h, M // a)
            elif a < 0:
                l = max(l, -(M // -a))
        return max(0, h - l + 1)
    last = d - 1
    slabs = [(a[:last], a[last], M) for a, M in bounds]
    total = 0
    for prefix in product(*(range(lo[i], hi[i] + 1) for i in range(last))):
        l, h = lo[last], hi[last]
        feasible = True
        for ap, al, M in slabs:
            r = M - sum(x * y for x, y in zip(ap, prefix))
            if al > 0:
                q = r // al
                if q < h:
                    h = q
            elif al < 0:
                q = -(r // -al)
                if q > l:
                    l = q
            elif r < 0:
                feasible = False
                break
        if feasible and l <= h:
            total += h - l + 1
    return total


def count_points(P: LatticePolytope, c: Sequence, t: int) -> int:
    """Exact #((c + tP) ∩ Z^d).

    Full-dimensional polytopes go through slab enumeration.  Lower
    dimensional ones are reduced: if the translated affine hull misses
    Z^d the count is 0, otherwise an integer point on it anchors a
    change of coordinates and the count recurses in the hull dimension.
    """
    d = P.ambient_dim
    if len(c) != d:
        raise DimensionMismatch("translate length does not match ambient dimension")
    c = tuple(Fraction(x) for x in c)
    if t < 0:
        raise ValueError("dilation must be non-negative")
    if t == 0:
        # c + 0*P = {c}
        return 1 if is_integer_vector(c) else 0
    m = P.dim
    if m == d:
        return _count_fulldim(P, c, t)
    hull = affine_hull(P)
    shift = vec_add(c, vec_scale(t, hull.origin))
    if m == 0:
        return 1 if is_integer_vector(shift) else 0
    B = IntMatrix.from_columns(hull.lattice_basis, nrows=d)
    z = integer_point_in_translated_span(B, shift)
    if z is None:
        return 0
    # every integer point of c + tP is z + B w with integer w, and the
    # membership condition becomes w in c~ + t * coord_polytope
    ctilde = solve_columns(hull.lattice_basis, vec_sub(shift, z))
    return count_points(P.coord_polytope, ctilde, t)


def translated_enumerator(P: LatticePolytope, c: Sequence) -> Polynomial:
    """The polynomial t -> #((c + tP) ∩ Z^d), of degree at most dim P.

    Interpolated from t = 1..dim+1 and verified on one extra sample."""
    deg = P.dim
    samples = [(t, count_points(P, c, t)) for t in range(1, deg + 2)]
    poly = Polynomial.interpolate(samples)
    guard = deg + 2
    if poly(guard) != count_points(P, c, guard):
        raise InterpolationGuardFailed(
            f"guard sample at t={guard} disagrees with interpolant for c={c}"
        )
    return poly


def ehrhart_quasi(A: AlmostIntegralPolytope) -> QuasiPolynomial:
    """Ehrhart quasi-polynomial of c + P with period den(c).

    The residue-k constituent is the translated enumerator of (P, k c)."""
    rho = A.denominator
    cons = [translated_enumerator(A.base, vec_scale(k, A.translate)) for k in range(1, rho + 1)]
    return QuasiPolynomial(rho, cons)


# ---------------------------------------------------------------------------
# weighted simplices {x >= 0 : sum m_i x_i <= t}


def weighted_simplex_counts_upto(weights: Sequence[int], T: int) -> list:
    """counts[t] = #{x ∈ Z^d, x >= 0 : Σ m_i x_i <= t} for t = 0..T.

    Coin-counting dynamic programming followed by a cumulative sum;
    O(d T) big-integer additions.
    """
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    dp = [1] + [0] * T
    for w in weights:
        for s in range(w, T + 1):
            dp[s] += dp[s - w]
    out = []
    acc = 0
    for v in dp:
        acc += v
        out.append(acc)
    return out


def count_weighted_simplex(weights: Sequence[int], t: int) -> int:
    return weighted_simplex_counts_upto(weights, t)[t]


def weighted_simplex_quasi(weights: Sequence[int]) -> QuasiPolynomial:
    """Ehrhart quasi-polynomial of the simplex {x >= 0 : Σ m_i x_i <= 1}.

    Period lcm(m); each constituent interpolated through deg+1 in-residue
    samples with one guard sample.
    """
    weights = [int(w) for w in weights]
    rho = math.lcm(*weights)
    deg = len(weights)
    T = rho + (deg + 1) * rho
    counts = weighted_simplex_counts_upto(weights, T)
    cons = []
    for k in range(1, rho + 1):
        samples = [(k + j * rho, counts[k + j * rho]) for j in range(deg + 1)]
        poly = Polynomial.interpolate(samples)
        guard = k + (deg + 1) * rho
        if poly(guard) != counts[guard]:
            raise InterpolationGuardFailed(
                f"guard sample at t={guard} disagrees for weights {weights}"
            )
        cons.append(poly)
    return QuasiPolynomial(rho, cons)


# ---------------------------------------------------------------------------
# rational dilation (fractional-vertex polytopes such as (1/9)[0,1]^3)


def count_rational_dilate(vertices: Sequence, t: int) -> int:
    """#(tQ ∩ Z^d) for a full-dimensional polytope Q with rational vertices.

    Clears denominators to a lattice polytope P = D Q and counts the
    fractional dilate (t/D) P through the slab enumerator."""
    verts = [tuple(Fraction(x) for x in v) for v in vertices]
    D = math.lcm(*(lcm_denominators(v) for v in verts))
    P = LatticePolytope([vec_scale(D, v) for v in verts])
    if P.dim != P.ambient_dim:
        raise ValueError("rational dilation counting needs a full-dimensional polytope")
    if t < 0:
        raise ValueError("dilation must be non-negative")
    if t == 0:
        return 1
    return _count_fulldim(P, (Fraction(0),) * P.ambient_dim, Fraction(t, D))


def rational_dilation_quasi(vertices: Sequence) -> QuasiPolynomial:
    """Ehrhart quasi-polynomial of a full-dimensional rational polytope.

    The lcm D of vertex-coordinate denominators is a period; constituents
    are interpolated per residue class mod D with a guard sample.
    """
    verts = [tuple(Fraction(x) for x in v) for v in vertices]
    rho = math.lcm(*(lcm_denominators(v) for v in verts))
    deg = len(verts[0])
    cons = []
    for k in range(1, rho + 1):
        samples = [(k + j * rho, count_rational_dilate(verts, k + j * rho)) for j in range(deg + 1)]
        poly = Polynomial.interpolate(samples)
        guard = k + (deg + 1) * rho
        if poly(guard) != count_rational_dilate(verts, guard):
            raise InterpolationGuardFailed(f"guard sample at t={guard} disagrees")
        cons.append(poly)
    return QuasiPolynomial(rho, cons)


# ---------------------------------------------------------------------------
# lost and new points under translation


def _segment_lattice_count(c) -> int:
    """#{s ∈ [0,1] : s c ∈ Z^d}, the lattice points on the segment [0, c]."""
    nz = [Fraction(x) for x in c if x != 0]
    if not nz:
        return 1
    step = Fraction(
        math.lcm(*(f.denominator for f in nz)),
        math.gcd(*(abs(f.numerator) for f in nz)),
    )
    return int(Fraction(1) / step) + 1


def lost_new_counts(P: LatticePolytope, c: Sequence, t: int):
    """(lost, new) point counts for the translation c at dilation t.

    lost = #(((tP + [0,c]) \\ (c + tP)) ∩ Z^d), the points swept over but
    absent from the translate; new = #(((tP + [0,c]) \\ tP) ∩ Z^d).
    Membership in tP + [0,c] is a one-parameter feasibility test: some
    s ∈ [0,1] with x - s c ∈ tP, an exact rational interval intersection
    against the facet description.
    """
    d = P.ambient_dim
    if len(c) != d:
        raise DimensionMismatch("translate length does not match ambient dimension")
    c = tuple(Fraction(x) for x in c)
    if all(x == 0 for x in c):
        return 0, 0
    if t == 0:
        # tP = {0}, tP + [0,c] = the segment [0, c]
        seg = _segment_lattice_count(c)
        lost = seg - (1 if is_integer_vector(c) else 0)
        return lost, seg - 1
    H = _hrep(P)
    constraints = [(a, b, dot(a, c), False) for a, b in H.inequalities]
    constraints += [(a, b, dot(a, c), True) for a, b in H.equalities]
    base_pts = [vec_scale(t, v) for v in P.vertices]
    all_pts = base_pts + [vec_add(c, p) for p in base_pts]
    lo = [math.ceil(min(p[i] for p in all_pts)) for i in range(d)]
    hi = [math.floor(max(p[i] for p in all_pts)) for i in range(d)]
    lost = new = 0
    for x in product(*(range(lo[i], hi[i] + 1) for i in range(d))):
        s_lo, s_hi = Fraction(0), Fraction(1)
        in_sum = True
        for a, b, ac, is_eq in constraints:
            rhs = dot(a, x) - t * b  # need s * ac >= rhs (== for equalities)
            if is_eq:
                if ac == 0:
                    if rhs != 0:
                        in_sum = False
                        break
                else:
                    s = rhs / ac
                    s_lo = max(s_lo, s)
                    s_hi = min(s_hi, s)
            elif ac > 0:
                s_lo = max(s_lo, rhs / ac)
            elif ac < 0:
                s_hi = min(s_hi, rhs / ac)
            elif rhs > 0:
                in_sum = False
                break
            if s_lo > s_hi:
                in_sum = False
                break
        if not in_sum:
            continue
        in_base = all(
            (dot(a, x) == t * b) if is_eq else (dot(a, x) <= t * b)
            for a, b, _, is_eq in constraints
        )
        xc = vec_sub(x, c)
        in_translate = all(
            (dot(a, xc) == t * b) if is_eq else (dot(a, xc) <= t * b)
            for a, b, _, is_eq in constraints
        )
        if not in_translate:
            lost += 1
        if not in_base:
            new += 1
    return lost, new


def scan_scaled_translate(P: LatticePolytope, c: Sequence, xs: Sequence) -> list:
    """Sample x -> #((x c + P) ∩ Z^d) at the given rational points."""
    c = tuple(Fraction(v) for v in c)
    return [count_points(P, vec_scale(Fraction(x), c), 1) for x in xs]
