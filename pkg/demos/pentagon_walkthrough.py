"""Translating a pentagon by (3/4, 3/4): which lattice points are lost or gained.

The pentagon P = conv{(1,0), (0,1), (0,2), (1,3), (2,1)} contains 7 lattice
points. Its translate c + P with c = (3/4, 3/4) contains only 5: translation
by a non-integer vector can strictly decrease the lattice-point count, and the
deficit grows linearly with the dilation factor.
"""

from fractions import Fraction

from ehrkit import LatticePolytope, count_points, lost_new_counts, translated_enumerator

P = LatticePolytope([(1, 0), (0, 1), (0, 2), (1, 3), (2, 1)])
c = (Fraction(3, 4), Fraction(3, 4))

print("t | #t(c+P) | #tP | lost | new")
print("--+---------+-----+------+----")
for t in range(0, 6):
    lost, new = lost_new_counts(P, c, t)
    print(f"{t} | {count_points(P, c, t):7d} | {count_points(P, (0, 0), t):3d} | {lost:4d} | {new:3d}")

print()
print("translated enumerator:", translated_enumerator(P, c))
print("base enumerator:      ", translated_enumerator(P, (0, 0)))
print()
print("Both are honest polynomials (denominator of c notwithstanding), and")
print("their difference 1 + t shows the translate is permanently behind: at")
print("every dilation t the shifted pentagon holds 1 + t fewer lattice points.")
