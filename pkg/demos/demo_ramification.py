"""Ramification filtrations: Herbrand transforms and closed-form conductors.

Builds the cyclotomic-type filtration, round-trips a point through phi/psi,
and tabulates the conductors of the two extension shapes against the naive
bound nu.
"""
from fractions import Fraction

from srt import (
    compositum_conductor,
    conductor_case,
    cyclotomic_filtration,
    herbrand,
)

p, nu = 5, 3
f = cyclotomic_filtration(p, nu)
print(f"filtration for p = {p}, nu = {nu}:")
for jump, order in f.breaks:
    print(f"  |G^u| = {order} up to u = {jump}")
print("conductor:", f.conductor())

x = Fraction(7, 3)
down = herbrand(f, "psi", x)
back = herbrand(f, "phi", down)
print(f"\npsi({x}) = {down}, phi(psi({x})) = {back} (round trip)")

print("\nconductors of the two shapes vs the naive bound nu:")
print(f"{'p':>3} {'nu':>3} {'tame':>6} {'kummer':>7} {'< nu?':>6}")
for pp in (3, 5, 7, 11, 13):
    for n in range(2, 6):
        tame = conductor_case(pp, n, "tame-over-cyclotomic")
        kummer = conductor_case(pp, n, "kummer-tower")
        print(f"{pp:>3} {n:>3} {str(tame):>6} {str(kummer):>7} "
              f"{str(tame < n and kummer < n):>6}")

print("\ncompositum conductor is the max:",
      compositum_conductor([Fraction(1), Fraction(5, 4), Fraction(2)]))
