"""Reduction trees: the different/epaisseur propagation solver.

Builds the three-vertex tree of the a=0 case, lets the solver fill in the
unknown epaisseurs from the effective-different law, and checks that the total
thickness from root to tail equals the closed-form tail radius.
"""
import json
from fractions import Fraction

from srt import (
    Edge,
    ReductionTree,
    Vertex,
    check_monotonic,
    propagate_differents,
    tail_radius,
    validate_tree,
)

p, nu, extra = 5, 3, 1
x = Fraction(nu) + Fraction(1, p - 1)
tree = ReductionTree(
    [
        Vertex("root", inertia=nu),
        Vertex("W", inertia=nu - extra, delta_eff=x - extra),
        Vertex("tail", inertia=0, tail="new-etale", sigma=Fraction(3, 2)),
    ],
    [
        Edge("root", "W", sigma_eff=Fraction(1)),
        Edge("W", "tail", sigma_eff=Fraction(3, 2)),
    ],
)

print("input tree:")
print(json.dumps(tree.to_json(), indent=2))
print("\nstructural lints:", validate_tree(tree, p) or "none")
print("inertia monotonic outward:", check_monotonic(tree).kind)

result = propagate_differents(tree, p)
print("\nsolver status:", result.status)
for e in result.tree.edges:
    print(f"  edge {e.key}: sigma_eff = {e.sigma_eff}, epaisseur = {e.epaisseur}")

total = sum((e.epaisseur for e in result.tree.edges), Fraction(0))
expected = tail_radius(p, nu, "a=0", extra).v_rho
print(f"\ntotal thickness root -> tail: {total}")
print(f"closed-form tail radius v(rho): {expected}")
assert total == expected
print("agreement confirmed.")
