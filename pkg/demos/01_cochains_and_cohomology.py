"""Cochains, coboundaries, and low-degree cohomology, two ways.

Walks through the cochain complex on a couple of small groups: evaluates
coboundaries pointwise, checks the square-to-zero law, and computes
cohomology groups with the normal-form solver and with the enumeration
oracle side by side.
"""

import random

from tfalgebra import (
    Cochain,
    brute_force_cohomology,
    coboundary,
    cohomology_group,
    cyclic_group,
    cyclic_module,
    is_cocycle,
    normalize_cocycle,
)
from tfalgebra.gmodule import GModule

print("== The cochain complex on Z/2 with Z/2 coefficients ==")
G = cyclic_group(2)
A = cyclic_module(G, 2)

# the famous degree-3 class: value a at (s, s, s), trivial elsewhere
kappa = Cochain(A, 3, {(1, 1, 1): (1,)})
ok, witness = is_cocycle(kappa)
print(f"single-entry degree-3 table is a cocycle: {ok}")

# a random 2-cochain never survives two coboundaries
rng = random.Random(0)
w = Cochain.random(A, 2, rng)
print(f"d(d(random 2-cochain)) trivial: {coboundary(coboundary(w)).is_trivial()}")

print()
print("== Cohomology of Z/2 with Z/2 coefficients ==")
for n in range(4):
    H = cohomology_group(A, n)
    O = brute_force_cohomology(A, n)
    print(
        f"H^{n} = {H.describe():8}  (oracle: {O.describe():8})"
        f"  cocycles {H.cocycle_order}, coboundaries {H.coboundary_order}"
    )
rep = cohomology_group(A, 3).representatives[0]
print(f"degree-3 generator table: {dict((k, v) for k, v in rep.table.items() if any(v))}")

print()
print("== A nontrivial action: Z/2 inverting Z/3 ==")
A3 = GModule(G, (3,), action={0: [[1]], 1: [[2]]})
for n in range(3):
    print(f"H^{n} = {cohomology_group(A3, n).describe()}")

print()
print("== Normalizing a messy 3-cocycle ==")
A33 = cyclic_module(cyclic_group(3), 3)
H3 = cohomology_group(A33, 3)
print(f"H^3(Z/3, Z/3) = {H3.describe()}")
messy = coboundary(Cochain.random(A33, 2, rng)).mul(H3.representatives[0])
normalized, omega = normalize_cocycle(messy)
print(f"after shifting by a random coboundary, entries with a unit slot that are nontrivial:"
      f" {sum(1 for k, v in messy.table.items() if 0 in k and any(v))}")
print(f"after normalization: "
      f"{sum(1 for k, v in normalized.table.items() if 0 in k and any(v))}"
      f" (cocycle: {is_cocycle(normalized)[0]})")
