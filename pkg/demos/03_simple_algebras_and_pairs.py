"""Scalar pairs and the classification of simple algebras.

Enumerates the pair group over three instructive contexts, builds the
one-dimensional algebra of every pair, extracts the pairs back, and counts
isomorphism classes the long way to confirm the quotient order.
"""

from tfalgebra import (
    AlgebraContext,
    Cochain,
    PrimeField,
    build_simple,
    classify_simple,
    coboundary_pair,
    cyclic_group,
    cyclic_module,
    enumerate_pairs,
    extract_kappa_pair,
    is_isomorphic,
    pairs_equivalent,
    trivial_group,
    trivial_module,
    verify,
)
from tfalgebra.algebra import trivial_context
from tfalgebra.pairs import pair_mul, trivial_pair

F5 = PrimeField(5)
F3 = PrimeField(3)

G2 = cyclic_group(2)
contexts = {
    "grading by Z/2, no coefficients, F5": trivial_context(G2, trivial_module(G2), F5),
    "no grading, coefficients Z/2, F5": trivial_context(
        trivial_group(), cyclic_module(trivial_group(), 2), F5
    ),
    "Z/2 grading, Z/2 coefficients, twisted, F3": AlgebraContext(
        G2, cyclic_module(G2, 2), Cochain(cyclic_module(G2, 2), 3, {(1, 1, 1): (1,)}), F3
    ),
}

for name, ctx in contexts.items():
    print(f"== {name} ==")
    enum = enumerate_pairs(ctx, method="brute-force")
    cg = enum.class_group
    print(f"  pair group order {cg.pair_group_order}, coboundary subgroup {cg.coboundary_order},"
          f" quotient {cg.describe()}")
    if any(p.g2 != tuple([ctx.field.one] * ctx.module.rank) for p in enum.pairs):
        print("  some pairs carry a nontrivial character")
    else:
        print("  every pair carries the trivial character"
              + (" (the twist obstructs the rest)" if not ctx.kappa.is_trivial() else ""))
    for pair in enum.pairs:
        V = build_simple(ctx, pair)
        assert verify(V).passed
        back, _ = extract_kappa_pair(V)
        assert back == pair
    print(f"  all {len(enum.pairs)} pairs build to verified algebras and extract back")

    # isomorphism classes the long way
    algebras = [build_simple(ctx, p) for p in enum.pairs]
    classes = []
    for V in algebras:
        if not any(is_isomorphic(c[0], V) for c in classes):
            classes.append([V])
        else:
            next(c for c in classes if is_isomorphic(c[0], V)).append(V)
    print(f"  pairwise isomorphism finds {len(classes)} classes; quotient order is {cg.order}")

    cls = classify_simple(ctx)
    print(f"  with the free rescaling parameter: {cls.isomorphism_class_count}"
          f" isomorphism classes of simple algebras")
    print()

print("== Coboundary shifts are invisible to isomorphism ==")
ctx = contexts["grading by Z/2, no coefficients, F5"]
base = trivial_pair(ctx)
shift = coboundary_pair(ctx, {0: 1, 1: 3})
moved = pair_mul(ctx, base, shift)
psi = pairs_equivalent(ctx, moved, base)
print(f"  moved pair equivalent to the base pair via psi = {psi}")
print(f"  algebras isomorphic: {is_isomorphic(build_simple(ctx, base), build_simple(ctx, moved)) is not None}")
