"""Seeded randomized sweeps chaining the whole pipeline together.

Each iteration draws a context, a pair, and a normalized 2-cochain, then
builds, twists, verifies, untwists, extracts, and serializes, checking every
exact identity along the way.  Failures reproduce from the fixed seed.
"""

import json
import random

from tfalgebra.algebra import AlgebraContext, z_rescale
from tfalgebra.cochains import Cochain, coboundary, normalize_cocycle
from tfalgebra.constructions import (
    build_simple,
    coboundary_transform,
    extract_kappa_pair,
)
from tfalgebra.fields import PrimeField
from tfalgebra.gmodule import GModule, cyclic_module, trivial_module
from tfalgebra.groups import cyclic_group, trivial_group
from tfalgebra.isomorphism import UNDECIDED, is_isomorphic
from tfalgebra.pairs import enumerate_pairs
from tfalgebra.serialize import dump_json, emit_instance, parse_instance
from tfalgebra.verify import verify


def random_contexts(rng):
    """Small contexts with assorted groups, modules, actions, and twists."""
    G2, G3 = cyclic_group(2), cyclic_group(3)
    candidates = [
        (trivial_group(), lambda G: cyclic_module(G, 4), 5),
        (G2, trivial_module, 5),
        (G2, lambda G: cyclic_module(G, 2), 3),
        (G2, lambda G: cyclic_module(G, 2), 5),
        (G2, lambda G: GModule(G, (3,), action={0: [[1]], 1: [[2]]}), 7),
        (G2, lambda G: GModule(G, (2, 2)), 3),
        (G3, lambda G: cyclic_module(G, 3), 7),
    ]
    out = []
    for G, make_module, p in candidates:
        A = make_module(G)
        F = PrimeField(p)
        kappas = [Cochain.trivial(A, 3)]
        # a random normalized cocycle in a coboundary class
        shift = coboundary(Cochain.random(A, 2, rng))
        normalized, _ = normalize_cocycle(shift)
        kappas.append(normalized)
        for kappa in kappas:
            out.append(AlgebraContext(G, A, kappa, F))
    return out


def random_normalized_two_cochain(module, rng):
    e = module.group.identity
    table = {}
    for a in module.group.elements():
        for b in module.group.elements():
            if a != e and b != e:
                table[(a, b)] = tuple(rng.randrange(m) for m in module.moduli)
    return Cochain(module, 2, table)


def test_randomized_pipeline_sweep():
    rng = random.Random(424242)
    swept = 0
    for ctx in random_contexts(rng):
        enum = enumerate_pairs(ctx, method="brute-force", cap=1 << 16)
        if not enum.pairs:
            continue
        pair = enum.pairs[rng.randrange(len(enum.pairs))]
        V = build_simple(ctx, pair)
        assert verify(V).passed

        # twist, verify over the moved cocycle, untwist exactly
        omega = random_normalized_two_cochain(ctx.module, rng)
        W = coboundary_transform(V, omega)
        assert verify(W).passed
        back = coboundary_transform(W, omega.inv())
        assert back.mult == V.mult and back.phi == V.phi

        # rescale, refuse extraction, unrescale, extract the original pair
        units = ctx.field.units()
        z = units[rng.randrange(len(units))]
        R = z_rescale(V, z)
        assert verify(R).passed
        back_pair, _ = extract_kappa_pair(z_rescale(R, ctx.field.inv(z)))
        assert back_pair == pair

        # the rebuilt algebra is isomorphic to the original
        rebuilt = build_simple(ctx, back_pair)
        iso = is_isomorphic(V, rebuilt)
        assert iso is not None and iso is not UNDECIDED

        # full serialization round trip of the twisted algebra
        doc = json.loads(dump_json(emit_instance(W.context, algebra=W)))
        parsed = parse_instance(doc)
        assert parsed.algebra.mult == W.mult
        assert parsed.algebra.phi == W.phi
        assert verify(parsed.algebra).passed
        swept += 1
    assert swept >= 12
