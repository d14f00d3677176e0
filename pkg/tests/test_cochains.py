"""Coboundary formulas, cocycle and normalization predicates, normalization."""

import random

import pytest

from tfalgebra.cochains import (
    Cochain,
    coboundary,
    is_cocycle,
    is_normalized,
    normalize_cocycle,
)
from tfalgebra.errors import DegreeOutOfRange
from tfalgebra.gmodule import GModule, cyclic_module
from tfalgebra.groups import cyclic_group, symmetric_group


def sign_action_module(group, m):
    """Z/m with inversion on odd permutations (trivial when m <= 2)."""
    action = {}
    for g in group.elements():
        # in S3 with lexicographic permutation order, parity comes from the table
        action[g] = [[1]]
    return GModule(group, (m,), action=action)


def s3_sign_module(m):
    """Z/m with g acting by inversion iff g is an odd permutation of S3."""
    import itertools

    G = symmetric_group(3)
    perms = sorted(itertools.permutations(range(3)))

    def parity(p):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        return inv % 2

    action = {g: [[(m - 1) if parity(perms[g]) else 1]] for g in G.elements()}
    return GModule(G, (m,), action=action)


CONTEXTS = [
    cyclic_module(cyclic_group(2), 4),
    cyclic_module(cyclic_group(3), 3),
    s3_sign_module(2),
]


def test_constant_trivial_cochain_has_trivial_coboundary():
    for A in CONTEXTS:
        for n in range(4):
            c = Cochain.trivial(A, n)
            assert coboundary(c).is_trivial()


def test_degree_two_normalized_example():
    # Z/2, Z/2 coefficients: normalized table with w(s, s) = a has
    # d2(w)(s, s, s) = w(s,s) - w(0,s) + w(s,0) - w(s,s) = 0
    A = cyclic_module(cyclic_group(2), 2)
    w = Cochain(A, 2, {(1, 1): (1,)})
    d = coboundary(w)
    assert d.table[(1, 1, 1)] == (0,)


def test_coboundary_squares_to_trivial():
    rng = random.Random(20240803)
    count = 0
    for A in CONTEXTS:
        for n in (0, 1, 2):
            for _ in range(25):
                c = Cochain.random(A, n, rng)
                assert coboundary(coboundary(c)).is_trivial()
                count += 1
    assert count == 225


def test_coboundary_squares_to_trivial_exhaustive_tiny():
    """On instances small enough, run over every cochain rather than a sample."""
    import itertools

    tiny = [
        cyclic_module(cyclic_group(2), 2),
        GModule(cyclic_group(2), (3,), action={0: [[1]], 1: [[2]]}),
    ]
    for A in tiny:
        for n in (0, 1, 2):
            keys = list(A.group.tuples(n))
            if A.size ** len(keys) > 1 << 12:
                continue
            for values in itertools.product(list(A.elements()), repeat=len(keys)):
                c = Cochain(A, n, dict(zip(keys, values)))
                assert coboundary(coboundary(c)).is_trivial()


def test_degree_cap():
    A = cyclic_module(cyclic_group(2), 2)
    top = Cochain.trivial(A, 4)
    with pytest.raises(DegreeOutOfRange):
        coboundary(top)


def test_is_cocycle_nontrivial_example():
    # the nontrivial class on Z/2 with Z/2 coefficients: value a at (s,s,s)
    A = cyclic_module(cyclic_group(2), 2)
    kappa = Cochain(A, 3, {(1, 1, 1): (1,)})
    ok, witness = is_cocycle(kappa)
    assert ok and witness is None
    # a one-entry table that is not a cocycle, with witness
    bad = Cochain(A, 3, {(1, 1, 0): (1,)})
    ok, witness = is_cocycle(bad)
    assert not ok and witness is not None


def test_is_normalized():
    A = cyclic_module(cyclic_group(2), 2)
    assert is_normalized(Cochain.trivial(A, 3))
    assert is_normalized(Cochain(A, 3, {(1, 1, 1): (1,)}))
    assert not is_normalized(Cochain(A, 2, {(0, 1): (1,)}))
    with pytest.raises(DegreeOutOfRange):
        is_normalized(Cochain.trivial(A, 1))


def test_normalize_already_normalized_is_identity():
    A = cyclic_module(cyclic_group(2), 2)
    kappa = Cochain(A, 3, {(1, 1, 1): (1,)})
    k2, omega = normalize_cocycle(kappa)
    assert k2 == kappa
    assert omega.is_trivial()


def test_normalize_random_cocycles():
    """Shift normalized cocycles by random coboundaries and re-normalize."""
    rng = random.Random(99)
    for A in CONTEXTS:
        base = Cochain.trivial(A, 3)
        for _ in range(10):
            shift = coboundary(Cochain.random(A, 2, rng))
            kappa = shift.mul(base)
            assert is_cocycle(kappa)[0]
            k2, omega = normalize_cocycle(kappa)
            assert is_normalized(k2)
            assert is_cocycle(k2)[0]
            assert k2 == coboundary(omega).mul(kappa)


def test_normalize_preserves_class_with_nontrivial_start():
    A = cyclic_module(cyclic_group(2), 2)
    rng = random.Random(5)
    kappa0 = Cochain(A, 3, {(1, 1, 1): (1,)})
    for _ in range(10):
        shift = coboundary(Cochain.random(A, 2, rng))
        kappa = shift.mul(kappa0)
        k2, omega = normalize_cocycle(kappa)
        assert is_normalized(k2) and is_cocycle(k2)[0]
        # same class: the ratio to kappa0 must be a coboundary; over this tiny
        # module just enumerate all 2-cochains
        ratio = k2.mul(kappa0.inv())
        all_coboundaries = set()
        for bits in range(2 ** 4):
            table = {}
            for i, key in enumerate(A.group.tuples(2)):
                table[key] = ((bits >> i) & 1,)
            all_coboundaries.add(coboundary(Cochain(A, 2, table)))
        assert ratio in all_coboundaries
