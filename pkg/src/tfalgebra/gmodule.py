"""Finite abelian coefficient groups with a left action of a finite group.

The coefficient group A is presented as a product of cyclic factors
Z/m_1 x ... x Z/m_k.  Elements are exponent tuples (written multiplicatively
in the algebra layer: the product of two elements adds exponents).  The
action of a group element is an automorphism given by an integer matrix;
column j of the matrix says where the j-th cyclic generator goes.

The same class doubles as the additive avatar of a finite cyclic scalar
group: F_p* with trivial action is ``GModule(G, (p-1,))`` after taking
discrete logs.
"""

from __future__ import annotations

import itertools
from math import prod

from .errors import NotAModule, TooLarge
from .groups import FiniteGroup

DEFAULT_ENUM_CAP = 1 << 16


class GModule:
    """A = prod Z/m_i with a left action of ``group`` by automorphisms.

    ``action`` maps each group element index to a k x k integer matrix M;
    the action sends exponent vector a to (M @ a) mod moduli, i.e.
    result[i] = sum_j M[i][j] * a[j] mod m_i.  ``None`` means the trivial
    action.

    >>> from .groups import cyclic_group
    >>> A = GModule(cyclic_group(2), (3,), action={0: [[1]], 1: [[2]]})
    >>> A.act(1, (1,))
    (2,)
    """

    __slots__ = ("group", "moduli", "action", "size", "rank")

    def __init__(self, group: FiniteGroup, moduli, action=None, enum_cap: int = DEFAULT_ENUM_CAP):
        moduli = tuple(int(m) for m in moduli)
        for m in moduli:
            if m < 1:
                raise NotAModule(f"cyclic factor modulus {m} must be >= 1")
        self.group = group
        self.moduli = moduli
        self.rank = len(moduli)
        self.size = prod(moduli) if moduli else 1

        k = self.rank
        ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
        if action is None:
            mats = {g: ident for g in group.elements()}
        else:
            mats = {}
            for g in group.elements():
                if g not in action:
                    raise NotAModule(f"action matrix missing for group element {g}", witness=(g,))
                M = tuple(tuple(int(x) for x in row) for row in action[g])
                if len(M) != k or any(len(row) != k for row in M):
                    raise NotAModule(f"action matrix for element {g} is not {k}x{k}", witness=(g,))
                mats[g] = M
        self.action = mats
        self._validate(enum_cap)

    # -- validation ------------------------------------------------------------
    def _validate(self, enum_cap: int) -> None:
        G, k = self.group, self.rank
        if self.action[G.identity] != tuple(
            tuple(int(i == j) for j in range(k)) for i in range(k)
        ):
            raise NotAModule("identity element must act as the identity matrix", witness=(G.identity,))
        # well-definedness: column j is killed by m_j in every row's modulus
        for g in G.elements():
            M = self.action[g]
            for i in range(k):
                for j in range(k):
                    if (M[i][j] * self.moduli[j]) % self.moduli[i] != 0:
                        raise NotAModule(
                            f"action of {g} is not well defined at entry ({i},{j})",
                            witness=(g, i, j),
                        )
        # homomorphism: matrix(a*b) == matrix(a) . matrix(b) mod row moduli
        for a in G.elements():
            for b in G.elements():
                Mab = self.action[G.mul(a, b)]
                Ma, Mb = self.action[a], self.action[b]
                for i in range(k):
                    for j in range(k):
                        s = sum(Ma[i][t] * Mb[t][j] for t in range(k))
                        if (s - Mab[i][j]) % self.moduli[i] != 0:
                            raise NotAModule(
                                f"action is not a homomorphism at ({a},{b})",
                                witness=(a, b, i, j),
                            )
        # bijectivity of each action map, checked extensionally
        if self.size > enum_cap:
            raise TooLarge(
                f"module of size {self.size} exceeds the validation cap {enum_cap}"
            )
        elems = list(self.elements())
        for g in G.elements():
            if len({self.act(g, a) for a in elems}) != self.size:
                raise NotAModule(f"action of {g} is not invertible", witness=(g,))

    # -- element operations ------------------------------------------------------
    def one(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def mul(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def inv(self, a) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def power(self, a, n: int) -> tuple[int, ...]:
        return tuple((x * n) % m for x, m in zip(a, self.moduli))

    def act(self, g: int, a) -> tuple[int, ...]:
        M = self.action[g]
        return tuple(
            sum(M[i][j] * a[j] for j in range(self.rank)) % self.moduli[i]
            for i in range(self.rank)
        )

    def check(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == self.rank
            and all(isinstance(x, int) and 0 <= x < m for x, m in zip(a, self.moduli))
        )

    def elements(self):
        """All elements in mixed-radix (lexicographic) order."""
        return itertools.product(*(range(m) for m in self.moduli))

    def index(self, a) -> int:
        idx = 0
        for x, m in zip(a, self.moduli):
            idx = idx * m + x
        return idx

    def element(self, idx: int) -> tuple[int, ...]:
        out = []
        for m in reversed(self.moduli):
            idx, r = divmod(idx, m)
            out.append(r)
        return tuple(reversed(out))

    def generators(self) -> list[tuple[int, ...]]:
        return [
            tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)
        ]

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    def has_trivial_action(self) -> bool:
        k = self.rank
        ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
        return all(self.action[g] == ident for g in self.group.elements())

    def __eq__(self, other):
        return (
            isinstance(other, GModule)
            and other.group == self.group
            and other.moduli == self.moduli
            and other.action == self.action
        )

    def __hash__(self):
        return hash((self.group, self.moduli, tuple(sorted(self.action.items()))))

    def __repr__(self):
        return f"GModule(moduli={self.moduli}, |G|={self.group.order})"


def trivial_module(group: FiniteGroup) -> GModule:
    """The one-element coefficient group."""
    return GModule(group, ())


def cyclic_module(group: FiniteGroup, m: int, action=None) -> GModule:
    return GModule(group, (m,), action=action)
