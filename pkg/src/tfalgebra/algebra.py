"""The twisted graded Frobenius algebra data type.

An algebra lives over a context (G, A, kappa, K): a finite group G, a finite
G-module A, a normalized 3-cocycle kappa on G with values in A, and an exact
scalar field K.  The carrier is a G-graded family of finite-dimensional
K-spaces V_a with

* a multiplication tensor per component pair (associative up to the
  kappa-value acting on the target component),
* an action of A on every component (through which all kappa-values act),
* a distinguished unit vector in the identity component,
* a symmetric inner product on the identity component, and
* a conjugation family phi[b] mapping V_a -> V_{b a b^-1}.

Blocks use the row-as-image convention: row i of ``phi[b][a]`` is the image
of the i-th basis vector of V_a.  The constructor validates shapes only; the
axioms themselves are the verifier's job, so that perturbed algebras can be
represented and diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochains import Cochain, is_normalized
from .errors import NotHomogeneous, NotNormalized, ShapeMismatch, ZeroScale
from .fields import Field
from .gmodule import GModule
from .groups import FiniteGroup
from .linalg import Matrix, apply_map


@dataclass(frozen=True)
class AlgebraContext:
    """The fixed data (G, A, kappa, K) an algebra is defined over."""

    group: FiniteGroup
    module: GModule
    kappa: Cochain
    field: Field

    def __post_init__(self):
        if self.module.group != self.group:
            raise ShapeMismatch("coefficient module is defined over a different group")
        if self.kappa.module != self.module or self.kappa.degree != 3:
            raise ShapeMismatch("twisting cochain must be a degree-3 cochain over A")
        if not is_normalized(self.kappa):
            raise NotNormalized("twisting 3-cocycle must be normalized")

    @property
    def identity(self) -> int:
        return self.group.identity

    def kappa_value(self, a: int, b: int, c: int) -> tuple[int, ...]:
        return self.kappa.table[(a, b, c)]

    def describe(self) -> str:
        return (
            f"|G|={self.group.order}, A={self.module.moduli}, "
            f"field={self.field!r}, twisted={'yes' if not self.kappa.is_trivial() else 'no'}"
        )


def trivial_context(group: FiniteGroup, module: GModule, field: Field) -> AlgebraContext:
    return AlgebraContext(group, module, Cochain.trivial(module, 3), field)


class TFAlgebra:
    """Graded carrier with multiplication, module action, unit, form, conjugations.

    Data layout (all dense, indexed by group-element indices):

    ``dims[a]``            dimension of V_a (0 allowed)
    ``mult[(a, b)]``       list[da][db] of target vectors (length dims[ab])
    ``a_action[(a, x)]``   Matrix dims[a] x dims[a], for every x in A
    ``unit``               vector of length dims[identity]
    ``eta``                Matrix dims[identity] square
    ``phi[(b, a)]``        Matrix dims[a] x dims[b a b^-1]
    """

    __slots__ = ("context", "dims", "mult", "a_action", "unit", "eta", "phi")

    def __init__(self, context: AlgebraContext, dims, mult, a_action, unit, eta, phi):
        self.context = context
        G = context.group
        F = context.field
        A = context.module
        self.dims = tuple(int(dims[g]) for g in G.elements())
        if any(d < 0 for d in self.dims):
            raise ShapeMismatch("negative dimension")

        e = G.identity
        de = self.dims[e]

        self.mult = {}
        for a in G.elements():
            for b in G.elements():
                try:
                    tensor = mult[(a, b)]
                except KeyError:
                    raise ShapeMismatch(f"missing multiplication tensor for ({a}, {b})")
                da, db, dab = self.dims[a], self.dims[b], self.dims[G.mul(a, b)]
                tensor = [[list(vec) for vec in row] for row in tensor]
                if len(tensor) != da or any(len(row) != db for row in tensor):
                    raise ShapeMismatch(f"multiplication tensor ({a}, {b}) has wrong shape")
                for row in tensor:
                    for vec in row:
                        if len(vec) != dab:
                            raise ShapeMismatch(
                                f"multiplication tensor ({a}, {b}) target length != {dab}"
                            )
                self.mult[(a, b)] = tensor

        self.a_action = {}
        for a in G.elements():
            for x in A.elements():
                try:
                    Mx = a_action[(a, x)]
                except KeyError:
                    raise ShapeMismatch(f"missing module action for component {a}, element {x}")
                M = Mx if isinstance(Mx, Matrix) else Matrix(F, Mx)
                if M.nrows != self.dims[a] or M.ncols != self.dims[a]:
                    raise ShapeMismatch(f"module action on component {a} is not square")
                self.a_action[(a, x)] = M

        self.unit = list(unit)
        if len(self.unit) != de:
            raise ShapeMismatch("unit vector length != dim of identity component")

        self.eta = eta if isinstance(eta, Matrix) else Matrix(F, eta)
        if self.eta.nrows != de or self.eta.ncols != de:
            raise ShapeMismatch("inner product matrix must be square on the identity component")

        self.phi = {}
        for b in G.elements():
            for a in G.elements():
                try:
                    Mb = phi[(b, a)]
                except KeyError:
                    raise ShapeMismatch(f"missing conjugation block for (b={b}, a={a})")
                tgt = self.dims[G.conj(b, a)]
                M = Mb if isinstance(Mb, Matrix) else Matrix(F, Mb, ncols=tgt)
                if M.nrows == 0:
                    M = Matrix(F, [], ncols=tgt)
                if M.nrows != self.dims[a] or (M.nrows > 0 and M.ncols != tgt):
                    raise ShapeMismatch(
                        f"conjugation block (b={b}, a={a}) must be {self.dims[a]} x {tgt}"
                    )
                self.phi[(b, a)] = M

    # -- arithmetic on graded vectors -----------------------------------------
    def multiply(self, a: int, u: list, b: int, v: list) -> list:
        """Product of u in V_a with v in V_b, landing in V_{ab}."""
        F = self.context.field
        G = self.context.group
        tensor = self.mult[(a, b)]
        out = [F.zero] * self.dims[G.mul(a, b)]
        for i, ui in enumerate(u):
            if F.is_zero(ui):
                continue
            for j, vj in enumerate(v):
                if F.is_zero(vj):
                    continue
                coeff = F.mul(ui, vj)
                tgt = tensor[i][j]
                for t, w in enumerate(tgt):
                    if not F.is_zero(w):
                        out[t] = F.add(out[t], F.mul(coeff, w))
        return out

    def act(self, a: int, x: tuple, v: list) -> list:
        """The module element x acting on v in V_a."""
        return apply_map(self.a_action[(a, x)], v)

    def conjugate(self, b: int, a: int, v: list) -> list:
        """phi_b applied to v in V_a."""
        return apply_map(self.phi[(b, a)], v)

    def basis(self, a: int):
        F = self.context.field
        d = self.dims[a]
        for i in range(d):
            yield [F.one if j == i else F.zero for j in range(d)]

    def pairing_matrix(self, a: int) -> Matrix:
        """The form V_a x V_{a^-1} -> K, (u, v) -> eta(u v, unit)."""
        F = self.context.field
        G = self.context.group
        ainv = G.inv(a)
        rows = []
        for u in self.basis(a):
            row = []
            for v in self.basis(ainv):
                row.append(self.eta_pair(a, u, ainv, v))
            rows.append(row)
        return Matrix(F, rows, ncols=self.dims[ainv])

    def eta_pair(self, a: int, u: list, ainv: int, v: list):
        """eta(u v tensor unit) for u in V_a, v in V_{a^-1}."""
        F = self.context.field
        prod = self.multiply(a, u, ainv, v)
        acc = F.zero
        for i, x in enumerate(prod):
            if F.is_zero(x):
                continue
            row = self.eta.rows[i]
            for j, w in enumerate(self.unit):
                if not F.is_zero(w):
                    acc = F.add(acc, F.mul(x, F.mul(row[j], w)))
        return acc

    # -- misc -------------------------------------------------------------------
    def total_dim(self) -> int:
        return sum(self.dims)

    def replace(self, **kw) -> "TFAlgebra":
        """Copy with some raw fields swapped (used by rescaling and mutation tests)."""
        data = {
            "context": self.context,
            "dims": {g: self.dims[g] for g in self.context.group.elements()},
            "mult": self.mult,
            "a_action": self.a_action,
            "unit": self.unit,
            "eta": self.eta,
            "phi": self.phi,
        }
        data.update(kw)
        return TFAlgebra(**data)

    def __repr__(self):
        return f"TFAlgebra(dims={self.dims})"


def z_rescale(V: TFAlgebra, z) -> TFAlgebra:
    """Multiply the inner product by a nonzero scalar, keeping the rest."""
    F = V.context.field
    if F.is_zero(z):
        raise ZeroScale("rescaling scalar must be nonzero")
    return V.replace(eta=V.eta.scale(z))


def mu(V: TFAlgebra, c_component: int, c_vector: list) -> dict[int, Matrix]:
    """Left multiplication by a homogeneous vector, as one block per component.

    Returns {a: block of V_a -> V_{c a}} in the row-as-image convention.
    """
    G = V.context.group
    F = V.context.field
    if len(c_vector) != V.dims[c_component]:
        raise NotHomogeneous(
            f"vector of length {len(c_vector)} is not in component {c_component}"
        )
    blocks = {}
    for a in G.elements():
        tgt = V.dims[G.mul(c_component, a)]
        rows = [V.multiply(c_component, c_vector, a, u) for u in V.basis(a)]
        blocks[a] = Matrix(F, rows, ncols=tgt)
    return blocks
