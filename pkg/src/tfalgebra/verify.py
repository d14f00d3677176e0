"""Exhaustive axiom verification for twisted graded Frobenius algebras.

Every axiom is multilinear in its vector arguments, so quantifiers over
vectors reduce to basis indices; quantifiers over group and module elements
are run in full.  The verifier therefore decides each axiom exactly.

Checks are reported in a fixed order under fixed tags:

    bimodule              module action: homomorphism, invertible, grading law
    associativity         twisted associativity of multiplication
    unit                  two-sided unit
    eta-symmetric         inner product symmetry
    eta-nondegenerate     inner product rank
    pairing-nondegenerate induced pairing V_a x V_{a^-1} full rank
    phi-module            conjugation intertwines the module action
    phi-fix               conjugation fixes its own component pointwise
    phi-unit              conjugation fixes the unit
    phi-commute           commutation law v u = phi_b(u) v
    phi-isometry          conjugation preserves the inner product
    phi-mult              conjugation is multiplicative up to an A-scalar
    phi-compose           composition law with its A-scalar, and invertibility
    trace                 the two twisted traces agree
    lemma-1.1-a .. -d     pairing compatibility identities (consequences)

plus internal consistency probes (tags ``internal-*``) re-checking facts that
follow from the axioms: module bilinearity of multiplication, triviality of
the identity conjugation, and the scalar form of phi on inverse components.
A failed consequence with all primary axioms green indicates an internal
inconsistency of the verifier or the data, and is flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import TFAlgebra
from .linalg import Matrix, apply_map, map_trace

PRIMARY_TAGS = (
    "bimodule",
    "associativity",
    "unit",
    "eta-symmetric",
    "eta-nondegenerate",
    "pairing-nondegenerate",
    "phi-module",
    "phi-fix",
    "phi-unit",
    "phi-commute",
    "phi-isometry",
    "phi-mult",
    "phi-compose",
    "trace",
)

LEMMA_TAGS = ("lemma-1.1-a", "lemma-1.1-b", "lemma-1.1-c", "lemma-1.1-d")

INTERNAL_TAGS = (
    "internal-bilinearity",
    "internal-phi-identity",
    "internal-phi-inverse-scalar",
)

ALL_TAGS = PRIMARY_TAGS + LEMMA_TAGS + INTERNAL_TAGS

# the fifteen families the mutation suite quantifies over: the lemma
# identities count as a single family
TAG_FAMILIES = PRIMARY_TAGS + ("lemma-1.1",)


def tag_family(tag: str) -> str | None:
    if tag in PRIMARY_TAGS:
        return tag
    if tag in LEMMA_TAGS:
        return "lemma-1.1"
    return None


@dataclass(frozen=True)
class CheckResult:
    tag: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    @property
    def internal(self) -> bool:
        return self.tag in INTERNAL_TAGS or self.tag in LEMMA_TAGS


@dataclass
class VerificationReport:
    """Per-axiom outcomes, in canonical check order."""

    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing_tags(self) -> list[str]:
        seen = []
        for c in self.checks:
            if not c.passed and c.tag not in seen:
                seen.append(c.tag)
        return seen

    def failing_families(self) -> list[str]:
        out = []
        for tag in self.failing_tags():
            fam = tag_family(tag)
            if fam is not None and fam not in out:
                out.append(fam)
        return out

    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def internal_inconsistency(self) -> bool:
        """A consequence failed although every primary axiom passed."""
        primary_ok = all(c.passed for c in self.checks if c.tag in PRIMARY_TAGS)
        return primary_ok and any(not c.passed for c in self.checks if c.internal)

    def result(self, tag: str) -> CheckResult:
        for c in self.checks:
            if c.tag == tag:
                return c
        raise KeyError(tag)

    def to_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            where = "" if c.witness is None else f"  at {c.witness}"
            extra = f"  ({c.detail})" if c.detail and not c.passed else ""
            lines.append(f"{status:4}  {c.tag}{where}{extra}")
        verdict = "PASS" if self.passed else "FAIL"
        if self.internal_inconsistency():
            verdict += " (internal inconsistency: a consequence failed with all axioms green)"
        lines.append(f"overall: {verdict}")
        return lines

    def to_summary(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "internal_inconsistency": self.internal_inconsistency(),
            "checks": [
                {
                    "tag": c.tag,
                    "passed": c.passed,
                    "witness": list(c.witness) if c.witness is not None else None,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------
# scalar helpers
# ---------------------------------------------------------------------------


def _l_value(V: TFAlgebra, b: int, a: int, g: int) -> tuple:
    """The A-element by which conjugation fails to be multiplicative.

    For u in V_a, v in V_g:  phi_b(u) phi_b(v) = l . phi_b(u v).
    """
    G, A = V.context.group, V.context.module
    kap = V.context.kappa_value
    ca, cg = G.conj(b, a), G.conj(b, g)
    t1 = kap(ca, cg, b)
    t2 = A.inv(kap(ca, b, g))
    t3 = kap(b, a, g)
    return A.mul(A.mul(t1, t2), t3)


def _h_value(V: TFAlgebra, c: int, b: int, a: int) -> tuple:
    """The A-element relating phi_{cb} with phi_c . phi_b on V_a."""
    G, A = V.context.group, V.context.module
    kap = V.context.kappa_value
    cb = G.mul(c, b)
    t1 = kap(G.conj(cb, a), c, b)
    t2 = A.inv(kap(c, G.conj(b, a), b))
    t3 = kap(c, b, a)
    return A.mul(A.mul(t1, t2), t3)


def _vec_eq(F, u, v) -> bool:
    return all(F.sub(x, y) == F.zero for x, y in zip(u, v))


# ---------------------------------------------------------------------------
# individual checks; each yields CheckResult entries (one per tag)
# ---------------------------------------------------------------------------


def _check_bimodule(V: TFAlgebra) -> CheckResult:
    """Module action: rho_a(1)=id, homomorphism, invertible, grading law."""
    G, A, F = V.context.group, V.context.module, V.context.field
    one = A.one()
    for a in G.elements():
        d = V.dims[a]
        if V.a_action[(a, one)] != Matrix.identity(F, d):
            return CheckResult("bimodule", False, (a, one), "identity of A must act as id")
        for x in A.elements():
            M = V.a_action[(a, x)]
            if d and M.rank() != d:
                return CheckResult("bimodule", False, (a, x), "module action not invertible")
            # grading law: x acts as its a-twist on component a
            if M != V.a_action[(a, A.act(a, x))]:
                return CheckResult(
                    "bimodule", False, (a, x), "action of x and of (a.x) differ on V_a"
                )
            for y in A.elements():
                if M.mul(V.a_action[(a, y)]) != V.a_action[(a, A.mul(x, y))]:
                    return CheckResult(
                        "bimodule", False, (a, x, y), "action is not a homomorphism"
                    )
    return CheckResult("bimodule", True)


def _check_associativity(V: TFAlgebra) -> CheckResult:
    G, A, F = V.context.group, V.context.module, V.context.field
    for a in G.elements():
        for b in G.elements():
            ab = G.mul(a, b)
            for c in G.elements():
                abc = G.mul(ab, c)
                kap = V.context.kappa_value(a, b, c)
                for i, u in enumerate(V.basis(a)):
                    for j, v in enumerate(V.basis(b)):
                        uv = V.multiply(a, u, b, v)
                        for t, w in enumerate(V.basis(c)):
                            left = V.multiply(ab, uv, c, w)
                            vw = V.multiply(b, v, c, w)
                            right = V.multiply(a, u, G.mul(b, c), vw)
                            right = V.act(abc, kap, right)
                            if not _vec_eq(F, left, right):
                                return CheckResult(
                                    "associativity", False, (a, b, c, i, j, t)
                                )
    return CheckResult("associativity", True)


def _check_unit(V: TFAlgebra) -> CheckResult:
    G, F = V.context.group, V.context.field
    e = G.identity
    for a in G.elements():
        for i, u in enumerate(V.basis(a)):
            if not _vec_eq(F, V.multiply(e, V.unit, a, u), u):
                return CheckResult("unit", False, (a, i), "left unit fails")
            if not _vec_eq(F, V.multiply(a, u, e, V.unit), u):
                return CheckResult("unit", False, (a, i), "right unit fails")
    return CheckResult("unit", True)


def _check_eta_symmetric(V: TFAlgebra) -> CheckResult:
    if not V.eta.is_symmetric():
        n = V.eta.nrows
        for i in range(n):
            for j in range(n):
                if V.eta.rows[i][j] != V.eta.rows[j][i]:
                    return CheckResult("eta-symmetric", False, (i, j))
    return CheckResult("eta-symmetric", True)


def _check_eta_nondegenerate(V: TFAlgebra) -> CheckResult:
    d = V.dims[V.context.identity]
    if V.eta.rank() != d:
        return CheckResult(
            "eta-nondegenerate", False, (), f"rank {V.eta.rank()} < {d}"
        )
    return CheckResult("eta-nondegenerate", True)


def _check_pairing(V: TFAlgebra) -> CheckResult:
    G = V.context.group
    for a in G.elements():
        ainv = G.inv(a)
        if V.dims[a] != V.dims[ainv]:
            return CheckResult(
                "pairing-nondegenerate",
                False,
                (a,),
                f"dims {V.dims[a]} != {V.dims[ainv]} on inverse components",
            )
        P = V.pairing_matrix(a)
        if P.rank() != V.dims[a]:
            return CheckResult(
                "pairing-nondegenerate", False, (a,), f"pairing rank {P.rank()} < {V.dims[a]}"
            )
    return CheckResult("pairing-nondegenerate", True)


def _check_phi_module(V: TFAlgebra) -> CheckResult:
    """phi_b (x v) = (b.x) phi_b(v): block identity per (b, a, x)."""
    G, A = V.context.group, V.context.module
    for b in G.elements():
        for a in G.elements():
            blk = V.phi[(b, a)]
            tgt = G.conj(b, a)
            for x in A.elements():
                left = V.a_action[(a, x)].mul(blk)  # act by x, then conjugate
                right = blk.mul(V.a_action[(tgt, A.act(b, x))])
                if left != right:
                    return CheckResult("phi-module", False, (b, a, x))
    return CheckResult("phi-module", True)


def _check_phi_fix(V: TFAlgebra) -> CheckResult:
    G, F = V.context.group, V.context.field
    for b in G.elements():
        if V.phi[(b, b)] != Matrix.identity(F, V.dims[b]):
            return CheckResult("phi-fix", False, (b,))
    return CheckResult("phi-fix", True)


def _check_phi_unit(V: TFAlgebra) -> CheckResult:
    G, F = V.context.group, V.context.field
    e = G.identity
    for b in G.elements():
        if not _vec_eq(F, V.conjugate(b, e, V.unit), V.unit):
            return CheckResult("phi-unit", False, (b,))
    return CheckResult("phi-unit", True)


def _check_phi_commute(V: TFAlgebra) -> CheckResult:
    """v u = phi_b(u) v for v in V_b, u anywhere."""
    G, F = V.context.group, V.context.field
    for b in G.elements():
        for a in G.elements():
            for j, v in enumerate(V.basis(b)):
                for i, u in enumerate(V.basis(a)):
                    left = V.multiply(b, v, a, u)
                    w = V.conjugate(b, a, u)
                    right = V.multiply(G.conj(b, a), w, b, v)
                    if not _vec_eq(F, left, right):
                        return CheckResult("phi-commute", False, (b, a, j, i))
    return CheckResult("phi-commute", True)


def _check_phi_isometry(V: TFAlgebra) -> CheckResult:
    G = V.context.group
    e = G.identity
    for b in G.elements():
        blk = V.phi[(b, e)]
        # eta(phi u, phi v) == eta(u, v) as a matrix identity
        if blk.mul(V.eta).mul(blk.transpose()) != V.eta:
            return CheckResult("phi-isometry", False, (b,))
    return CheckResult("phi-isometry", True)


def _check_phi_mult(V: TFAlgebra) -> CheckResult:
    G, F = V.context.group, V.context.field
    for b in G.elements():
        for a in G.elements():
            for g in G.elements():
                lval = _l_value(V, b, a, g)
                tgt = G.conj(b, G.mul(a, g))
                for i, u in enumerate(V.basis(a)):
                    pu = V.conjugate(b, a, u)
                    for j, v in enumerate(V.basis(g)):
                        pv = V.conjugate(b, g, v)
                        left = V.multiply(G.conj(b, a), pu, G.conj(b, g), pv)
                        uv = V.multiply(a, u, g, v)
                        right = V.act(tgt, lval, V.conjugate(b, G.mul(a, g), uv))
                        if not _vec_eq(F, left, right):
                            return CheckResult("phi-mult", False, (b, a, g, i, j))
    return CheckResult("phi-mult", True)


def _check_phi_compose(V: TFAlgebra) -> CheckResult:
    G = V.context.group
    # invertibility first: the composition law forces it
    for b in G.elements():
        for a in G.elements():
            blk = V.phi[(b, a)]
            if blk.nrows != blk.ncols:
                return CheckResult(
                    "phi-compose", False, (b, a), "conjugation block is not square"
                )
            if blk.nrows and blk.rank() != blk.nrows:
                return CheckResult(
                    "phi-compose", False, (b, a), "conjugation block is singular"
                )
    for c in G.elements():
        for b in G.elements():
            cb = G.mul(c, b)
            for a in G.elements():
                hval = _h_value(V, c, b, a)
                left = V.phi[(cb, a)]
                mid = V.phi[(b, a)].mul(V.phi[(c, G.conj(b, a))])
                right = mid.mul(V.a_action[(G.conj(cb, a), hval)])
                if left != right:
                    return CheckResult("phi-compose", False, (c, b, a))
    return CheckResult("phi-compose", True)


def _check_trace(V: TFAlgebra) -> CheckResult:
    """Two twisted traces agree for every homogeneous left multiplier."""
    G, F = V.context.group, V.context.field
    for a in G.elements():
        for b in G.elements():
            comm = G.commutator(a, b)
            kap1 = V.context.kappa_value(comm, b, a)
            kap2 = V.context.kappa_value(comm, G.conj(b, a), b)
            phi_ab = V.phi[(a, b)]
            inv = phi_ab.inverse() if phi_ab.nrows else Matrix(F, [], ncols=0)
            for t, cvec in enumerate(V.basis(comm)):
                # left side: V_a -> V_a, conjugate by b, multiply by c, act by kappa
                left_block = V.phi[(b, a)]
                rows = [
                    V.act(a, kap1, V.multiply(comm, cvec, G.conj(b, a), apply_map(left_block, u)))
                    for u in V.basis(a)
                ]
                lhs = map_trace(Matrix(F, rows, ncols=V.dims[a])) if V.dims[a] else F.zero
                # right side: V_b -> V_b, multiply by c, un-conjugate by a, act by kappa
                if inv is None:
                    return CheckResult(
                        "trace", False, (a, b, t), "conjugation block is singular"
                    )
                rows = [
                    V.act(b, kap2, apply_map(inv, V.multiply(comm, cvec, b, u)))
                    for u in V.basis(b)
                ]
                rhs = map_trace(Matrix(F, rows, ncols=V.dims[b])) if V.dims[b] else F.zero
                if lhs != rhs:
                    return CheckResult("trace", False, (a, b, t))
    return CheckResult("trace", True)


def _check_lemma_a(V: TFAlgebra) -> CheckResult:
    G, A, F = V.context.group, V.context.module, V.context.field
    for a in G.elements():
        ainv = G.inv(a)
        for x in A.elements():
            for i, u in enumerate(V.basis(a)):
                xu = V.act(a, x, u)
                for j, v in enumerate(V.basis(ainv)):
                    xv = V.act(ainv, x, v)
                    if V.eta_pair(a, xu, ainv, v) != V.eta_pair(a, u, ainv, xv):
                        return CheckResult("lemma-1.1-a", False, (a, x, i, j))
    return CheckResult("lemma-1.1-a", True)


def _check_lemma_b(V: TFAlgebra) -> CheckResult:
    G = V.context.group
    for a in G.elements():
        ainv = G.inv(a)
        kap = V.context.kappa_value(ainv, a, ainv)
        for i, u in enumerate(V.basis(a)):
            for j, v in enumerate(V.basis(ainv)):
                left = V.eta_pair(a, u, ainv, v)
                tv = V.act(ainv, V.context.module.inv(kap), v)
                right = V.eta_pair(ainv, tv, a, u)
                if left != right:
                    return CheckResult("lemma-1.1-b", False, (a, i, j))
    return CheckResult("lemma-1.1-b", True)


def _check_lemma_c(V: TFAlgebra) -> CheckResult:
    G = V.context.group
    for b in G.elements():
        for a in G.elements():
            ainv = G.inv(a)
            lval = _l_value(V, b, a, ainv)
            ca, cainv = G.conj(b, a), G.conj(b, ainv)
            for i, u in enumerate(V.basis(a)):
                pu = V.conjugate(b, a, u)
                lu = V.act(a, lval, u)
                for j, v in enumerate(V.basis(ainv)):
                    pv = V.conjugate(b, ainv, v)
                    left = V.eta_pair(ca, pu, cainv, pv)
                    right = V.eta_pair(a, lu, ainv, v)
                    if left != right:
                        return CheckResult("lemma-1.1-c", False, (b, a, i, j))
    return CheckResult("lemma-1.1-c", True)


def _check_lemma_d(V: TFAlgebra) -> CheckResult:
    G = V.context.group
    for a in G.elements():
        for b in G.elements():
            ab = G.mul(a, b)
            abinv = G.inv(ab)
            kap = V.context.kappa_value(a, b, abinv)
            for i, u in enumerate(V.basis(a)):
                ku = V.act(a, kap, u)
                for j, v in enumerate(V.basis(b)):
                    uv = V.multiply(a, u, b, v)
                    for t, w in enumerate(V.basis(abinv)):
                        left = V.eta_pair(ab, uv, abinv, w)
                        vw = V.multiply(b, v, abinv, w)
                        right = V.eta_pair(a, ku, G.inv(a), vw)
                        if left != right:
                            return CheckResult("lemma-1.1-d", False, (a, b, i, j, t))
    return CheckResult("lemma-1.1-d", True)


def _check_bilinearity(V: TFAlgebra) -> CheckResult:
    """x(uv) = (xu)v = u(xv): the module acts by central scalars on products."""
    G, A, F = V.context.group, V.context.module, V.context.field
    for a in G.elements():
        for b in G.elements():
            ab = G.mul(a, b)
            for x in A.elements():
                for i, u in enumerate(V.basis(a)):
                    xu = V.act(a, x, u)
                    for j, v in enumerate(V.basis(b)):
                        uv = V.multiply(a, u, b, v)
                        whole = V.act(ab, x, uv)
                        left = V.multiply(a, xu, b, v)
                        if not _vec_eq(F, whole, left):
                            return CheckResult(
                                "internal-bilinearity", False, (a, b, x, i, j), "x(uv) != (xu)v"
                            )
                        xv = V.act(b, x, v)
                        right = V.multiply(a, u, b, xv)
                        if not _vec_eq(F, whole, right):
                            return CheckResult(
                                "internal-bilinearity", False, (a, b, x, i, j), "x(uv) != u(xv)"
                            )
    return CheckResult("internal-bilinearity", True)


def _check_phi_identity(V: TFAlgebra) -> CheckResult:
    G, F = V.context.group, V.context.field
    e = G.identity
    for a in G.elements():
        if V.phi[(e, a)] != Matrix.identity(F, V.dims[a]):
            return CheckResult("internal-phi-identity", False, (a,))
    return CheckResult("internal-phi-identity", True)


def _check_phi_inverse_scalar(V: TFAlgebra) -> CheckResult:
    """On V_{a^-1}, phi_a acts by the inverse kappa(a^-1, a, a^-1)-scalar."""
    G, A, F = V.context.group, V.context.module, V.context.field
    for a in G.elements():
        ainv = G.inv(a)
        kap = A.inv(V.context.kappa_value(ainv, a, ainv))
        expected = V.a_action[(ainv, kap)]
        if V.phi[(a, ainv)] != expected:
            return CheckResult("internal-phi-inverse-scalar", False, (a,))
    return CheckResult("internal-phi-inverse-scalar", True)


_CHECKS = (
    _check_bimodule,
    _check_associativity,
    _check_unit,
    _check_eta_symmetric,
    _check_eta_nondegenerate,
    _check_pairing,
    _check_phi_module,
    _check_phi_fix,
    _check_phi_unit,
    _check_phi_commute,
    _check_phi_isometry,
    _check_phi_mult,
    _check_phi_compose,
    _check_trace,
    _check_lemma_a,
    _check_lemma_b,
    _check_lemma_c,
    _check_lemma_d,
    _check_bilinearity,
    _check_phi_identity,
    _check_phi_inverse_scalar,
)


def verify(V: TFAlgebra) -> VerificationReport:
    """Run every axiom and consequence check; never raises on bad data."""
    report = VerificationReport()
    for check in _CHECKS:
        report.checks.append(check(V))
    return report
