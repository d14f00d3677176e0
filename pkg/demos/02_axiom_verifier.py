"""The axiom verifier at work: clean reports and pinpointed damage.

Builds a few structurally different algebras, shows their full verification
reports, then corrupts single entries and watches the verifier name the
broken axiom.
"""

from tfalgebra import PrimeField, verify
from tfalgebra.linalg import Matrix
from tfalgebra.samples import (
    dual_number_group_ring,
    product_field_swap_algebra,
    truncated_polynomial_algebra,
)

F5 = PrimeField(5)

print("== A commutative Frobenius algebra: F5[t]/t^3 ==")
V = truncated_polynomial_algebra(F5, 3)
for line in verify(V).to_lines():
    print("  " + line)

print()
print("== Damage report: zero out one inner-product entry ==")
rows = [list(r) for r in V.eta.rows]
rows[1][1] = 0
broken = V.replace(eta=Matrix(F5, rows))
report = verify(broken)
print(f"  overall passed: {report.passed}")
print(f"  failing tags:   {report.failing_tags()}")
print(f"  first failure:  {report.first_failure().tag}")

print()
print("== Damage report: make the nilpotent square associate wrongly ==")
import copy

mult = {k: copy.deepcopy(t) for k, t in V.mult.items()}
mult[(0, 0)][2][2][0] = 1  # t^2 * t^2 = 1 breaks associativity alone
broken = V.replace(mult=mult)
print(f"  failing tags: {verify(broken).failing_tags()}")

print()
print("== A graded example with a moving conjugation ==")
W = product_field_swap_algebra(F5)
print(f"  dims per component: {W.dims}")
print(f"  conjugation on the identity component: {W.phi[(1, 0)].rows}")
print(f"  verdict: {'PASS' if verify(W).passed else 'FAIL'}")

print()
print("== The group ring of Z/2 over the dual numbers ==")
D = dual_number_group_ring(F5)
report = verify(D)
print(f"  dims {D.dims}, verdict {'PASS' if report.passed else 'FAIL'}")
print(f"  machine summary keys: {sorted(report.to_summary())}")
