"""Upper triangular 2x2 matrices rebuilt as a weak wreath product of two copies of kZ2."""

from wreathlab.factorization import fact_of_wdl, wdl_of_fact
from wreathlab.gallery.triangle import TENSORS, triangle_data, triangle_report
from wreathlab.wdl import psibar, weak_wreath

fact, w = triangle_data()

print("psi on kZ2 (x) kZ2, basis", ", ".join(TENSORS))
for j, t in enumerate(TENSORS):
    print(f"  psi({t}) =", [str(x) for x in w.psi.column(j)])

wp = weak_wreath(w)
print("rank of psibar:", wp.splitting.rank)
print("psibar:")
print(psibar(w))

# the factorization reproduces the law, and the law reproduces a factorization
assert wdl_of_fact(fact).psi == w.psi
assert wdl_of_fact(fact_of_wdl(w)).psi == w.psi

rep = triangle_report()
print(rep.subject, "PASS" if rep.ok else "FAIL", f"({len(rep.checks)} checks)")
