"""A weak smash product over the pair groupoid on two objects, rebuilt over its base algebra."""

from wreathlab.gallery.bialgebra import cap_maps, pair_groupoid, pair_groupoid_module, smash_data
from wreathlab.wdl import is_strict, weak_wreath

wb, m = pair_groupoid(2), pair_groupoid_module(2)
cap, cap_bar = cap_maps(wb)
print("cap:")
print(cap)
print("cap_bar:")
print(cap_bar)

d = smash_data(wb, m)
print("base algebra dimension:", d.R.dim)
print("strict:", is_strict(d.wdl).ok)
print("weak smash product dimension:", weak_wreath(d.wdl).product.dim, "inside", d.wdl.A.dim * d.wdl.B.dim)
for c in d.report.checks:
    if "lifted" in c.name or "projects" in c.name:
        print(f"  {c.name}: {'PASS' if c.passed else 'FAIL'}")
print(d.report.subject, "PASS" if d.report.ok else "FAIL")
