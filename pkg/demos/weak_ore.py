"""Arithmetic in the weak Ore extension of upper triangular matrices."""

from wreathlab.ore import (OrePoly, ore_check_properties, ore_psi, ore_tilde_report, ore_unit, ore_wreath_mult,
                           triangular_pqqd, validate_pqqd)

d = triangular_pqqd()
validate_pqqd(d).raise_if_failed()

names = ["E11", "E12", "E22"]
for n in range(3):
    for i, name in enumerate(names):
        print(f"psi(X^{n} (x) {name}) = {ore_psi(d, n, d.B.e(i))}")

one = ore_unit(d)
x = ore_psi(d, 1, d.B.unit)
print("unit:", one)
print("X~ = psi(X (x) 1):", x)

power = one
for n in range(1, 5):
    power = ore_wreath_mult(d, power, x)
    print(f"X~^{n} =", power)

f = OrePoly.monomial([1, 0, 0], 1)     # E11 X
g = OrePoly.monomial([0, 0, 1], 0)     # E22
print("(E11 X)(E22) =", ore_wreath_mult(d, f, g))

for rep in (ore_check_properties(d, 6), ore_tilde_report(d, 4)):
    print(rep.subject, "PASS" if rep.ok else "FAIL")
