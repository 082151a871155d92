"""Exact periods: the Kummer matrix, the residue on a circle of radius zero and I2.

Run with ``python3 demos/periods_tour.py``.
"""
from logcorners.cli.render import render_scalar
from logcorners.periods import (
    DoubleCopyConfigP1, KummerConfig, double_copy_p1, fourier_profile, i2_closed_form, i2_quadrature,
    i2_via_stokes, kummer_period_matrix, residue_radius_zero,
)


def show(label, value):
    print(f"{label:<42} {render_scalar(value)}")


m = kummer_period_matrix(KummerConfig("a", "lam"))
print("Kummer period matrix, tangential basepoint lam*d/dz at 0:")
for row in m:
    print("   ", [render_scalar(x) for x in row])
show("  same with lam = 1, entry (0, 1):", kummer_period_matrix(KummerConfig("a", 1))[0][1])

# the residue does not see the normal profile of the circle
for profile in (None, fourier_profile({1: 0.5, -1: 0.5}, 3)):
    show(f"residue, profile {'unit' if profile is None else 'wavy'}:", residue_radius_zero(profile))

show("I2 via Stokes over four punctures:", i2_via_stokes("a"))
show("I2 via double copy of P1 chains:", double_copy_p1(DoubleCopyConfigP1()))
exact = i2_closed_form(2).evaluate()
print(f"{'I2 at a = 2, exact / quadrature:':<42} {exact.imag:.9f}i / {i2_quadrature(2.0).imag:.9f}i")
