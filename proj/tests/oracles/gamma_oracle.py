#!/usr/bin/env python3
"""High-precision reference values frozen into tests/test_gamma.cpp.

Gamma on a slice x + iy is computed from the Eulerian integral by mpmath
quadrature (30 digits); Psi(z) is the same integrand on [1, inf).
"""
import mpmath as mp

mp.mp.dps = 30


def eulerian(z, a=0):
    f = lambda t: mp.e ** (-t) * t ** (z - 1)
    return mp.quad(f, [a, a + 1, a + 10, a + 40, mp.inf])


def gamma_via_integral(z):
    # shift right by two so the integrand is smooth at t = 0, then recur back
    return eulerian(z + 2) / (z * (z + 1))


def show(name, v):
    print(f"{name}: {mp.nstr(mp.re(v), 20)} {mp.nstr(mp.im(v), 20)}")


show("gamma(1 + i sqrt3)", gamma_via_integral(mp.mpc(1, mp.sqrt(3))))
show("gamma(0.3 + 1.7i)", gamma_via_integral(mp.mpc("0.3", "1.7")))
show("gamma(1.5 + 0.5i)", gamma_via_integral(mp.mpc("1.5", "0.5")))
show("psi(2 + i)", eulerian(mp.mpc(2, 1), a=1))
# continuation below Re 0 via the recurrence from the integral at z + 2
show("gamma(-1.5 + i)", gamma_via_integral(mp.mpc("-1.5", 1)))
show("gamma(0.75 + 2i)", gamma_via_integral(mp.mpc("0.75", 2)))
