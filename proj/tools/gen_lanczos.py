#!/usr/bin/env python3
"""Regenerate the Lanczos (g = 7, n = 9) coefficients used by src/lanczos.cpp.

Half-integer Gamma values are computed by direct quadrature of the Eulerian
integral at high precision; the Chebyshev-form coefficients p_k are then
converted to the partial-fraction form

    Gamma(z + 1) = sqrt(2 pi) (z + g + 1/2)^(z + 1/2) e^-(z + g + 1/2)
                   * (c_0 + sum_{j=1}^{n-1} c_j / (z + j)).

Run: python3 tools/gen_lanczos.py
"""
import mpmath as mp
import sympy

mp.mp.dps = 60
G = mp.mpf(7)
N = 9


def gamma_half(l):
    # Gamma(l + 1/2) from the Eulerian integral, not from mp.gamma
    return mp.quad(lambda t: t ** (l - mp.mpf(1) / 2) * mp.e ** (-t), [0, 1, 10, mp.inf])


def cheb_even_coeff(k, l):
    # coefficient of x^(2l) in T_(2k)(x)
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.chebyshevt(2 * k, x), x)
    return mp.mpf(int(poly.coeff_monomial(x ** (2 * l))))


def main():
    f = [mp.sqrt(2) / mp.pi * gamma_half(l) * (l + G + mp.mpf(1) / 2) ** (-(l + mp.mpf(1) / 2))
         * mp.e ** (l + G + mp.mpf(1) / 2) for l in range(N)]
    p = [mp.fsum(cheb_even_coeff(k, l) * f[l] for l in range(k + 1)) for k in range(N)]

    # H_k(z) = z(z-1)...(z-k+1) / ((z+1)...(z+k)) = 1 + sum_j b_kj / (z + j)
    c = [mp.mpf(0)] * N
    c[0] = p[0] / 2
    for k in range(1, N):
        c[0] += p[k]
        for j in range(1, k + 1):
            num = mp.fprod(-j - i for i in range(k))
            den = mp.fprod(i - j for i in range(1, k + 1) if i != j)
            c[j] += p[k] * num / den

    for v in c:
        print(mp.nstr(v, 20, min_fixed=-30, max_fixed=30))

    # self-check against the high-precision gamma at a few points
    def approx(z):
        s = c[0] + mp.fsum(c[j] / (z + j) for j in range(1, N))
        t = z + G + mp.mpf(1) / 2
        return mp.sqrt(2 * mp.pi) * t ** (z + mp.mpf(1) / 2) * mp.e ** (-t) * s

    worst = max(abs(approx(z) / mp.gamma(z + 1) - 1)
                for z in (mp.mpf("-0.5"), mp.mpf(0), mp.mpf(3), mp.mpc(2, 5), mp.mpc(0, 9)))
    print("# max relative deviation:", mp.nstr(worst, 3))


if __name__ == "__main__":
    main()
