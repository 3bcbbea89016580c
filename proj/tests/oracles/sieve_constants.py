"""Independent reference values for the sieve constants at alpha=1/7, beta=3/14.

Uses only closed forms of the sieve functions (no marching) and scipy/mpmath
quadrature. The C++ tests pin the printed numbers.
"""
import math

import mpmath as mp
from scipy import integrate

mp.mp.dps = 30
EG = mp.e ** mp.euler
alpha, beta = mp.mpf(1) / 7, mp.mpf(3) / 14


def omega(u):
    # Buchstab function on [1, 4] from its closed forms.
    u = mp.mpf(u)
    if u <= 2:
        return 1 / u
    if u <= 3:
        return (1 + mp.log(u - 1)) / u
    inner = mp.quad(lambda t: (1 + mp.log(t - 1)) / t, [2, u - 1])
    return (1 + mp.log(2) + inner) / u


omega1 = 4 + 4 * mp.quad(lambda s: mp.log(s - 2) / (s - 1), [3, 3.5])
# f_lin(s) = 2 e^g ln(s-1)/s on [2, 4]; Omega2 = (1/(2 alpha e^g)) int f((1/2-t)/alpha) dt/t
omega2 = 1 / (2 * alpha * EG) * mp.quad(
    lambda t: 2 * EG * mp.log((0.5 - t) / alpha - 1) / ((0.5 - t) / alpha) / t, [alpha, beta])

a, b = float(alpha), float(beta)


def omega_f(u):
    # float form for the triple integral; the [3,4] piece by scipy quad
    if u <= 2:
        return 1 / u
    if u <= 3:
        return (1 + math.log(u - 1)) / u
    inner = integrate.quad(lambda t: (1 + math.log(t - 1)) / t, 2, u - 1, epsabs=1e-14)[0]
    return (1 + math.log(2) + inner) / u


def f3(u3, u2, u1):
    return omega_f((1 - u1 - u2 - u3) / u2) / (u1 * u2 * u2 * u3)


val, err = integrate.tplquad(f3, a, b, lambda u1: u1, lambda u1: b,
                             lambda u1, u2: u2, lambda u1, u2: b, epsabs=1e-10, epsrel=1e-10)
omega3 = 2 * val
print("omega1", mp.nstr(omega1, 17))
print("omega2", mp.nstr(omega2, 17))
print("omega3", repr(omega3), "quad_err", 2 * err)
print("omega(3)", mp.nstr(omega(3), 17), "(1+ln2)/3", mp.nstr((1 + mp.log(2)) / 3, 17))
print("total", repr(float(omega1 - omega2) + omega3))
