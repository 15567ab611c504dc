"""Independent high-precision oracle for the frozen constants in the unit tests.

Run with `python3 tests/oracles/freeze_values.py`; it uses mpmath only and
shares no code with the C++ implementation.
"""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return f"{{{mp.nstr(z.real, 20)}, {mp.nstr(z.imag, 20)}}}"


print("# loggamma")
for z in [1, 0.5, 5, mp.mpc(2.5, 3), mp.mpc(-3.7, 0.4), mp.mpc(0.1, -20), mp.mpc(-10.5, 7), mp.mpc(30, 40)]:
    print(c(z), c(mp.loggamma(z)))

print("# gamma")
for z in [mp.mpc(-3.7, 0.4), mp.mpc(0.3, 2), mp.mpc(7.25, -1.5)]:
    print(c(z), c(mp.gamma(z)))

print("# zeta")
for z in [2, mp.mpc(0.5, 14.134725141734693), mp.mpc(0.5, 10), mp.mpc(3, 4), mp.mpc(-2.5, 0), mp.mpc(-0.5, 2),
          mp.mpc(-7.3, 3.1), mp.mpc(0.8, -45), mp.mpc(1.5, 0), mp.mpc(0.2, 0.1), mp.mpc(-4.2, 1)]:
    print(c(z), c(mp.zeta(z)))

print("# zeta - 1")
for z in [2, 20, mp.mpc(2.1, 1), mp.mpc(60, 3)]:
    print(c(z), c(mp.zeta(z) - 1))

print("# binom")
for s, k in [(mp.mpc(2.3, 1.1), 7), (mp.mpc(-0.5, 0), 2), (mp.mpc(4.5, -2), 70), (mp.mpc(-1.2, 3.3), 100)]:
    print(c(s), k, c(mp.binomial(s, k)))

print("# falling factorial")
s = 1 - mp.mpc(2, 1)
print(c(s), 3, c(mp.ff(s, 3)))

print("# bose integrals: Gamma(1-s) zeta(1-s) / scale^(1-s)")
for s, a in [(-1, 2 * mp.pi), (-1, 1), (-3, 1), (mp.mpc(-0.5, 2), 2 * mp.pi), (mp.mpc(-1.5, 0), 1), (mp.mpc(-0.2, 0.5), 1)]:
    s = mp.mpc(s)
    val = mp.gamma(1 - s) * mp.zeta(1 - s) / mp.power(a, 1 - s)
    print(c(s), mp.nstr(a, 20), c(val))

print("# alpha limit sample")
for p in [1, 2, 5]:
    e = mp.mpf("0.001")
    print(p, mp.nstr(mp.binomial(p - 1 + e, p) * mp.zeta(1 - e), 20))

print("# residues")
e = mp.mpf("0.001")
print(mp.nstr(e * mp.zeta(1 + e) - 1, 20), mp.nstr(e * mp.gamma(e) - 1, 20))

print("# P_n(s) = integral of x^-s over [n-1, n]")
for n, s in [(2, mp.mpc(0.5, 3)), (50, mp.mpc(-4, 2)), (7, mp.mpc(1, 0)), (3, mp.mpc(-2.5, -1.5)), (1000, mp.mpc(2, 10))]:
    print(n, c(s), c(mp.quad(lambda x: mp.power(x, -s), [n - 1, n])))
