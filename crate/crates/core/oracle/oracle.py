#!/usr/bin/env python3
"""High-precision reference values for the conical crate's tests.

Everything here is computed with mpmath at 50 significant digits and is
independent of the Rust implementation. Running the script prints the
values that are frozen into the unit and acceptance tests.

Two independent routes are used for the delta coefficients:

* the closed forms, transcribed term by term;
* the endpoint amplitudes of each function in the variable t = atanh(x),
  where every function is a sum of pure phases e^{+iqt}, e^{-iqt}. A pairing
  of two such sums over t in R produces pi * delta for every matched phase at
  each end, which gives A(q) and B(q) without any of the closed-form algebra.
"""

import mpmath as mp

mp.mp.dps = 50
I = mp.mpc(0, 1)
PI = mp.pi


def conical(nu):
    return mp.mpc(-0.5, nu)


def P(lam, q, x):
    mu = I * q
    z = (1 - x) / 2
    return mp.exp(mu * mp.atanh(x)) * mp.hyp2f1(-lam, lam + 1, 1 - mu, z) / mp.gamma(1 - mu)


def Q(lam, q, x):
    mu = I * q
    r = mp.gamma(lam + mu + 1) / mp.gamma(lam - mu + 1)
    return PI / (2 * mp.sin(PI * mu)) * (mp.cos(PI * mu) * P(lam, q, x) - r * P(lam, -q, x))


def dP(lam, q, x):
    return mp.diff(lambda s: P(lam, q, s), x)


def dQ(lam, q, x):
    return mp.diff(lambda s: Q(lam, q, s), x)


# ---------------------------------------------------------------- amplitudes

def amp_p(lam, q):
    """Endpoint amplitudes of P_lam^{iq}: {end: (coef e^{iqt}, coef e^{-iqt})}."""
    mu = I * q
    g = mp.gamma(1 - mu)
    a_minus = mp.gamma(-mu) / (mp.gamma(1 + lam - mu) * mp.gamma(-lam - mu))
    b_minus = mp.gamma(mu) / (mp.gamma(-lam) * mp.gamma(lam + 1)) if not _is_pole(-lam) and not _is_pole(lam + 1) else mp.mpc(0)
    # 2F1 at z -> 0 is 1; near x -> -1 the z -> 1 - z connection gives the two phases.
    return {"+": (1 / g, mp.mpc(0)), "-": (a_minus, b_minus)}


def _is_pole(z):
    z = mp.mpc(z)
    return abs(z.imag) < 1e-30 and z.real <= 0 and abs(z.real - mp.nint(z.real)) < 1e-30


def amp_q(lam, q):
    mu = I * q
    k = PI / (2 * mp.sin(PI * mu))
    r = mp.gamma(lam + mu + 1) / mp.gamma(lam - mu + 1)
    c = mp.cos(PI * mu)
    ap, an = amp_p(lam, q), amp_p(lam, -q)
    out = {}
    for end in "+-":
        # P^{-iq}: e^{iqt} coefficient is its "e^{-i(-q)t}" slot.
        out[end] = (k * (c * ap[end][0] - r * an[end][1]), k * (c * ap[end][1] - r * an[end][0]))
    return out


def amp(kind, lam, q, mirrored=False):
    a = amp_p(lam, q) if kind == "P" else amp_q(lam, q)
    if not mirrored:
        return a
    # F(-x): t -> -t swaps the ends and the two phases.
    return {"+": (a["-"][1], a["-"][0]), "-": (a["+"][1], a["+"][0])}


def kernel_from_amplitudes(left, right, lam, q, mirrored, conjugated=True):
    f, g_same, g_neg = amp(left, lam, q), amp(right, lam, q, mirrored), amp(right, lam, -q, mirrored)
    A = mp.mpc(0)
    B = mp.mpc(0)
    for end in "+-":
        fa, fb = f[end]
        if conjugated:
            ga, gb = g_same[end]
            A += fa * mp.conj(ga) + fb * mp.conj(gb)
            ha, hb = g_neg[end]
            B += fa * mp.conj(hb) + fb * mp.conj(ha)
        else:
            ga, gb = g_same[end]
            A += fa * gb + fb * ga
            ha, hb = g_neg[end]
            B += fa * ha + fb * hb
    return PI * A, PI * B


# --------------------------------------------------------------- closed forms

def gg(nu, q):
    return mp.gamma(0.5 - I * nu - I * q) * mp.gamma(0.5 + I * nu - I * q)


def closed(name, nu, q):
    s = mp.sinh(PI * q)
    if name == "I1":
        return ((mp.cosh(2 * PI * q) + mp.cosh(2 * PI * nu)) / (q * s),
                2 * PI * mp.cosh(PI * nu) / (q * s * gg(nu, q)))
    if name == "I2":
        return (I * PI * (mp.sinh(2 * PI * q) + mp.sinh(2 * PI * nu)) / (2 * q * s),
                I * PI**2 * mp.sinh(PI * nu) / (q * s * gg(nu, q)))
    if name == "I3":
        return (PI**2 * (mp.cosh(2 * PI * q) + mp.cosh(2 * PI * nu)) / (4 * q * s),
                PI**3 * mp.cosh(PI * nu) / (2 * q * s * gg(nu, q)))
    if name == "J1":
        return (mp.mpc(0), 2 * PI * I / (q * gg(nu, q)))
    if name == "J2":
        return (mp.cosh(PI * (q - nu)) / (q * s), PI**2 / (q * mp.tanh(PI * q) * gg(nu, q)))
    if name == "J3":
        return (mp.mpc(0), -I * PI**3 / (2 * q * gg(nu, q)))
    raise ValueError(name)


PAIRS = {"I1": ("P", "P", False), "I2": ("P", "Q", False), "I3": ("Q", "Q", False),
         "J1": ("P", "P", True), "J2": ("P", "Q", True), "J3": ("Q", "Q", True)}


def bielski_diag(lam, q):
    return -2 * mp.gamma(I * q) * mp.gamma(-I * q) * mp.sin(PI * lam) / (
        mp.gamma(1 + lam - I * q) * mp.gamma(-lam - I * q))


def bielski_bracket(lam, q):
    iq = I * q
    gg = mp.gamma(iq) * mp.gamma(-iq)
    return (PI / (mp.gamma(1 - iq) * mp.gamma(1 + iq)) + mp.sin(PI * lam) ** 2 * gg / PI
            + PI * gg / (mp.gamma(1 + lam - iq) * mp.gamma(-lam - iq) * mp.gamma(1 + lam + iq) * mp.gamma(-lam + iq)))


def fmt(z):
    z = mp.mpc(z)
    return "(%s, %s)" % (mp.nstr(z.real, 17), mp.nstr(z.imag, 17))


def main():
    print("== special functions")
    print("gamma(1+i)", fmt(mp.gamma(1 + I)))
    print("loggamma(10+5i)", fmt(mp.loggamma(10 + 5 * I)))
    print("loggamma(0.5)", fmt(mp.loggamma(0.5)))
    print("gamma(-2.5+0.5i)", fmt(mp.gamma(mp.mpc(-2.5, 0.5))))
    print("gamma(0.3-4i)", fmt(mp.gamma(mp.mpc(0.3, -4))))
    print("gamma(15+3i)", fmt(mp.gamma(mp.mpc(15, 3))))
    print("loggamma(-3.5+2i)", fmt(mp.loggamma(mp.mpc(-3.5, 2))))
    print("loggamma(25-30i)", fmt(mp.loggamma(mp.mpc(25, -30))))
    print("hyp2f1(0.5-i,0.5+i;1-i;0.3)", fmt(mp.hyp2f1(mp.mpc(0.5, -1), mp.mpc(0.5, 1), mp.mpc(1, -1), 0.3)))
    print("hyp2f1(0.5-i,0.5+i;1-i;0.8)", fmt(mp.hyp2f1(mp.mpc(0.5, -1), mp.mpc(0.5, 1), mp.mpc(1, -1), 0.8)))
    print("hyp2f1(2+3i,-1.5+i;0.5-2i;0.95)", fmt(mp.hyp2f1(mp.mpc(2, 3), mp.mpc(-1.5, 1), mp.mpc(0.5, -2), 0.95)))
    print("hyp2f1(0.5+5i,0.5-5i;1-3i;0.999999)", fmt(mp.hyp2f1(mp.mpc(0.5, 5), mp.mpc(0.5, -5), mp.mpc(1, -3), 0.999999)))

    print("== conical evaluators")
    print("P(nu=1,q=1,x=0)", fmt(P(conical(1), 1, 0)))
    print("P(nu=1,q=1,x=0.4)", fmt(P(conical(1), 1, 0.4)))
    print("P(nu=1,q=1,x=-0.4)", fmt(P(conical(1), 1, -0.4)))
    print("P(nu=2.5,q=-3,x=0.95)", fmt(P(conical(2.5), -3, mp.mpf("0.95"))))
    print("P(lam=0.3+0.2i,q=1.5,x=-0.7)", fmt(P(mp.mpc(0.3, 0.2), 1.5, mp.mpf("-0.7"))))
    print("Q(nu=0,q=1,x=0)", fmt(Q(conical(0), 1, 0)))
    print("Q(nu=0.5,q=2,x=0.3)", fmt(Q(conical(0.5), 2, mp.mpf("0.3"))))
    print("Q(nu=0,q=1,x=0) via mp.legenq", fmt(mp.legenq(conical(0), I, 0, type=2)))
    print("Q(nu=0.5,q=2,x=0.3) via mp.legenq", fmt(mp.legenq(conical(0.5), 2 * I, mp.mpf("0.3"), type=2)))
    print("P(nu=1,q=1,x=0) via mp.legenp", fmt(mp.legenp(conical(1), I, 0, type=2)))
    print("dP(nu=1,q=0.7,x=0.2)", fmt(dP(conical(1), 0.7, mp.mpf("0.2"))))
    print("dQ(nu=0,q=1,x=0)", fmt(dQ(conical(0), 1, 0)))
    print("dQ(nu=2,q=0.5,x=-0.3)", fmt(dQ(conical(2), 0.5, mp.mpf("-0.3"))))

    print("== Q degree conjugation")
    for nu, q in [(0.5, 0.5), (0.5, 1), (1, 0.5), (1, 1)]:
        dev = max(abs(Q(conical(nu), q, x) - Q(conical(-nu), q, x)) for x in [mp.mpf(k) / 10 for k in range(-9, 10, 3)])
        devc = max(abs(mp.conj(Q(conical(nu), q, x)) - Q(conical(nu), -q, x)) for x in [mp.mpf(k) / 10 for k in range(-9, 10, 3)])
        print("nu=%s q=%s  |Q_l - Q_l*| max %s   |conj Q^iq - Q^-iq| max %s" % (nu, q, mp.nstr(dev, 6), mp.nstr(devc, 6)))

    print("== kernels: closed form vs endpoint amplitudes")
    for nu in [0, 0.5, 1, 2]:
        for q in [0.5, 1, 2, 3, -1.3]:
            for name, (l, r, m) in PAIRS.items():
                ca, cb = closed(name, nu, q)
                ea, eb = kernel_from_amplitudes(l, r, conical(nu), q, m)
                scale = max(abs(ca), abs(cb), 1e-30)
                da, db = abs(ca - ea) / scale, abs(cb - eb) / scale
                flag = "" if max(da, db) < 1e-20 else "   <-- MISMATCH"
                print("nu=%-3s q=%-4s %s  A=%s B=%s | dA=%s dB=%s%s" % (
                    nu, q, name, fmt(ca), fmt(cb), mp.nstr(da, 3), mp.nstr(db, 3), flag))
                if flag:
                    print("      amplitude route: A=%s B=%s" % (fmt(ea), fmt(eb)))

    print("== frozen kernel values")
    for name, nu, q in [("I1", 0, 1), ("I1", 0, 2), ("I2", 0, 1), ("I3", 0, 1), ("J1", 0, 1), ("J2", 0, 1),
                        ("J2", 1, 2), ("J3", 0.5, 1)]:
        a, b = closed(name, nu, q)
        print(name, "nu=%s q=%s" % (nu, q), "A", fmt(a), "B", fmt(b))

    print("== bielski diagonal coefficient")
    for lam, q in [(mp.mpf("0.3"), 1), (conical(1), 2), (conical(0), 1), (mp.mpf(1), 1)]:
        print("lam=%s q=%s" % (lam, q), fmt(bielski_diag(lam, q)))
    print("plain pairing by amplitudes:")
    for lam, q in [(mp.mpf("0.3"), 1), (conical(1), 2), (conical(0), 1), (mp.mpf(1), 1), (mp.mpf(0), 2), (mp.mpf(2), 1)]:
        a, b = kernel_from_amplitudes("P", "P", mp.mpc(lam), q, False, conjugated=False)
        print("  PP lam=%s q=%s A=%s B=%s  2sinh(pi q)/q=%s" % (lam, q, fmt(a), fmt(b), mp.nstr(2 * mp.sinh(PI * q) / q, 17)))
    print("== bielski bracket against the plain-pairing B slot")
    for lam, q in [(mp.mpf("0.3"), 1), (mp.mpc("0.3", "0.4"), 1), (mp.mpf(1), 1), (conical(1), 2)]:
        _, b = kernel_from_amplitudes("P", "P", mp.mpc(lam), q, False, conjugated=False)
        print("lam=%s q=%s bracket=%s B=%s" % (lam, q, fmt(bielski_bracket(lam, q)), fmt(b)))


if __name__ == "__main__":
    main()
