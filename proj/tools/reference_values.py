#!/usr/bin/env python3
"""High-precision reference values for the C++ test suite.

Everything here is computed twice: once through a truncated-Fock numeric
pipeline and once through closed-form expressions, both in 40-digit mpmath
arithmetic. The script certifies that the two routes agree (PASS/FAIL lines)
and prints the constants that are frozen into tests/ as C++ literals.

Run:  python3 tools/reference_values.py
"""

from mpmath import mp, mpf, mpc, exp, sqrt, sin, cos, tan, sinh, cosh, tanh, pi, conj, re, im

mp.dps = 40

DIM = 192


# ---------------------------------------------------------------------------
# truncated-Fock numeric pipeline (route 1)
# ---------------------------------------------------------------------------

def lower(v):
    # a: out[n] = sqrt(n+1) v[n+1]
    n = len(v)
    return [sqrt(mpf(k + 1)) * v[k + 1] for k in range(n - 1)] + [mpc(0)]


def raise_(v):
    # a^dagger: out[n+1] = sqrt(n+1) v[n]
    n = len(v)
    return [mpc(0)] + [sqrt(mpf(k + 1)) * v[k] for k in range(n - 1)]


def displace(beta, v):
    # D(beta) = e^{-|beta|^2/2} e^{beta a^dag} e^{-conj(beta) a}; both series
    # terminate after dim terms on the truncated space
    n = len(v)
    beta = mpc(beta)
    acc = list(v)
    t = list(v)
    for k in range(1, n):
        t = [(-conj(beta)) / k * x for x in lower(t)]
        acc = [a + b for a, b in zip(acc, t)]
    out = list(acc)
    t = list(acc)
    for k in range(1, n):
        t = [beta / k * x for x in raise_(t)]
        out = [a + b for a, b in zip(out, t)]
    w = exp(-abs(beta) ** 2 / 2)
    return [w * x for x in out]


def inner(u, v):
    return sum(conj(a) * b for a, b in zip(u, v))


def norm2(v):
    return re(inner(v, v))


def normalize(v):
    nn = sqrt(norm2(v))
    return [x / nn for x in v], nn


def coherent(r, vartheta, dim=DIM):
    alpha = r * exp(mpc(0, 1) * vartheta)
    v = [mpc(0)] * dim
    amp = mpc(exp(-mpf(r) ** 2 / 2))
    for n in range(dim):
        v[n] = amp
        amp = amp * alpha / sqrt(mpf(n + 1))
    return v


def squeezed_vacuum(eta, delta, dim=DIM):
    # even-Fock series of S(xi)|0>, S = exp(xi* a^2/2 - xi a^dag^2/2)
    v = [mpc(0)] * dim
    pref = 1 / sqrt(cosh(eta))
    t = -exp(mpc(0, 1) * delta) * tanh(eta)
    term = mpc(1)  # sqrt((2m)!)/(2^m m!) * t^m at m = 0
    v[0] = pref * term
    m = 0
    while 2 * m + 2 < dim:
        m += 1
        term = term * t * sqrt(mpf(2 * m) * (2 * m - 1)) / (2 * m)
        v[2 * m] = pref * term
    return v


def cat(r, delta, omega, dim=DIM):
    a = coherent(r, delta, dim)
    b = coherent(r, delta + pi, dim)  # |-alpha>
    alpha = r * exp(mpc(0, 1) * delta)
    K = 1 / sqrt(2 + 2 * exp(-2 * abs(alpha) ** 2) * cos(omega))
    ph = exp(mpc(0, 1) * omega)
    return [K * (x + ph * y) for x, y in zip(a, b)]


def postselect(s, theta, phi_sys, v):
    cp = (cos(theta / 2) + exp(mpc(0, 1) * phi_sys) * sin(theta / 2)) / 2
    cm = (cos(theta / 2) - exp(mpc(0, 1) * phi_sys) * sin(theta / 2)) / 2
    up = displace(mpf(s) / 2, v)
    dn = displace(-mpf(s) / 2, v)
    w = [cp * x + cm * y for x, y in zip(up, dn)]
    p = norm2(w)
    u, _ = normalize(w)
    return u, p


def mean_n(v):
    return sum(mpf(n) * re(x * conj(x)) for n, x in enumerate(v))


def a2a2(v):
    return sum(mpf(n) * (n - 1) * re(x * conj(x)) for n, x in enumerate(v))


def a_mean(v):
    return inner(v, lower(v))


def a2_mean(v):
    return inner(v, lower(lower(v)))


def x_phi(v, phi):
    return sqrt(mpf(2)) * re(a_mean(v) * exp(mpc(0, -1) * phi))


def x2_phi(v, phi):
    return (2 * re(a2_mean(v) * exp(mpc(0, -2) * phi)) + 2 * mean_n(v) + 1) / 2


def s_phi(v, phi):
    return x2_phi(v, phi) - x_phi(v, phi) ** 2 - mpf(1) / 2


def g2(v):
    return a2a2(v) / mean_n(v) ** 2


def mandel_q(v):
    return mean_n(v) * (g2(v) - 1)


# ---------------------------------------------------------------------------
# closed forms (route 2)
# ---------------------------------------------------------------------------

def weak_value(theta, phi_sys):
    return exp(mpc(0, 1) * phi_sys) * tan(theta / 2)


def coh_lambda_m2(aw, s, alpha):
    y = im(alpha)
    return (1 + abs(aw) ** 2
            + exp(-mpf(s) ** 2 / 2) * re((1 + conj(aw)) * (1 - aw) * exp(mpc(0, 2) * s * y)))


def coh_closed(aw, s, alpha, phi):
    # two-branch coherent moments; overall prefactor lambda^2/2
    y = im(alpha)
    lam2 = 1 / coh_lambda_m2(aw, s, alpha)
    ap = alpha + mpf(s) / 2
    am = alpha - mpf(s) / 2
    w = (1 + conj(aw)) * (1 - aw)
    ex = exp(-mpf(s) ** 2 / 2) * exp(mpc(0, 2) * s * y)
    dp = abs(1 + aw) ** 2
    dm = abs(1 - aw) ** 2
    n = lam2 / 2 * (dp * abs(ap) ** 2 + dm * abs(am) ** 2
                    + 2 * re(w * ex * conj(ap) * am))
    nn = lam2 / 2 * (dp * abs(ap) ** 4 + dm * abs(am) ** 4
                     + 2 * re(w * ex * conj(ap) ** 2 * am ** 2))
    amean = lam2 / 2 * (dp * ap + dm * am + w * ex * am + conj(w * ex) * ap)
    a2 = lam2 / 2 * (dp * ap ** 2 + dm * am ** 2 + w * ex * am ** 2 + conj(w * ex) * ap ** 2)
    xphi = sqrt(mpf(2)) * re(amean * exp(mpc(0, -1) * phi))
    return n, nn, amean, a2, xphi


def sq_kappa_m2(aw, s, eta, delta):
    c = cosh(eta) + exp(mpc(0, 1) * delta) * sinh(eta)
    ov = exp(-mpf(s) ** 2 / 2 * abs(c) ** 2)
    return ((1 + abs(aw) ** 2) + (1 - abs(aw) ** 2) * ov) / 2


def sq_amp_vec(beta, eta, delta, dim=DIM):
    # amplitudes <n| D(beta) S(eta e^{i delta}) |0> via rescaled Hermite
    # recurrence; primitives zu = chi/(2 cosh eta) and u2 = e^{i delta} tanh/2
    # stay finite at eta = 0 where the bare Hermite argument diverges
    ei = exp(mpc(0, 1) * delta)
    beta = mpc(beta)
    chi = beta * cosh(eta) + conj(beta) * ei * sinh(eta)
    zu = chi / (2 * cosh(eta))
    u2 = ei * tanh(eta) / 2
    C = exp(-abs(beta) ** 2 / 2 - conj(beta) ** 2 * ei * tanh(eta) / 2) / sqrt(cosh(eta))
    out = [mpc(0)] * dim
    t_prev, t = mpc(1), 2 * zu
    out[0] = C
    if dim > 1:
        out[1] = C * t
    for k in range(1, dim - 1):
        t_next = 2 * zu * t / sqrt(mpf(k + 1)) - 2 * u2 * sqrt(mpf(k) / (k + 1)) * t_prev
        out[k + 1] = C * t_next
        t_prev, t = t, t_next
    return out


def sq_closed(aw, s, eta, delta, phi):
    # displaced-squeezed two-branch moments, corrected forms
    k2 = 1 / sq_kappa_m2(aw, s, eta, delta)  # kappa^2
    c = cosh(eta) + exp(mpc(0, 1) * delta) * sinh(eta)
    ov = exp(-mpf(s) ** 2 / 2 * abs(c) ** 2)
    ei = exp(mpc(0, 1) * delta)
    s2 = mpf(s) ** 2
    aw2 = abs(aw) ** 2
    ncross = ov * (sinh(eta) ** 2 - s2 / 4 * (cosh(4 * eta) + cos(delta) * sinh(4 * eta)))
    n = k2 / 4 * (2 * (1 + aw2) * (s2 / 4 + sinh(eta) ** 2)
                  + 2 * (1 - aw2) * ncross)
    z = cosh(2 * eta) + ei * sinh(2 * eta)
    amean = k2 * mpf(s) / 2 * (re(aw) + mpc(0, 1) * im(aw) * ov * z)
    xphi = sqrt(mpf(2)) * re(amean * exp(mpc(0, -1) * phi))
    d2 = s2 / 4 - ei * sinh(2 * eta) / 2
    cr2 = ov * (s2 / 4 * z ** 2 - ei * sinh(2 * eta) / 2)
    a2 = k2 / 2 * ((1 + aw2) * d2 + (1 - aw2) * cr2)
    x2 = (2 * re(a2 * exp(mpc(0, -2) * phi)) + 2 * n + 1) / 2
    return n, amean, xphi, a2, x2


def cat_kappa_m2(aw, s, alpha, omega):
    K2 = 1 / (2 + 2 * exp(-2 * abs(alpha) ** 2) * cos(omega))
    y = im(alpha)
    eo = exp(mpc(0, 1) * omega)
    gp = exp(-abs(2 * alpha + s) ** 2 / 2)
    gm = exp(-abs(2 * alpha - s) ** 2 / 2)
    w = (1 - aw) * (1 + conj(aw))
    return ((1 + abs(aw) ** 2) / 2
            + K2 * (1 - abs(aw) ** 2) * cos(2 * s * y) * exp(-mpf(s) ** 2 / 2)
            + K2 / 2 * re(w * (eo * gp + conj(eo) * gm)))


def cat_closed(aw, s, alpha, omega, phi):
    # two-branch displaced-cat moments, corrected forms
    k2 = 1 / cat_kappa_m2(aw, s, alpha, omega)
    K2 = 1 / (2 + 2 * exp(-2 * abs(alpha) ** 2) * cos(omega))
    y = im(alpha)
    s_ = mpf(s)
    b = s_ / 2
    ap, am = alpha + b, alpha - b
    eo = exp(mpc(0, 1) * omega)
    e2a = exp(-2 * abs(alpha) ** 2)
    gp = exp(-2 * abs(ap) ** 2)  # = e^{-|2 alpha + s|^2/2}
    gm = exp(-2 * abs(am) ** 2)
    es = exp(-s_ ** 2 / 2)
    dp = abs(1 + aw) ** 2
    dm = abs(1 - aw) ** 2
    w = (1 - aw) * (1 + conj(aw))
    cs, sn = cos(2 * s_ * y), sin(2 * s_ * y)

    # photon number
    diag_p = (abs(ap) ** 2 + abs(-alpha + b) ** 2
              + 2 * re(eo * conj(ap) * (-alpha + b)) * e2a)
    diag_m = (abs(am) ** 2 + abs(ap) ** 2
              - 2 * re(eo * conj(am) * ap) * e2a)
    cross_p = (eo * abs(ap) ** 2 * gp + conj(eo) * abs(am) ** 2 * gm
               - 2 * es * re(exp(mpc(0, 2) * s_ * y) * conj(ap) * am))
    n = k2 * K2 / 4 * (dp * diag_p + dm * diag_m - 2 * re(cross_p * w))

    # pair moment <a^dag^2 a^2>
    diag2_p = (abs(ap) ** 4 + abs(-alpha + b) ** 4
               + 2 * re(eo * (conj(alpha) + b) ** 2 * (-alpha + b) ** 2) * e2a)
    diag2_m = (abs(am) ** 4 + abs(ap) ** 4
               + 2 * re(eo * (conj(alpha) - b) ** 2 * ap ** 2) * e2a)
    cross2 = (eo * abs(ap) ** 4 * gp + conj(eo) * abs(am) ** 4 * gm
              + 2 * es * re(exp(mpc(0, 2) * s_ * y) * (conj(alpha) + b) ** 2 * am ** 2))
    nn = k2 * K2 / 4 * (dp * diag2_p + dm * diag2_m + 2 * re(cross2 * w))

    # <a>
    adiag_p = s_ + eo * (-alpha + b) * e2a + conj(eo) * ap * e2a
    adiag_m = -s_ - eo * ap * e2a + conj(eo) * am * e2a
    across_1 = ((2 * mpc(0, 1) * alpha * sn - s_ * cs) * es
                - eo * ap * gp + conj(eo) * am * gm)
    across_2 = ((-2 * mpc(0, 1) * alpha * sn + s_ * cs) * es
                + eo * (-alpha + b) * gm + conj(eo) * ap * gp)
    amean = k2 * K2 / 4 * (dp * adiag_p + dm * adiag_m
                           + w * across_1 + conj(w) * across_2)

    # <a^2>
    a2diag_p = 2 * (alpha ** 2 + b ** 2) + eo * (-alpha + b) ** 2 * e2a + conj(eo) * ap ** 2 * e2a
    a2diag_m = 2 * (alpha ** 2 + b ** 2) + eo * ap ** 2 * e2a + conj(eo) * am ** 2 * e2a
    a2cross_1 = (2 * es * (cs * (alpha ** 2 + b ** 2) - mpc(0, 1) * s_ * alpha * sn)
                 + conj(eo) * am ** 2 * gm + eo * ap ** 2 * gp)
    a2cross_2 = (2 * es * (cs * (alpha ** 2 + b ** 2) - mpc(0, 1) * s_ * alpha * sn)
                 + eo * am ** 2 * gm + conj(eo) * ap ** 2 * gp)
    a2 = k2 * K2 / 4 * (dp * a2diag_p + dm * a2diag_m
                        + w * a2cross_1 + conj(w) * a2cross_2)

    sphi = (2 * re(a2 * exp(mpc(0, -2) * phi)) + 2 * n + 1) / 2 \
        - 2 * re(amean * exp(mpc(0, -1) * phi)) ** 2 - mpf(1) / 2
    return n, nn, amean, a2, sphi


def cat_init_sphi(alpha, omega, phi):
    # initial-cat squeezing parameter, corrected form:
    # Re(<a^2> e^{-2 i phi}) + <n> - 2 Re(<a> e^{-i phi})^2
    ct = exp(-2 * abs(alpha) ** 2) * cos(omega)
    K2 = 1 / (2 + 2 * ct)
    nbar = abs(alpha) ** 2 * (1 - ct) / (1 + ct)
    amean = -2 * mpc(0, 1) * K2 * alpha * exp(-2 * abs(alpha) ** 2) * sin(omega)
    return (re(alpha ** 2 * exp(mpc(0, -2) * phi)) + nbar
            - 2 * re(amean * exp(mpc(0, -1) * phi)) ** 2)


# ---------------------------------------------------------------------------
# certification and frozen output
# ---------------------------------------------------------------------------

failures = 0


def check(label, a, b, tol=mpf("1e-20")):
    global failures
    err = abs(mpc(a) - mpc(b))
    ok = err < tol
    if not ok:
        failures += 1
    print(f"{'PASS' if ok else 'FAIL'}  {label:58s} err={mp.nstr(err, 3)}")


def emit(name, value):
    if isinstance(value, mpc) or (hasattr(value, "imag") and value.imag != 0):
        print(f"  {name}_re = {mp.nstr(re(value), 17)};")
        print(f"  {name}_im = {mp.nstr(im(value), 17)};")
    else:
        print(f"  {name} = {mp.nstr(re(value), 17)};")


def main():
    print("== cross-certification: closed forms vs truncated-Fock numerics ==")

    # -- coherent pointer ---------------------------------------------------
    for (s, theta, phis, r, vth) in [
        (2, 7 * pi / 9, 4 * pi / 5, 1, pi / 3),
        (mpf("0.2"), pi / 9, pi / 4, mpf("0.3"), pi / 3),
        (1, pi / 3, pi / 3, mpf("0.5"), mpf("1.1")),
    ]:
        alpha = r * exp(mpc(0, 1) * vth)
        aw = weak_value(theta, phis)
        v = coherent(r, vth)
        fin, p = postselect(s, theta, phis, v)
        lam_m2 = coh_lambda_m2(aw, s, alpha)
        check(f"coh norm s={mp.nstr(s,3)} th={mp.nstr(theta,3)}",
              p, cos(theta / 2) ** 2 * lam_m2 / 2)
        n, nn, amean, a2, xphi = coh_closed(aw, s, alpha, pi / 5)
        check("  mean_n", mean_n(fin), n)
        check("  pair moment", a2a2(fin), nn)
        check("  <a>", a_mean(fin), amean)
        check("  <a^2>", a2_mean(fin), a2)
        check("  X_phi", x_phi(fin, pi / 5), xphi)

    # -- squeezed pointer ---------------------------------------------------
    for (s, theta, phis, eta, delta) in [
        (1, pi / 3, pi / 3, mpf("0.5"), pi / 3),
        (mpf("0.5"), 7 * pi / 9, pi / 3, mpf("0.2"), mpf("1.1")),
        (2, pi / 9, 4 * pi / 5, mpf("0.8"), mpf("5.1")),
    ]:
        aw = weak_value(theta, phis)
        v = squeezed_vacuum(eta, delta)
        fin, p = postselect(s, theta, phis, v)
        check(f"sq norm s={mp.nstr(s,3)} eta={mp.nstr(eta,3)}",
              p, cos(theta / 2) ** 2 * sq_kappa_m2(aw, s, eta, delta))
        n, amean, xphi, a2, x2 = sq_closed(aw, s, eta, delta, pi / 5)
        check("  mean_n", mean_n(fin), n)
        check("  <a>", a_mean(fin), amean)
        check("  X_phi", x_phi(fin, pi / 5), xphi)
        check("  <a^2>", a2_mean(fin), a2)
        check("  X2_phi", x2_phi(fin, pi / 5), x2)
        amp = sq_amp_vec(mpf(s) / 2, eta, delta)
        dsq = displace(mpf(s) / 2, v)
        maxerr = max(abs(x - y) for x, y in zip(amp[:150], dsq[:150]))
        check("  displaced-squeezed amplitudes (n < 150)", maxerr, 0)

    # -- cat pointer ----------------------------------------------------------
    for (s, theta, phis, r, deltac, omega) in [
        (1, pi / 3, pi / 3, mpf("0.5"), pi / 3, pi / 2),
        (mpf("0.5"), 7 * pi / 9, 0, mpf("0.3"), 0, pi),
        (mpf("0.5"), pi / 9, 0, mpf("0.3"), 0, 0),
        (2, pi / 3, mpf("2.2"), mpf("0.8"), mpf("0.9"), mpf("2.0")),
    ]:
        alpha = r * exp(mpc(0, 1) * deltac)
        aw = weak_value(theta, phis)
        v = cat(r, deltac, omega)
        fin, p = postselect(s, theta, phis, v)
        check(f"cat norm s={mp.nstr(s,3)} om={mp.nstr(omega,3)}",
              p, cos(theta / 2) ** 2 * cat_kappa_m2(aw, s, alpha, omega))
        n, nn, amean, a2, sphi = cat_closed(aw, s, alpha, omega, pi / 5)
        check("  mean_n", mean_n(fin), n)
        check("  pair moment", a2a2(fin), nn)
        check("  <a>", a_mean(fin), amean)
        check("  <a^2>", a2_mean(fin), a2)
        check("  S_phi", s_phi(fin, pi / 5), sphi)

    # -- initial-state closed forms ------------------------------------------
    for eta in [mpf("0.2"), mpf("0.5"), 1]:
        v = squeezed_vacuum(eta, pi / 3)
        check(f"sq init g2 eta={mp.nstr(eta,3)}", g2(v), 3 + 1 / sinh(eta) ** 2,
              tol=mpf("1e-18"))
        check(f"sq init Q  eta={mp.nstr(eta,3)}", mandel_q(v), 1 + 2 * sinh(eta) ** 2,
              tol=mpf("1e-18"))
        for phi in [mpf("0.35"), pi / 3 / 2, pi / 3 / 2 + pi / 2]:
            lhs = s_phi(v, phi)
            rhs = (cosh(2 * eta) - sinh(2 * eta) * cos(2 * phi - pi / 3)) / 2 - mpf(1) / 2
            check(f"  sq init S_phi phi={mp.nstr(phi,3)}", lhs, rhs, tol=mpf("1e-18"))
    for (r, omega) in [(mpf("0.3"), 0), (mpf("0.5"), pi / 2), (1, pi),
                       (mpf("0.3"), pi), (1, 0)]:
        v = cat(r, 0, omega)
        ct = exp(-2 * r ** 2) * cos(omega)
        qc = 4 * r ** 2 * exp(-2 * r ** 2) * cos(omega) / (1 - exp(-4 * r ** 2) * cos(omega) ** 2)
        g2c = 1 + 4 * exp(-2 * r ** 2) * cos(omega) / (1 - ct) ** 2
        check(f"cat init Q  r={mp.nstr(r,3)} om={mp.nstr(omega,3)}", mandel_q(v), qc,
              tol=mpf("1e-18"))
        if omega != pi or r > mpf("0.05"):
            check(f"cat init g2 r={mp.nstr(r,3)} om={mp.nstr(omega,3)}", g2(v), g2c,
                  tol=mpf("1e-15"))
        for phi in [mpf("0.7"), pi / 2]:
            check(f"  cat init S_phi phi={mp.nstr(phi,3)}",
                  s_phi(v, phi), cat_init_sphi(r, omega, phi), tol=mpf("1e-18"))
    # complex cat amplitude
    al = mpf("0.5") * exp(mpc(0, 1) * pi / 3)
    v = cat(mpf("0.5"), pi / 3, pi / 2)
    check("cat init S_phi complex alpha",
          s_phi(v, mpf("0.7")), cat_init_sphi(al, pi / 2, mpf("0.7")), tol=mpf("1e-18"))

    print()
    print("== frozen constants (17 significant digits) ==")
    print("// weak value at theta = 7 pi / 9, phi_sys = pi / 4")
    emit("kWeakValue", weak_value(7 * pi / 9, pi / 4))
    print("// cos^2(7 pi / 18)")
    emit("kNaiveSuccess", cos(7 * pi / 18) ** 2)
    print("// squeezed-vacuum photon statistics")
    emit("kSqMeanN_05", sinh(mpf("0.5")) ** 2)
    emit("kSqG2_05", 3 + 1 / sinh(mpf("0.5")) ** 2)
    emit("kSqG2_02", 3 + 1 / sinh(mpf("0.2")) ** 2)
    emit("kSqQ_05", 1 + 2 * sinh(mpf("0.5")) ** 2)
    print("// odd cat r = 0.3 photon statistics")
    v = cat(mpf("0.3"), 0, pi)
    emit("kCatG2_03", g2(v))
    emit("kCatQ_03", mandel_q(v))
    print("// displaced-squeezed amplitude n=2, beta=1/2, eta=0.5, delta=pi/3")
    amp = sq_amp_vec(mpf("0.5"), mpf("0.5"), pi / 3, dim=8)
    emit("kSqAmp2", amp[2])
    print("// success probability, coherent pointer "
          "(r=1, vartheta=pi/3, theta=7pi/9, phi_sys=pi/4, s=2)")
    vv = coherent(1, pi / 3)
    _, p = postselect(2, 7 * pi / 9, pi / 4, vv)
    emit("kCohSuccess", p)
    print("// coherent pinned point: r=1, vartheta=pi/3, theta=7pi/9, "
          "phi_sys=4pi/5, s=2, phi_quad=pi/5")
    fin, p = postselect(2, 7 * pi / 9, 4 * pi / 5, vv)
    emit("kCohP_success", p)
    emit("kCohP_meanN", mean_n(fin))
    emit("kCohP_pair", a2a2(fin))
    emit("kCohP_xphi", x_phi(fin, pi / 5))
    emit("kCohP_a2", a2_mean(fin))
    emit("kCohP_g2", g2(fin))
    emit("kCohP_q", mandel_q(fin))
    emit("kCohP_sphi", s_phi(fin, pi / 5))
    emit("kCohP_p2", re(fin[2] * conj(fin[2])))
    print("// squeezed pinned point: eta=0.5, delta=pi/3, theta=pi/3, "
          "phi_sys=pi/3, s=1, phi_quad=pi/5")
    vv = squeezed_vacuum(mpf("0.5"), pi / 3)
    fin, p = postselect(1, pi / 3, pi / 3, vv)
    emit("kSqP_success", p)
    emit("kSqP_meanN", mean_n(fin))
    emit("kSqP_xphi", x_phi(fin, pi / 5))
    emit("kSqP_x2phi", x2_phi(fin, pi / 5))
    emit("kSqP_g2", g2(fin))
    emit("kSqP_sphi", s_phi(fin, pi / 5))
    print("// cat pinned point: r=0.5, delta=pi/3, omega=pi/2, theta=pi/3, "
          "phi_sys=pi/3, s=1, phi_quad=pi/5")
    vv = cat(mpf("0.5"), pi / 3, pi / 2)
    fin, p = postselect(1, pi / 3, pi / 3, vv)
    emit("kCatP_success", p)
    emit("kCatP_meanN", mean_n(fin))
    emit("kCatP_pair", a2a2(fin))
    emit("kCatP_amean", a_mean(fin))
    emit("kCatP_a2", a2_mean(fin))
    emit("kCatP_sphi", s_phi(fin, pi / 5))
    print("// initial even/odd cat squeezing parameter, corrected closed form")
    emit("kCatInitS_r03_om0_phi157", cat_init_sphi(mpf("0.3"), 0, pi / 2))
    emit("kCatInitS_r10_om0_phi157", cat_init_sphi(1, 0, pi / 2))
    emit("kCatInitS_r05_ompi2_phi07", cat_init_sphi(mpf("0.5"), pi / 2, mpf("0.7")))
    print()
    print(f"total failures: {failures}")
    return failures


if __name__ == "__main__":
    raise SystemExit(main())
