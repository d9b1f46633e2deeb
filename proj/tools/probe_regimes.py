#!/usr/bin/env python3
"""Quick numeric probes of the figure-regime sign checks used by the
acceptance suite. Not part of the build; exploration only."""

from mpmath import mp, mpf, mpc, exp, pi

mp.dps = 25
import reference_values as rv

rv.mp.dps = 25


def final(spec_kind, s, theta, phis, **kw):
    if spec_kind == "coh":
        v = rv.coherent(kw["r"], kw["vartheta"], dim=kw.get("dim", 160))
    elif spec_kind == "sq":
        v = rv.squeezed_vacuum(kw["eta"], kw["delta"], dim=kw.get("dim", 160))
    else:
        v = rv.cat(kw["r"], kw["delta"], kw["omega"], dim=kw.get("dim", 160))
    u, p = rv.postselect(s, theta, phis, v)
    return u, p


def probe_fig2():
    print("-- coherent g2: theta=7pi/9, phi=4pi/5, vartheta=pi/3 --")
    for s in [mpf("0.2"), 2]:
        for r in [mpf("0.3"), mpf("0.5"), 1]:
            u, _ = final("coh", s, 7 * pi / 9, 4 * pi / 5, r=r, vartheta=pi / 3)
            print(f"  s={float(s):4g} r={float(r):4g} g2={float(rv.g2(u)):8.4f}")


def probe_fig3():
    print("-- coherent S_phi: phi_sys=4pi/5, vartheta=pi/3 --")
    for (th, phiq, label) in [(pi / 9, pi / 2, "th=pi/9 P-quad"),
                              (7 * pi / 9, pi / 2, "th=7pi/9 P-quad"),
                              (pi / 9, 0, "th=pi/9 X-quad")]:
        worst = (None, 99)
        for s10 in range(0, 31, 2):
            s = mpf(s10) / 10
            for r in [mpf("0.5"), 1, mpf("1.5")]:
                u, _ = final("coh", s, th, 4 * pi / 5, r=r, vartheta=pi / 3)
                val = float(rv.s_phi(u, phiq))
                if val < worst[1]:
                    worst = ((float(s), float(r)), val)
        print(f"  {label}: min S = {worst[1]:9.5f} at (s,r)={worst[0]}")


def probe_fig5():
    print("-- squeezed g2/Q: theta=7pi/9, phi=pi/3, delta=pi/3 --")
    for s in [mpf("0.5"), 1, 2]:
        for eta in [mpf("0.2"), mpf("0.5"), mpf("0.8")]:
            u, _ = final("sq", s, 7 * pi / 9, pi / 3, eta=eta, delta=pi / 3)
            print(f"  s={float(s):4g} eta={float(eta):4g} "
                  f"g2={float(rv.g2(u)):9.4f} Q={float(rv.mandel_q(u)):9.4f}")


def probe_fig6d():
    print("-- squeezed S_{pi/2}: eta=0.5, delta=0, phi_sys=pi/3 --")
    worst = 99
    for th in [pi / 9, pi / 3, 5 * pi / 9, 7 * pi / 9]:
        for s10 in range(0, 31, 3):
            u, _ = final("sq", mpf(s10) / 10, th, pi / 3, eta=mpf("0.5"), delta=0)
            worst = min(worst, float(rv.s_phi(u, pi / 2)))
    print(f"  min S_(pi/2) over grid = {worst:.6g}")
    worst = 99
    for th in [pi / 9, 7 * pi / 9]:
        for s10 in range(0, 31, 3):
            u, _ = final("sq", mpf(s10) / 10, th, pi / 3, eta=mpf("0.5"), delta=0)
            worst = min(worst, float(rv.s_phi(u, 0)))
    print(f"  fig6c check: min S_0 over grid = {worst:.6g}")


def probe_fig9():
    print("-- odd cat S_phi: r=0.3, delta=0, phi_sys=0 --")
    worst = 99
    for th in [pi / 9, pi / 3, 5 * pi / 9, 7 * pi / 9]:
        for phi16 in range(17):
            u, _ = final("cat", mpf("0.5"), th, 0, r=mpf("0.3"), delta=0, omega=pi)
            worst = min(worst, float(rv.s_phi(u, pi * phi16 / 16)))
    for s10 in [2, 5, 10, 20]:
        for phi16 in range(17):
            u, _ = final("cat", mpf(s10) / 10, pi / 9, 0, r=mpf("0.3"), delta=0, omega=pi)
            worst = min(worst, float(rv.s_phi(u, pi * phi16 / 16)))
    print(f"  min S over odd-cat grid = {worst:.6g}")
    print("-- even cat (fig9a): squeezing exists? --")
    best = 99
    for s10 in [2, 5, 10, 20]:
        u, _ = final("cat", mpf(s10) / 10, pi / 9, 0, r=mpf("0.3"), delta=0, omega=0)
        for phi16 in range(17):
            best = min(best, float(rv.s_phi(u, pi * phi16 / 16)))
    print(f"  min S over even-cat grid = {best:.6g}")


probe_fig2()
probe_fig3()
probe_fig5()
probe_fig6d()
probe_fig9()
