"""Independent mpmath computation of the refined parameter QFI.

F(s) = 4 * ((1 - <psi_+|psi_->)/(2 s^2) - ((<psi|psi_+> - <psi|psi_->)/(2 s))^2)
with normalized radial states at r0 +- s, zero-extended below their walls,
then one linear Richardson pass  F_ref = 2 F(s/2) - F(s)  at the default
step s = 1e-3 * max(1, r0).  Freezes fixtures for the C++ unit tests.
"""
import mpmath as mp

mp.mp.dps = 40

def ordered_roots(l, r0, count, mmax=40, step=0.02):
    z0 = mp.mpf(r0) ** 2 / 2
    f = lambda m: mp.hyperu(-m, l + 1, z0)
    roots = []
    prev_m, prev_f = mp.mpf(0), f(mp.mpf(0))
    m = mp.mpf(step)
    while len(roots) < count and m <= mmax:
        fm = f(m)
        if prev_f * fm < 0:
            roots.append(mp.findroot(f, (prev_m, m), solver='anderson'))
        prev_m, prev_f = m, fm
        m += mp.mpf(step)
    return roots

def state(l, o, r0):
    r0 = mp.mpf(r0)
    m = ordered_roots(l, r0, o)[o - 1]
    R = lambda r: r ** l * mp.exp(-r * r / 4) * mp.hyperu(-m, l + 1, r * r / 2)
    pts = [r0, r0 + 2, r0 + 6, r0 + 12, mp.inf]
    norm2 = mp.quad(lambda r: R(r) ** 2 * r, pts)
    return m, R, mp.sqrt(norm2)

def qfi_raw(l, o, r0, s):
    r0, s = mp.mpf(r0), mp.mpf(s)
    _, Rc, Nc = state(l, o, r0)
    _, Rp, Np = state(l, o, r0 + s)
    _, Rm, Nm = state(l, o, r0 - s)
    # products vanish below the larger wall of each pair
    def ov(Ra, Na, ra, Rb, Nb, rb):
        lo = max(ra, rb)
        pts = [lo, lo + 2, lo + 6, lo + 12, mp.inf]
        v = mp.quad(lambda r: Ra(r) * Rb(r) * r, pts) / (Na * Nb)
        return v
    ocp = ov(Rc, Nc, r0, Rp, Np, r0 + s)
    ocm = ov(Rc, Nc, r0, Rm, Nm, r0 - s)
    assert ocp > 0 and ocm > 0  # hyperu sign convention is stable for tiny s
    opm = ov(Rp, Np, r0 + s, Rm, Nm, r0 - s)
    dn2 = (1 - opm) / (2 * s * s)
    coup = (ocp - ocm) / (2 * s)
    return 4 * (dn2 - coup * coup)

def qfi_refined(l, o, r0):
    s = mp.mpf('1e-3') * max(mp.mpf(1), mp.mpf(r0))
    return 2 * qfi_raw(l, o, r0, s / 2) - qfi_raw(l, o, r0, s)

for (l, o, r0) in [(0, 2, '1.1'), (4, 1, '1.1'), (4, 1, '2.0')]:
    v = qfi_refined(l, o, mp.mpf(r0))
    print(f"({l},{o}) r0={r0}: F_r0_refined = {mp.nstr(v, 16)}")
