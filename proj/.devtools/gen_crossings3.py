import mpmath as mp
mp.mp.dps = 30

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

def energy(l, o, r0):
    return l + 1 + 2 * ordered_roots(l, r0, o)[o - 1]

def crossing(la, oa, lb, ob, lo, hi):
    g = lambda r0: energy(la, oa, r0) - energy(lb, ob, r0)
    a, b = mp.mpf(lo), mp.mpf(hi)
    glo = g(a)
    for _ in range(100):
        mid = (a + b) / 2
        gm = g(mid)
        if glo * gm < 0: b = mid
        else: a, glo = mid, gm
        if b - a < mp.mpf('1e-14'): break
    r0s = (a + b) / 2
    return r0s, energy(la, oa, r0s)

r0s, es = crossing(6, 1, 0, 3, 0.5, 1.2)
print("(6,1)x(0,3): r0* =", mp.nstr(r0s, 16), " E* =", mp.nstr(es, 16))
r0s, es = crossing(6, 1, 3, 2, 1.2, 3.0)
print("(6,1)x(3,2): r0* =", mp.nstr(r0s, 16), " E* =", mp.nstr(es, 16))

# first-order band gaps at r0=3 vs 8, fitted dm
for r0 in [3.0, 8.0]:
    print(f"r0={r0}: o=1 energies l=0..5:")
    es = [energy(l, 1, r0) for l in range(6)]
    gaps = [es[i+1]-es[i] for i in range(5)]
    dms = [(g-1)/2 for g in gaps]
    print("   E:", [mp.nstr(e, 8) for e in es])
    print("   gaps:", [mp.nstr(g, 6) for g in gaps])
    print("   dm:", [mp.nstr(d, 5) for d in dms])
