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
        if b - a < mp.mpf('1e-13'): break
    r0s = (a + b) / 2
    return r0s, energy(la, oa, r0s)

# locate (6,1) crossings by coarse scan of sign of difference
for (lb, ob) in [(0, 3), (3, 2)]:
    print(f"scan E(6,1)-E({lb},{ob}):")
    prev = None
    for r0 in [0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.4, 2.0, 3.0, 4.5, 6.0]:
        d = energy(6, 1, r0) - energy(lb, ob, r0)
        print(f"   r0={r0:4}: diff={mp.nstr(d, 8)}")

r0s, es = crossing(0, 2, 4, 1, 1.0, 4.0)
print("(0,2)x(4,1): r0* =", mp.nstr(r0s, 16), " E* =", mp.nstr(es, 16))

labels = [(l, o) for l in range(0, 9) for o in range(1, 5)]
def ranktable(r0):
    es = []
    for (l, o) in labels:
        rs = ordered_roots(l, r0, o, mmax=12)
        if len(rs) >= o:
            es.append(((l, o), l + 1 + 2 * rs[o - 1]))
    es.sort(key=lambda t: t[1])
    return es

for r0 in [r0s - mp.mpf('0.02'), r0s + mp.mpf('0.02')]:
    es = ranktable(r0)
    print(f"r0={mp.nstr(r0,8)}: lowest 9:")
    for i, (lab, e) in enumerate(es[:9]):
        print(f"   rank {i+1}: {lab} E={mp.nstr(e,10)}")
