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
    glo, ghi = g(mp.mpf(lo)), g(mp.mpf(hi))
    assert glo * ghi < 0, (glo, ghi)
    a, b = mp.mpf(lo), mp.mpf(hi)
    for _ in range(120):
        mid = (a + b) / 2
        gm = g(mid)
        if gm == 0: return mid
        if glo * gm < 0: b = mid
        else: a, glo = mid, gm
        if b - a < mp.mpf('1e-14'): break
    r0s = (a + b) / 2
    return r0s, energy(la, oa, r0s)

print("(0,2)x(4,1) in [1,4]:")
r0s, es = crossing(0, 2, 4, 1, 1.0, 4.0)
print("  r0* =", mp.nstr(r0s, 16), " E* =", mp.nstr(es, 16))

print("(6,1)x(0,3) in [1,6]:")
r0s2, es2 = crossing(6, 1, 0, 3, 1.0, 6.0)
print("  r0* =", mp.nstr(r0s2, 16), " E* =", mp.nstr(es2, 16))

print("(6,1)x(3,2) in [1,6]:")
r0s3, es3 = crossing(6, 1, 3, 2, 1.0, 6.0)
print("  r0* =", mp.nstr(r0s3, 16), " E* =", mp.nstr(es3, 16))

# rank of the crossing pair at r0 slightly below/above r0* among all low levels
labels = [(l, o) for l in range(0, 9) for o in range(1, 5)]
def ranks(r0, etol=30):
    es = []
    for (l, o) in labels:
        rs = ordered_roots(l, r0, o)
        if len(rs) >= o:
            es.append(((l, o), l + 1 + 2 * rs[o - 1]))
    es.sort(key=lambda t: t[1])
    return es

eps = mp.mpf('0.01')
for r0 in [r0s - eps, r0s + eps]:
    es = ranks(r0)
    print(f"r0={mp.nstr(r0,8)}: first 8 levels:")
    for i, (lab, e) in enumerate(es[:8]):
        print(f"   rank {i+1}: {lab} E={mp.nstr(e,10)}")
