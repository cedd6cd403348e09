import mpmath as mp
mp.mp.dps = 40

print("// U(a, l+1, z) reference grid, 40-digit arithmetic")
cases = [
    (-0.3, 0, 0.25), (-0.3, 0, 0.9), (-0.3, 1, 2.0), (-0.7, 0, 5.5),
    (-1.5, 2, 0.9), (-1.5, 4, 2.0), (-2.25, 1, 0.25), (-2.25, 6, 5.5),
    (-4.8, 0, 2.0), (-4.8, 2, 8.0), (-7.3, 1, 0.9), (-7.3, 8, 2.0),
    (-11.6, 0, 5.5), (-11.6, 4, 8.0), (0.4, 0, 0.9), (0.4, 3, 2.0),
    (1.3, 2, 5.5), (2.0, 3, 1.5), (3.0, 1, 2.5), (-0.05, 6, 8.0),
    (-3.0000000001, 2, 1.0), (-2.9999999999, 2, 1.0),
    (-5.000001, 0, 4.0), (-4.999999, 0, 4.0),
]
for a, l, z in cases:
    v = mp.hyperu(mp.mpf(repr(a)), l + 1, mp.mpf(repr(z)))
    print(f"    {{{a!r}, {l}, {z!r}, {mp.nstr(v, 19, strip_zeros=False)}}},")

print()
print("// z > 40 asymptotic-branch grid")
for a, l, z in [(-0.5, 0, 50.0), (-2.3, 3, 50.0), (-1.25, 1, 80.0), (-3.7, 5, 120.0), (0.35, 0, 200.0)]:
    v = mp.hyperu(mp.mpf(repr(a)), l + 1, mp.mpf(repr(z)))
    print(f"    {{{a!r}, {l}, {z!r}, {mp.nstr(v, 19, strip_zeros=False)}}},")

def m_root(l, r0, bracket):
    z0 = mp.mpf(repr(r0)) ** 2 / 2
    f = lambda m: mp.hyperu(-m, l + 1, z0)
    return mp.findroot(f, bracket, solver='anderson')

print()
print("// m-root anchors")
for l, r0, br, name in [
    (0, 1.0, (0.3, 0.9), "m1(l=0,r0=1)"),
    (0, 0.001, (0.02, 0.2), "m1(l=0,r0=1e-3)"),
    (3, 2.0, (1.0, 2.4), "m2(l=3,r0=2)"),
    (6, 4.0, (4.0, 9.0), "m3(l=6,r0=4)"),
]:
    # bracket by scan for the right order
    pass

# scan-based root finder to get ordered roots
def ordered_roots(l, r0, count, mmax=30, step=0.02):
    z0 = mp.mpf(repr(r0)) ** 2 / 2
    f = lambda m: mp.hyperu(-m, l + 1, z0)
    roots = []
    prev_m, prev_f = mp.mpf(0), f(mp.mpf(0))
    m = step
    while len(roots) < count and m <= mmax + 1e-9:
        fm = f(mp.mpf(repr(m)) if isinstance(m, float) else m)
        if fm == 0:
            roots.append(mp.mpf(m))
        elif prev_f * fm < 0:
            roots.append(mp.findroot(f, (prev_m, m), solver='anderson'))
        prev_m, prev_f = mp.mpf(m), fm
        m += step
    return roots

for l, r0, o in [(0, 1.0, 1), (0, 0.001, 1), (3, 2.0, 2), (6, 4.0, 3), (0, 4.0, 2), (4, 4.0, 1)]:
    rs = ordered_roots(l, r0, o)
    print(f"    m_o{o}(l={l}, r0={r0}) = {mp.nstr(rs[o-1], 19)}")
