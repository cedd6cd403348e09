import mpmath as mp
mp.mp.dps = 40

def solve_m(l, r0, bracket):
    z0 = mp.mpf(r0)**2/2
    return mp.findroot(lambda m: mp.hyperu(-m, l+1, z0), bracket, solver='anderson')

# anchor radii in exact-double and 8-digit truncated forms
cases = [
    (0, '1.4142135623730951', (mp.mpf('0.9'), mp.mpf('1.1')), 3),   # sqrt(2) in doubles
    (4, '3.1622776601683795', (mp.mpf('0.9'), mp.mpf('1.1')), 7),   # sqrt(10) in doubles
    (0, '1.0823922', (mp.mpf('1.9'), mp.mpf('2.1')), 5),
    (0, '2.6131259', (mp.mpf('1.9'), mp.mpf('2.1')), 5),
]
for l, r0, br, e_exact in cases:
    m = solve_m(l, r0, br)
    E = l + 1 + 2*m
    print(f"l={l} r0={r0}: E = {mp.nstr(E, 20)}  |E-{e_exact}| = {mp.nstr(abs(E-e_exact), 6)}")
