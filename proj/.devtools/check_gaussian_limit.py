import mpmath as mp
mp.mp.dps = 30

l = 0
r0 = mp.mpf('0.001')
z0 = r0**2/2
f = lambda m: mp.hyperu(-m, l+1, z0)
m1 = mp.findroot(f, (mp.mpf('0.02'), mp.mpf('0.2')), solver='anderson')
E = l+1+2*m1
print("m1 =", mp.nstr(m1, 16), " E =", mp.nstr(E, 16))

a = -m1
def R(r):
    return r**l * mp.e**(-r*r/4) * mp.hyperu(a, l+1, r*r/2)
def dR(r):
    z = r*r/2
    U = mp.hyperu(a, l+1, z)
    dU = -a*mp.hyperu(a+1, l+2, z)   # dU/dz
    return mp.e**(-z/2) * (l*r**max(l-1,0)*U - r**(l+1)/2*U + r**(l+1)*dU) if l>0 else \
           mp.e**(-z/2) * (-r/2*U + r*dU)

rmax = 2*mp.sqrt(E) + 10
norm = mp.quad(lambda r: R(r)**2 * r, [r0, 1, rmax])
print("norm =", mp.nstr(norm, 12))
pot = mp.quad(lambda r: R(r)**2 * (r*r/4) * r, [r0, 1, rmax]) / norm
kin = mp.quad(lambda r: (dR(r)**2 + (l*l/(r*r))*R(r)**2) * r, [r0, 1, rmax]) / norm
print("potential =", mp.nstr(pot, 12))
print("kinetic   =", mp.nstr(kin, 12))
print("sum       =", mp.nstr(pot+kin, 12), " vs E =", mp.nstr(E, 12))
Frho = 4 * mp.quad(lambda r: dR(r)**2 * r, [r0, 1, rmax]) / norm
print("F_rho     =", mp.nstr(Frho, 12))

# trend toward the true Gaussian-limit values at smaller r0
for r0s in ['1e-4', '1e-6', '1e-9']:
    r0 = mp.mpf(r0s)
    z0 = r0**2/2
    m1 = mp.findroot(lambda m: mp.hyperu(-m, 1, z0), (mp.mpf('0.005'), mp.mpf('0.2')), solver='anderson')
    E = 1+2*m1
    a = -m1
    def R(r):
        return mp.e**(-r*r/4) * mp.hyperu(a, 1, r*r/2)
    def dR(r):
        z = r*r/2
        return mp.e**(-z/2) * (-r/2*mp.hyperu(a,1,z) + r*(-a*mp.hyperu(a+1,2,z)))
    rmax = 2*mp.sqrt(E) + 10
    norm = mp.quad(lambda r: R(r)**2 * r, [r0, 1, rmax])
    pot = mp.quad(lambda r: R(r)**2*(r*r/4)*r, [r0, 1, rmax]) / norm
    kin = E - pot
    print(r0s, " E =", mp.nstr(E,10), " pot =", mp.nstr(pot,8), " kin =", mp.nstr(kin,8), " F_rho =", mp.nstr(4*kin,8))
