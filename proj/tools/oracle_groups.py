#!/usr/bin/env python3
"""Independent floating-point cross-check for the exact group kernel.

Builds every cataloged matrix from its closed-form entries using complex
doubles, closes the generated groups by BFS with value-rounded hashing, and
prints a golden table of orders, spectra, Sylow data, identity checks, and
map verifications.  The exact (cyclotomic) implementation must reproduce
every line of this output; the unit tests freeze these values as constants.

Run:  python3 tools/oracle_groups.py
"""

import cmath
import math
import sys
from itertools import permutations

FAILURES = []


def report(label, ok, detail=""):
    tag = "ok  " if ok else "FAIL"
    if not ok:
        FAILURES.append(label)
    print(f"{tag} {label}" + (f"  {detail}" if detail else ""))


def val(label, value):
    print(f"val {label} = {value}")


# ---------------------------------------------------------------------------
# complex 3x3 matrices as 9-tuples, row-major

def e(x):
    """exp(2*pi*i*x)"""
    return cmath.exp(2j * math.pi * x)


I3 = (1, 0, 0, 0, 1, 0, 0, 0, 1)


def mul(a, b):
    return tuple(
        sum(a[3 * r + k] * b[3 * k + c] for k in range(3))
        for r in range(3) for c in range(3)
    )


def dagger(a):
    return tuple(a[3 * c + r].conjugate() for r in range(3) for c in range(3))


def dist(a, b):
    return max(abs(x - y) for x, y in zip(a, b))


def meq(a, b, tol=1e-8):
    return dist(a, b) < tol


def mpow(a, n):
    if n < 0:
        return mpow(dagger(a), -n)
    r = I3
    for _ in range(n):
        r = mul(r, a)
    return r


def key(a):
    out = []
    for x in a:
        re = round(x.real, 6)
        im = round(x.imag, 6)
        out.append((re + 0.0, im + 0.0))
    return tuple(out)


def det(a):
    return (a[0] * (a[4] * a[8] - a[5] * a[7])
            - a[1] * (a[3] * a[8] - a[5] * a[6])
            + a[2] * (a[3] * a[7] - a[4] * a[6]))


def trace(a):
    return a[0] + a[4] + a[8]


def is_su3(a):
    return meq(mul(a, dagger(a)), I3) and abs(det(a) - 1) < 1e-8


def order(a, cap=700):
    m = a
    for k in range(1, cap + 1):
        if meq(m, I3):
            return k
        m = mul(m, a)
    raise RuntimeError("order exceeds cap")


def diag(a, b, c):
    return (a, 0, 0, 0, b, 0, 0, 0, c)


def antidiag(a, b, c):
    return (0, 0, a, 0, b, 0, c, 0, 0)


def is_cross(a):
    return all(abs(a[i]) < 1e-8 for i in (1, 3, 5, 7))


def is_diag(a):
    return all(abs(a[i]) < 1e-8 for i in (1, 2, 3, 5, 6, 7))


# ---------------------------------------------------------------------------
# group closure machinery

def closure(gens, cap=10000):
    """BFS closure under left multiplication by generators and inverses."""
    elems = {key(I3): I3}
    frontier = [I3]
    gset = list(gens) + [dagger(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gset:
                y = mul(g, x)
                k = key(y)
                if k not in elems:
                    if len(elems) >= cap:
                        raise RuntimeError("closure cap exceeded")
                    elems[k] = y
                    nxt.append(y)
        frontier = nxt
    return elems


def spectrum(elems):
    spec = {}
    for m in elems.values():
        o = order(m)
        spec[o] = spec.get(o, 0) + 1
    return dict(sorted(spec.items()))


def subset(a, b):
    return all(k in b for k in a)


def set_eq(a, b):
    return len(a) == len(b) and subset(a, b)


def conj_set(g, elems):
    gi = dagger(g)
    out = {}
    for m in elems.values():
        c = mul(mul(g, m), gi)
        out[key(c)] = c
    return out


def centralizes(g, elems):
    return all(meq(mul(g, m), mul(m, g)) for m in elems.values())


def center(elems):
    return {k: m for k, m in elems.items() if centralizes(m, elems)}


def is_normal_in(h, g_elems):
    hk = set(h)
    for m in g_elems.values():
        mi = dagger(m)
        for x in h.values():
            if key(mul(mul(m, x), mi)) not in hk:
                return False
    return True


def normalizer(h, g_elems):
    out = {}
    hk = set(h)
    for k, m in g_elems.items():
        mi = dagger(m)
        if all(key(mul(mul(m, x), mi)) in hk for x in h.values()):
            out[k] = m
    return out


def p_part(n, p):
    v = 1
    while n % p == 0:
        n //= p
        v *= p
    return v


def is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroups(g_elems, p):
    """Grow one p-subgroup inside its normalizer, then conjugate and dedupe."""
    target = p_part(len(g_elems), p)
    ordered = [g_elems[k] for k in sorted(g_elems)]
    seed = next(m for m in ordered if order(m) == p)
    h = closure([seed])
    while len(h) < target:
        n = normalizer(h, g_elems)
        grown = False
        for m in [n[k] for k in sorted(n)]:
            if key(m) not in h and is_p_power(order(m), p):
                h = closure(list(h.values()) + [m], cap=2 * target)
                grown = True
                break
        if not grown:
            raise RuntimeError("sylow growth stalled")
    sylows = []
    seen = set()
    for m in ordered:
        c = conj_set(m, h)
        fz = frozenset(c)
        if fz not in seen:
            seen.add(fz)
            sylows.append(c)
    return sylows


# ---------------------------------------------------------------------------
# catalog matrices

s2 = 1 / math.sqrt(2)

G1 = diag(e(7 / 18), -e(2 / 9), -e(7 / 18))
g2a = e(2 / 9)   # e^{4 i pi / 9}
g2b = e(7 / 18)  # e^{7 i pi / 9}
G2 = (-0.5 * g2a, s2 * g2b, 0.5 * g2a,
      s2 * g2b, 0, s2 * g2b,
      0.5 * g2a, s2 * g2b, -0.5 * g2a)
FUM = antidiag(-e(1 / 3), -e(1 / 3), -e(1 / 3))

a1 = 0.5 * e(5 / 18) * (-1 + e(1 / 6))
a2 = 0.5 * e(5 / 18) * (1 + e(1 / 6))
A = (a1, 0, a2, 0, -e(5 / 18), 0, a2, 0, a1)
b1 = 0.5 * (1 + e(1 / 3))
b2 = 0.5 * (-1 + e(1 / 3))
B = (b1, 0, b2, 0, -e(1 / 6), 0, b2, 0, b1)

H0 = diag(-1, -1, 1)
H1 = (-0.5, -s2, -0.5, -s2, 0, s2, -0.5, s2, -0.5)
H2 = (-0.5, -s2, 0.5, -s2, 0, -s2, 0.5, -s2, -0.5)
H3 = (0.5, s2, -0.5, s2, 0, s2, 0.5, -s2, -0.5)
H4 = (0.5, s2, 0.5, s2, 0, -s2, -0.5, s2, -0.5)

E = (0, 1, 0, 0, 0, 1, 1, 0, 0)
Bt = (-1, 0, 0, 0, 0, -1, 0, -1, 0)


def F(n, a, b):
    return diag(e(a / n), e(b / n), e(-(a + b) / n))


def Gt(d, r, s):
    return (e(r / d), 0, 0,
            0, 0, e(s / d),
            0, -e(-(r + s) / d), 0)


Fm = F(18, 1, 1)
Fp = F(18, 1, -2)     # diag(e^{i pi/9}, e^{-2i pi/9}, e^{i pi/9})
Fpp = F(18, -2, 1)    # diag(e^{-2i pi/9}, e^{i pi/9}, e^{i pi/9})

V2 = mpow(FUM, 3)
X = mul(mul(G1, V2), dagger(G1))
Y = mul(V2, X)
C18 = mul(A, V2)
C6 = mul(B, X)

W2 = diag(-1, 1, -1)
W3 = diag(1, -1, -1)
W4 = diag(-1, -1, 1)
Wlist = [I3, W2, W3, W4]

eps = e(2 / 9)
om = e(1 / 3)
Dsig = diag(eps, eps, eps * om)
pref = 1 / (1j * math.sqrt(3))
Vsig = tuple(pref * v for v in (1, 1, 1, 1, om, om * om, 1, om * om, om))

O = (s2, 0, s2, 0, 1, 0, -s2, 0, s2)
Ot = dagger(O)

# ---------------------------------------------------------------------------
print("== transcription ==")
report("eq1.A=G1*G2^2*G1^-1", meq(A, mul(mul(G1, mpow(G2, 2)), dagger(G1))))
report("eq2.B=G1*G2^-2*G1", meq(B, mul(mul(G1, mpow(G2, -2)), G1)))
report("E*Bt=(FUM)^3", meq(mul(E, Bt), V2))
report("(FUM)^3=antidiag(-1,-1,-1)", meq(V2, antidiag(-1, -1, -1)))
report("X=antidiag(1,-1,1)", meq(X, antidiag(1, -1, 1)))
report("Y=diag(-1,1,-1)", meq(Y, diag(-1, 1, -1)))
report("H1*H3*H1=H4", meq(mul(mul(H1, H3), H1), H4))
report("H3=H1*H0", meq(H3, mul(H1, H0)))
report("H3^2=H4", meq(mpow(H3, 2), H4))
c18_disp = tuple(e(5 / 18) * v for v in
                 (-0.5 * (1 + e(1 / 6)), 0, -0.5 * (-1 + e(1 / 6)),
                  0, 1, 0,
                  -0.5 * (-1 + e(1 / 6)), 0, -0.5 * (1 + e(1 / 6))))
report("C18 display", meq(C18, c18_disp))
c6_disp = (0.5 * (-1 + e(1 / 3)), 0, 0.5 * (1 + e(1 / 3)),
           0, e(1 / 6), 0,
           0.5 * (1 + e(1 / 3)), 0, 0.5 * (-1 + e(1 / 3)))
report("C6 display", meq(C6, c6_disp))
report("O orthogonal", meq(mul(O, dagger(O)), I3))
report("A^3=omega*I", meq(mpow(A, 3), diag(om, om, om)))
report("FUM^-2=A^3", meq(mpow(FUM, -2), mpow(A, 3)))
report("F^6=omega*I", meq(mpow(Fm, 6), diag(om, om, om)))
report("F^12=omega^2*I", meq(mpow(Fm, 12), diag(om * om, om * om, om * om)))
report("F^9=W4", meq(mpow(Fm, 9), W4))
report("Fp=E*F*E^-1", meq(Fp, mul(mul(E, Fm), dagger(E))))
report("Gt(2,1,1)=Bt", meq(Gt(2, 1, 1), Bt))
report("Gt(2,0,1)", meq(Gt(2, 0, 1), (1, 0, 0, 0, 0, -1, 0, 1, 0)))
report("Gt(2,0,0)=Gt(2,0,1)^-1", meq(Gt(2, 0, 0), dagger(Gt(2, 0, 1))))
report("Bt*W4=Gt(2,0,1)", meq(mul(Bt, W4), Gt(2, 0, 1)))
report("(Gt(2,0,1)*E)^2=W4", meq(mpow(mul(Gt(2, 0, 1), E), 2), W4))
report("(F*E*F^-1*E^2)^3=W3",
       meq(mpow(mul(mul(mul(Fm, E), dagger(Fm)), mpow(E, 2)), 3), W3))
report("(E^2*F*E*F^-1)^3=W2",
       meq(mpow(mul(mul(mul(mpow(E, 2), Fm), E), dagger(Fm)), 3), W2))
report("W2*W3=W4", meq(mul(W2, W3), W4))
report("H4*FUM*H3*FUM^-1",
       meq(mul(mul(H4, FUM), mul(H3, dagger(FUM))),
           (0, 0, 1, 0, -1, 0, 1, 0, 0)))
report("FUM*H3*FUM^-1*H4",
       meq(mul(mul(FUM, H3), mul(dagger(FUM), H4)), diag(-1, 1, -1)))
for nm, m in [("G1", G1), ("G2", G2), ("FUM", FUM), ("A", A), ("B", B),
              ("H0", H0), ("H1", H1), ("H2", H2), ("H3", H3), ("H4", H4),
              ("E", E), ("Bt", Bt), ("F18", Fm), ("C18", C18), ("C6", C6),
              ("Dsig", Dsig), ("Vsig", Vsig)]:
    report(f"su3.{nm}", is_su3(m))
for nm, m, o in [("G1", G1, 18), ("G2", G2, 18), ("FUM", FUM, 6),
                 ("A", A, 9), ("B", B, 3), ("H0", H0, 2), ("H1", H1, 2),
                 ("H2", H2, 2), ("H3", H3, 3), ("H4", H4, 3),
                 ("C18", C18, 18), ("C6", C6, 6), ("E", E, 3), ("Bt", Bt, 2),
                 ("F18", Fm, 18), ("Dsig", Dsig, 9),
                 ("FUM3*H1", mul(V2, H1), 4)]:
    report(f"order.{nm}={o}", order(m) == o)
val("order.Vsig", order(Vsig))
report("trace.B=0", abs(trace(B)) < 1e-8)
report("trace.A!=0", abs(trace(A)) > 1e-6)
report("trace.AB!=0", abs(trace(mul(A, B))) > 1e-6)

# ---------------------------------------------------------------------------
print("== orders ==")
Fr162 = closure([G1, G2])
Fr = closure([G1, G2, FUM])
Dfull = closure([E, Bt, Fm])
D9 = closure([E, Bt, mpow(Fm, 2)])
Sigma = closure([Dsig, Vsig])
N = closure([A, B])
Hgrp = closure([H1, H3])
Vk = closure([V2, X])
F2 = mpow(Fm, 2)
FFpp2 = mpow(mul(Fm, dagger(Fpp)), 2)
Fscript = closure([F2, FFpp2])
S3F = closure([A, B, H3])
S3D = closure([F2, FFpp2, E])
Ngrp = closure([Fm, Fp, Fpp])
S54 = closure([A, B, H2])
EBt = closure([E, Bt])
VD = {key(w): w for w in Wlist}
for nm, g, o in [("Fr162", Fr162, 162), ("Fr162x4", Fr, 648),
                 ("D18-1-1-2-1-1", Dfull, 648), ("D9-1-1-2-1-1", D9, 162),
                 ("Sigma216x3", Sigma, 648), ("N=<A,B>", N, 27),
                 ("H=<H1,H3>", Hgrp, 6), ("V", Vk, 4),
                 ("Fscript", Fscript, 27), ("S3F", S3F, 81),
                 ("S3D", S3D, 81), ("N18", Ngrp, 108), ("S54", S54, 54),
                 ("<E,Bt>", EBt, 6)]:
    report(f"|{nm}|={o}", len(g) == o, f"got {len(g)}")
report("Fr=<G1,G2,EBt>", set_eq(closure([G1, G2, mul(E, Bt)]), Fr))
report("Fr=<G1,G2,FUM3>", set_eq(closure([G1, G2, V2]), Fr))
report("Fr162 subset Fr", subset(Fr162, Fr))
report("S3F subset Fr162", subset(S3F, Fr162))
report("S3D subset D9", subset(S3D, D9))
report("S3D=C(9,1,1)", set_eq(S3D, closure([E, F(9, 1, 1)])))
report("Fscript in S3D", subset(Fscript, S3D))
specFr = spectrum(Fr)
val("spec.Fr162x4", specFr)
val("spec.Sigma216x3", spectrum(Sigma))
val("spec.Fr162", spectrum(Fr162))
val("spec.D9", spectrum(D9))
val("spec.S54", spectrum(S54))
val("spec.N", spectrum(N))
val("spec.S3F", spectrum(S3F))
val("spec.S3D", spectrum(S3D))
val("spec.N18", spectrum(Ngrp))
report("spec differ Fr/Sigma", specFr != spectrum(Sigma))
for o in (24, 27, 54, 72, 108):
    report(f"Fr has no order {o}", o not in specFr)
report("N order-3 set", {k for k, m in N.items() if order(m) == 3} ==
       {key(mul(mpow(A, i), mpow(B, j)))
        for i in (0, 3, 6) for j in (0, 1, 2) if (i, j) != (0, 0)})

print("== centers ==")
for nm, g in [("Fr162x4", Fr), ("Fr162", Fr162), ("D18", Dfull), ("D9", D9),
              ("Sigma", Sigma), ("S3F", S3F), ("S3D", S3D), ("S54", S54)]:
    val(f"|Z({nm})|", len(center(g)))
zf = center(S3F)
report("Z(S3F) order-3 = {A3,A6}",
       {k for k, m in zf.items() if order(m) == 3} ==
       {key(mpow(A, 3)), key(mpow(A, 6))})
zd = center(S3D)
report("Z(S3D) order-3 = {F6,F12}",
       {k for k, m in zd.items() if order(m) == 3} ==
       {key(mpow(Fm, 6)), key(mpow(Fm, 12))})
report("H3,B do not commute", not meq(mul(H3, B), mul(B, H3)))
report("F6 commutes with E", meq(mul(mpow(Fm, 6), E), mul(E, mpow(Fm, 6))))
report("FFpp2 does not commute with E",
       not meq(mul(FFpp2, E), mul(E, FFpp2)))

# ---------------------------------------------------------------------------
print("== sylow ==")
syl3_fr = sylow_subgroups(Fr, 3)
syl2_fr = sylow_subgroups(Fr, 2)
syl3_d = sylow_subgroups(Dfull, 3)
syl2_d = sylow_subgroups(Dfull, 2)
syl3_fr162 = sylow_subgroups(Fr162, 3)
syl2_fr162 = sylow_subgroups(Fr162, 2)
syl3_d9 = sylow_subgroups(D9, 3)
syl3_sig = sylow_subgroups(Sigma, 3)
syl2_sig = sylow_subgroups(Sigma, 2)
val("n3(Fr162x4)", len(syl3_fr))
val("n2(Fr162x4)", len(syl2_fr))
val("n3(D18)", len(syl3_d))
val("n2(D18)", len(syl2_d))
val("n3(Fr162)", len(syl3_fr162))
val("n2(Fr162)", len(syl2_fr162))
val("n3(D9)", len(syl3_d9))
val("n3(Sigma)", len(syl3_sig))
val("n2(Sigma)", len(syl2_sig))
report("Fr162 3-sylow = S3F",
       len(syl3_fr162) == 1 and set_eq(syl3_fr162[0], S3F))
report("D9 3-sylow = S3D",
       len(syl3_d9) == 1 and set_eq(syl3_d9[0], S3D))
report("Fr 3-sylows are V-conjugates of S3F",
       all(any(set_eq(s, conj_set(v, S3F)) for v in Vk.values())
           for s in syl3_fr))
report("D18 3-sylows are W-conjugates of S3D",
       all(any(set_eq(s, conj_set(w, S3D)) for w in Wlist) for s in syl3_d))
report("D18 3-sylows match I/F/EF/E2F conjugates",
       all(any(set_eq(s, conj_set(c, S3D)) for c in
               [I3, Fm, mul(E, Fm), mul(mpow(E, 2), Fm)]) for s in syl3_d))
val("spec.2sylow.Fr162x4", spectrum(syl2_fr[0]))
val("spec.2sylow.Sigma", spectrum(syl2_sig[0]))
report("2sylow(Fr) = <V,H1> closure",
       any(set_eq(s, closure([V2, X, H1])) for s in syl2_fr))
gen_by_sylows = closure([m for s in syl3_fr for m in s.values()], cap=10000)
report("<all 3-sylows of Fr> order 324", len(gen_by_sylows) == 324)
report("3SylF normal in Fr", is_normal_in(gen_by_sylows, Fr))
report("3SylF = <V,S3F>", set_eq(gen_by_sylows, closure([V2, X, A, B, H3])))
gen_by_sylows_d = closure([m for s in syl3_d for m in s.values()], cap=10000)
report("<all 3-sylows of D18> order 324", len(gen_by_sylows_d) == 324)
report("3SylD normal in D18", is_normal_in(gen_by_sylows_d, Dfull))
report("V subset 3SylF", subset(Vk, gen_by_sylows))
report("VD subset 3SylD", subset(VD, gen_by_sylows_d))
report("VD normal in D18", is_normal_in(VD, Dfull))
report("V normal in Fr", is_normal_in(Vk, Fr))
report("N normal in Fr", is_normal_in(N, Fr))
report("V x S3F factorization of 3SylF",
       len({key(mul(v, s)) for v in Vk.values() for s in S3F.values()})
       == 324)
report("VD x Fscript = N18 bijective",
       set_eq({key(mul(w, f)): True for w in Wlist
               for f in Fscript.values()},
              {k: True for k in Ngrp}))
report("F' not in Fscript", key(Fp) not in Fscript)
report("F'E order 3", order(mul(Fp, E)) == 3)
report("F'E not in S3D", key(mul(Fp, E)) not in S3D)
report("FUM*H3 order 3", order(mul(FUM, H3)) == 3)
report("FUM*H3 not in S3F", key(mul(FUM, H3)) not in S3F)
report("FUM*H3 not cross", not is_cross(mul(FUM, H3)))
report("FUM*H3^-1 not cross", not is_cross(mul(FUM, dagger(H3))))
FEFi = mul(mul(Fm, E), dagger(Fm))
report("FEF^-1 not diagonal", not is_diag(FEFi))
d1 = mul(FEFi, dagger(E))
report("FEF^-1E^-1 diagonal order 6", is_diag(d1) and order(d1) == 6)
report("F^-1EFE^-1 order 6",
       order(mul(mul(mul(dagger(Fm), E), Fm), dagger(E))) == 6)
report("FEF^-1E^2 order 6", order(mul(FEFi, mpow(E, 2))) == 6)
report("E^2FEF^-1 order 6", order(mul(mpow(E, 2), FEFi)) == 6)
report("FEF^-1E^-2 not diagonal", not is_diag(mul(FEFi, mpow(E, -2))))
report("lemma2 squares into S3F",
       all(key(mpow(m, 2)) in S3F
           for k, m in Fr162.items() if k not in S3F))
report("cor2 H3,H3^2 in S3F",
       key(H3) in S3F and key(mpow(H3, 2)) in S3F)
report("lemma3 odd orders in S3D",
       all(key(m) in S3D for m in D9.values() if order(m) % 2 == 1))

# chain
print("== chain ==")
A3g = closure([mpow(A, 3)])
Ag = closure([A])
NV2 = closure([A, B, V2])
NV = closure([A, B, V2, X])
chain = [({key(I3): I3}, "{e}"), (A3g, "<A^3>"), (Ag, "<A>"), (N, "N"),
         (NV2, "N.<FUM^3>"), (NV, "N.V"), (gen_by_sylows, "3SylF"),
         (Fr, "Fr")]
orders = [len(g) for g, _ in chain]
val("chain orders", orders)
idx = [orders[i + 1] // orders[i] for i in range(len(orders) - 1)]
report("chain indices 3,3,3,2,2,3,2", idx == [3, 3, 3, 2, 2, 3, 2])
for i in range(len(chain) - 1):
    g, nm = chain[i]
    gg, nn = chain[i + 1]
    report(f"{nm} normal in {nn}", is_normal_in(g, gg))
for g, nm in chain[:-1]:
    val(f"normal-in-Fr {nm}", is_normal_in(g, Fr))
report("H3AH3^-1=AB so <A> not normal",
       meq(mul(mul(H3, A), dagger(H3)), mul(A, B)))
report("N cap V trivial", len([k for k in N if k in Vk]) == 1)
report("NV cap H trivial", len([k for k in NV if k in Hgrp]) == 1)
report("A,B commute with V2,X",
       all(meq(mul(p, q), mul(q, p)) for p in (A, B) for q in (V2, X)))

# ---------------------------------------------------------------------------
print("== factorization ==")
prods = {}
Hlist = [I3, H0, H1, H2, H3, H4]
for i in range(9):
    for j in range(3):
        ab = mul(mpow(A, i), mpow(B, j))
        for v in [I3, V2, X, Y]:
            abv = mul(ab, v)
            for h in Hlist:
                prods[key(mul(abv, h))] = True
report("thm1 unique factorization 9*3*4*6", len(prods) == 648)
report("factorization covers Fr", set_eq(prods, {k: True for k in Fr}))
prods2 = {key(mul(n, h)): True for n in N.values() for h in Hlist}
report("Fr162 = N.H bijective", len(prods2) == 162 and
       set_eq(prods2, {k: True for k in Fr162}))
report("cross closed over A^iB^j",
       all(is_cross(mul(mpow(A, i), mpow(B, j)))
           for i in range(9) for j in range(3)))

# ---------------------------------------------------------------------------
print("== equations ==")


def weq(lbl, lhs, rhs):
    report(lbl, meq(lhs, rhs))


weq("eq3", mul(mul(G2, X), dagger(G2)), Y)
weq("eq4", mul(mul(dagger(G2), X), G2), Y)
weq("eq5", mul(mul(FUM, X), dagger(FUM)), X)
weq("eq6", mul(mul(dagger(FUM), X), FUM), X)
weq("eq7", mul(mul(G2, Y), dagger(G2)), X)
weq("eq8", mul(mul(dagger(G2), Y), G2), X)
weq("eq9", mul(mul(mpow(FUM, 4), X), dagger(FUM)), Y)
weq("eq10", mul(mul(mpow(FUM, 2), X), FUM), Y)
weq("eq11", mul(mul(FUM, A), dagger(FUM)), A)
weq("eq12", mul(mul(FUM, B), dagger(FUM)), B)
weq("eq13", FUM, mul(mpow(A, 3), V2))
weq("eq16", Fp, dagger(mul(Fm, Fpp)))
weq("eq17", Fpp, dagger(mul(Fm, Fp)))
weq("eq18", Fp, mul(mpow(Fm, -2), mul(Fm, dagger(Fpp))))
weq("eq19", mul(mul(H3, C18), dagger(H3)),
    mul(mul(mul(mpow(C18, 10), mpow(C6, 4)), V2), Y))
weq("eq20", mpow(C6, 3), antidiag(1, -1, 1))
weq("eq21", mul(mul(H3, C18), dagger(H3)), mul(mpow(C18, 10), mpow(C6, 7)))
weq("eq22", mpow(C18, 2), mpow(A, 2))
weq("eq23", mpow(C18, 3), FUM)
weq("eq24", mul(mul(H1, C6), dagger(H1)),
    mul(mul(mpow(C6, 2), mpow(FUM, 2)), X))
weq("eq25", mul(mul(H1, C6), dagger(H1)), mul(mpow(C6, 5), mpow(C18, 6)))
weq("eq26", mul(mul(mul(H3, C6), dagger(H3)),
                mul(FUM, mul(mpow(C18, 6), mpow(C6, 5)))),
    diag(om * om, om * om, om * om))
m27 = diag(e(2 / 9), -e(1 / 18), e(2 / 9))
weq("eq27", mul(mul(mul(H1, C18), dagger(H1)),
                mul(FUM, mul(mpow(C18, 4), mpow(C6, 5)))), m27)
aa, bb, cc = 0.3 + 0.4j, -0.1 + 0.9j, 0.7 - 0.2j
m28l = mul((aa, 0, bb, 0, cc, 0, bb, 0, aa),
           (aa, 0, -bb, 0, cc, 0, -bb, 0, aa))
weq("eq28", m28l, diag(aa * aa - bb * bb, cc * cc, aa * aa - bb * bb))
weq("eq29", mul(mul(H3, C6), dagger(H3)), mul(mpow(C6, -5), mpow(C18, -3)))
weq("eq30", mul(mpow(C6, 2), mpow(C18, 8)), m27)
weq("eq31", mul(mul(H1, C18), dagger(H1)), mul(mpow(C6, 3), C18))
weq("eq34", mul(mul(H1, A), dagger(H1)), A)
weq("eq35", mul(mul(H1, B), dagger(H1)), mul(mpow(A, 6), mpow(B, 2)))
weq("eq36", mul(mul(H3, A), dagger(H3)), mul(A, B))
weq("eq37", mul(mul(H3, B), dagger(H3)), mul(mpow(A, 6), B))
fB = mul(mpow(Fm, -2), mul(mul(E, mpow(Fm, 2)), dagger(E)))
weq("eq38", mul(mul(mul(mul(Bt, E), mpow(Fm, 2)), dagger(E)), Bt),
    mpow(Fm, 2))
weq("eq39", mul(mul(E, mpow(Fm, 2)), dagger(E)), mul(mpow(Fm, 2), fB))
weq("eq40", fB, mul(mpow(Fm, -2), mul(mul(E, mpow(Fm, 2)), dagger(E))))
weq("eq41a", fB, diag(1, -e(1 / 6), e(1 / 3)))
weq("eq41b", fB, mul(mpow(Fm, 12), FFpp2))
lhs42 = mul(mul(mul(mul(mul(mul(Bt, E), mpow(Fm, -2)), E), mpow(Fm, 2)),
                mul(dagger(E), dagger(E))), Bt)
rhs42 = mul(mpow(Fm, 12), mul(fB, fB))
weq("eq42", lhs42, rhs42)
lhs43 = mul(mul(mul(mul(E, mpow(Fm, -2)), E), mpow(Fm, 2)),
            mul(dagger(E), dagger(E)))
rhs43 = mul(mpow(Fm, 12), fB)
weq("eq43", lhs43, rhs43)
u32 = {}
for n in N.values():
    for h in [I3, H3, mpow(H3, 2)]:
        u32[key(mul(n, h))] = True
report("eq32 thm3 coset decomposition",
       len(u32) == 81 and set_eq(u32, {k: True for k in S3F}))
u33 = {}
for f in Fscript.values():
    for h in [I3, E, mpow(E, 2)]:
        u33[key(mul(f, h))] = True
report("eq33 thm4 coset decomposition",
       len(u33) == 81 and set_eq(u33, {k: True for k in S3D}))
report("eq44-46 3SylF=<V,S3F>",
       set_eq(gen_by_sylows, closure([V2, X, A, B, H3])))
report("eq47 V cap S3F trivial", len([k for k in Vk if k in S3F]) == 1)
report("eq47 V normal in 3SylF", is_normal_in(Vk, gen_by_sylows))
report("eq48 |3SylF|=4*81", len(gen_by_sylows) == 324)
gC18 = mul(mpow(Fm, 2),
           mpow(mul(mul(mpow(E, 2), mul(Fm, E)), dagger(Fm)), 3))
report("gC18 diag", meq(gC18, diag(e(-7 / 18), e(1 / 9), e(5 / 18))))
gC6 = mul(mul(mul(mul(E, gC18), mpow(E, -2)), mpow(gC18, 8)),
          mul(mpow(E, -2), mpow(gC18, 3)))
report("gC6 diag", meq(gC6, diag(e(1 / 6), -1, e(1 / 3))))
ok49 = ok50 = True
for Wi in Wlist:
    for Dm in Fscript.values():
        wd = mul(Wi, Dm)
        lhs = mul(mul(wd, E), mul(wd, E))
        rhs = mul(wd, mul(mul(E, wd), E))
        if not meq(lhs, rhs):
            ok49 = False
        E2 = mpow(E, 2)
        lhs = mul(mul(wd, E2), mul(wd, E2))
        rhs = mul(wd, mul(mul(E2, wd), E2))
        if not meq(lhs, rhs):
            ok50 = False
report("eq49 (108 instances)", ok49)
report("eq50 (108 instances)", ok50)
ok51 = ok52 = True
for Wi in Wlist:
    for k in (1, 2):
        Ek = mpow(E, k)
        for Dm in Fscript.values():
            gh3 = mul(mul(Wi, mul(Dm, Ek)), Wi)
            lhs = mul(mul(gh3, gC18), dagger(gh3))
            mid = mul(mul(mul(mul(mul(Wi, Dm), Ek), Wi), gC18),
                      mul(mul(Wi, mpow(E, -k)), mul(dagger(Dm), Wi)))
            rhs = mul(mul(Ek, gC18), mpow(E, -k))
            if not meq(lhs, mid):
                ok51 = False
            if not meq(lhs, rhs):
                ok52 = False
report("eq51 (216 instances)", ok51)
report("eq52 (216 instances)", ok52)
Ek = mpow(E, 2)
Eki = mpow(E, -2)
weq("eq53", gC6, mul(mul(mul(Ek, gC18), Eki), mpow(gC18, 8)))
weq("eq54", mul(mul(Ek, gC6), Eki), mul(gC6, mpow(gC18, -3)))
weq("eq55", gC6, mul(mul(mul(Ek, gC6), Eki), mpow(gC18, 3)))
weq("eq56", gC6, mul(mul(mul(mul(E, gC18), Eki), mpow(gC18, 8)),
                     mul(Eki, mpow(gC18, 3))))
sol57 = []
for i in range(9):
    for j in range(3):
        if meq(mul(mul(H2, mul(mpow(A, i), mpow(B, j))), H2),
               mul(mpow(A, -i), mpow(B, -j))):
            sol57.append((i, j))
report("eq57 solutions {(0,0),(0,1),(0,2)}",
       sol57 == [(0, 0), (0, 1), (0, 2)])
weq("eq58", mul(mul(H2, A), dagger(H2)), mul(A, B))
weq("eq59", mul(mul(H2, B), dagger(H2)), mpow(B, 2))
jbar = {0: 0, 1: 2, 2: 1}
ok60 = all(meq(mul(mul(H2, mul(mpow(A, i), mpow(B, j))), H2),
               mul(mpow(A, i), mpow(B, (i + jbar[j]) % 3)))
           for i in range(9) for j in range(3))
report("eq60 (27 instances)", ok60)
report("eq61 <A> cap <B> trivial",
       len([kk for kk in Ag if kk in closure([B])]) == 1)
ok62 = all(meq(mul(mul(H2, mul(mpow(A, i), mpow(B, j))), H2),
               mul(mpow(A, i), mpow(B, jbar[j])))
           for i in (0, 3, 6) for j in range(3))
report("eq62 (9 instances)", ok62)

# ---------------------------------------------------------------------------
print("== S54 ==")
invs = [m for m in S54.values() if order(m) == 2]
report("S54 exactly 3 involutions", len(invs) == 3)
exp_invs = {key(H2), key(mul(B, H2)), key(mul(mpow(B, 2), H2))}
report("involutions are {H2,BH2,B2H2}", {key(m) for m in invs} == exp_invs)
lem15 = {(1, 2), (2, 1), (4, 2), (5, 1), (7, 2), (8, 1)}
got15 = set()
for i in range(9):
    for j in range(3):
        m = mul(mpow(A, i), mpow(B, j))
        if order(m) == 9 and meq(mul(mul(H2, m), dagger(H2)), m):
            got15.add((i, j))
report("lemma15 fixed set", got15 == lem15)
zs = center(S54)
report("order-9 central in S54 = lemma15 set",
       {k for k, m in zs.items() if order(m) == 9} ==
       {key(mul(mpow(A, i), mpow(B, j))) for (i, j) in lem15})
ab2 = mul(A, mpow(B, 2))
report("AB2 central in S54", centralizes(ab2, S54))
BH2 = closure([B, H2])
report("<B,H2> order 6", len(BH2) == 6)
prod54 = {key(mul(mpow(ab2, i), x)): True
          for i in range(9) for x in BH2.values()}
report("S54=<AB2>.<B,H2> bijective", len(prod54) == 54 and
       set_eq(prod54, {kk: True for kk in S54}))

# ---------------------------------------------------------------------------
print("== two-sylow structure ==")
H1grp = closure([H1])
v2h1 = mul(mul(V2, H1), dagger(V2))
report("V2 H1 V2^-1 not in <H1>", key(v2h1) not in H1grp)
twoSylF = closure([V2, X, H1])
report("|<V,H1>|=8", len(twoSylF) == 8)
val("spec.<V,H1>", spectrum(twoSylF))
report("<H1> not normal in 2-sylow", not is_normal_in(H1grp, twoSylF))

# ---------------------------------------------------------------------------
print("== maps ==")


def iso_scan(G, gens, images, full=True):
    """Extend gens->images via BFS words; check bijectivity + homomorphism."""
    gmap = {}
    for g, im in zip(gens, images):
        gmap[key(g)] = im
        gmap[key(dagger(g))] = dagger(im)
    elems = {key(I3): (I3, I3)}
    frontier = [(I3, I3)]
    gset = [(g, gmap[key(g)]) for g in gens] + \
           [(dagger(g), gmap[key(dagger(g))]) for g in gens]
    while frontier:
        nxt = []
        for x, fx in frontier:
            for g, fg in gset:
                y = mul(g, x)
                k = key(y)
                if k not in elems:
                    elems[k] = (y, mul(fg, fx))
                    nxt.append(elems[k])
        frontier = nxt
    if len(elems) != len(G):
        return False, "element count mismatch"
    imgs = {key(fx) for _, fx in elems.values()}
    if len(imgs) != len(G):
        return False, "images not distinct"
    items = list(elems.values())
    if not full:
        import random
        random.seed(7)
        items = random.sample(items, min(120, len(items)))
    lookup = {k: fx for k, (x, fx) in elems.items()}
    for x, fx in items:
        for y, fy in items:
            if not meq(lookup[key(mul(x, y))], mul(fx, fy)):
                return False, "multiplicativity fails"
    return True, ""


imA = mpow(Fm, 2)
imB = mul(mpow(Fm, 12), FFpp2)
imH1 = mul(Bt, E)
imH3 = E
ok6, d6 = iso_scan(Fr162, [A, B, H1, H3], [imA, imB, imH1, imH3], full=True)
report("thm6 map isomorphism (full scan)", ok6, d6)
report("thm6 images generate D9",
       set_eq(closure([imA, imB, imH1, imH3]), D9))
bad = iso_scan(Fr162, [A, B, H1, H3], [mpow(Fm, 4), imB, imH1, imH3],
               full=False)
report("thm6 corrupted map rejected", not bad[0])
ok8, d8 = iso_scan(Fr, [C18, C6, H1, H3], [gC18, gC6, imH1, mpow(E, 2)],
                   full=False)
report("thm8 map isomorphism (sampled scan)", ok8, d8)
report("Fr=<C18,C6,H1,H3>", set_eq(closure([C18, C6, H1, H3]), Fr))
report("D18=<gC18,gC6,BtE,E2>",
       set_eq(closure([gC18, gC6, imH1, mpow(E, 2)]), Dfull))

# ---------------------------------------------------------------------------
print("== conjugacy ==")
val("O*H3*O^T==E", meq(mul(mul(O, H3), Ot), E))
val("O^T*H3*O==E", meq(mul(mul(Ot, H3), O), E))
if meq(mul(mul(Ot, H3), O), E):
    def cP(g):
        return mul(mul(Ot, g), O)
    val("orientation", "P=O^T (pointwise map is O^T g O)")
else:
    def cP(g):
        return mul(mul(O, g), Ot)
    val("orientation", "P=O (pointwise map is O g O^T)")


def cP_set(elems):
    out = {}
    for m in elems.values():
        c = cP(m)
        out[key(c)] = c
    return out


report("P H3 P^-1 = E", meq(cP(H3), E))
report("P H1 P^-1 = BtE", meq(cP(H1), mul(Bt, E)))
report("P FUM3 P^-1 = W3", meq(cP(V2), W3))
report("P X P^-1 = W4", meq(cP(X), W4))
report("eq69 P A P^-1 in Fscript", key(cP(A)) in Fscript)
report("eq70 P AB P^-1 in Fscript", key(cP(mul(A, B))) in Fscript)
report("eq71 P N P^-1 = Fscript", set_eq(cP_set(N), Fscript))
report("eq72 P V P^-1 = VD", set_eq(cP_set(Vk), VD))
report("eq67/73 P S3F P^-1 = S3D", set_eq(cP_set(S3F), S3D))
u68 = {}
for f in Fscript.values():
    for c in [I3, E, mpow(E, 2)]:
        u68[key(mul(f, c))] = True
report("eq68 decomposition of image",
       set_eq(cP_set(S3F), {k: True for k in u68}))
S3copyF = closure([H1, H3])
S3copyD = closure([Bt, E])
report("P S3copy P^-1 = S3copyD", set_eq(cP_set(S3copyF), S3copyD))
report("(NxV) cap S3copyF trivial",
       len([kk for kk in NV if kk in S3copyF]) == 1)
report("(N18) cap S3copyD trivial",
       len([kk for kk in Ngrp if kk in S3copyD]) == 1)
# set-level equalities hold for both orientations
report("O Fr O^T = D18", set_eq(conj_set(O, Fr), Dfull))
report("O^T Fr O = D18", set_eq(conj_set(Ot, Fr), Dfull))
val("O Fr162 O^T == D9", set_eq(conj_set(O, Fr162), D9))
report("O^T Fr162 O = D9", set_eq(conj_set(Ot, Fr162), D9))
report("O N O^T = Fscript", set_eq(conj_set(O, N), Fscript))
report("O^2 in D18", key(mpow(O, 2)) in Dfull)
Mm = (-1, 0, 1, 0, 1, 0, 1, 0, 1)
Dd = diag(-s2, 1, s2)
mdd = mul(Mm, Dd)
val("M*diag(d)==O", meq(O, mdd))
val("M*diag(d)==O^T", meq(Ot, mdd))
report("eq74 M*diag(d) is O or O^T", meq(O, mdd) or meq(Ot, mdd))
okeig = True
for ci in range(3):
    colv = (Mm[ci], Mm[3 + ci], Mm[6 + ci])
    av = tuple(sum(A[3 * r + c] * colv[c] for c in range(3))
               for r in range(3))
    lam = None
    for r in range(3):
        if abs(colv[r]) > 1e-9:
            lam = av[r] / colv[r]
            break
    if max(abs(av[r] - lam * colv[r]) for r in range(3)) > 1e-8:
        okeig = False
report("columns of M are A-eigenvectors", okeig)
ok75 = True
Minv = (-0.5, 0, 0.5, 0, 1, 0, 0.5, 0, 0.5)
report("Minv correct", meq(mul(Mm, Minv), I3))
for (u1, u2, u3) in [(-s2, 1.0, s2), (0.3 + 0.1j, -0.7, 1.2j),
                     (1.1, 2.2 - 0.3j, -0.4)]:
    lhs = mul(mul(diag(1 / u1, 1 / u2, 1 / u3), Minv),
              mul(H3, mul(Mm, diag(u1, u2, u3))))
    rhs = (0, -u2 / (math.sqrt(2) * u1), 0,
           0, 0, math.sqrt(2) * u3 / u2,
           -u1 / u3, 0, 0)
    if not meq(lhs, rhs):
        ok75 = False
report("eq75 (3 parameter samples)", ok75)

# ---------------------------------------------------------------------------
print("== d-groups ==")
D_9_201 = closure([E, F(9, 1, 1), Gt(2, 0, 1)])
D_9_200 = closure([E, F(9, 1, 1), Gt(2, 0, 0)])
D_18_200 = closure([E, Fm, Gt(2, 0, 0)])
D_18_201 = closure([E, Fm, Gt(2, 0, 1)])
report("five D-groups order 648",
       all(len(g) == 648 for g in
           (Dfull, D_9_201, D_9_200, D_18_200, D_18_201)))
report("D18-211=D18-200", set_eq(Dfull, D_18_200))
report("D18-211=D18-201", set_eq(Dfull, D_18_201))
report("D18-211=D9-201", set_eq(Dfull, D_9_201))
report("D18-211=D9-200", set_eq(Dfull, D_9_200))
report("D9-211 proper in D18-211 index 4",
       subset(D9, Dfull) and len(Dfull) // len(D9) == 4)
report("W4 not in D9-211", key(W4) not in D9)
report("D9-211 matches param gens",
       set_eq(D9, closure([E, F(9, 1, 1), Gt(2, 1, 1)])))
C201 = closure([E, F(2, 0, 1)])
C210 = closure([E, F(2, 1, 0)])
C211 = closure([E, F(2, 1, 1)])
report("prop2 C(2,0,1)=C(2,1,0)", set_eq(C201, C210))
report("prop2 C(2,0,1)=C(2,1,1)", set_eq(C201, C211))
val("|C(2,0,1)|", len(C201))
report("prop2 klein inside", subset(VD, C201))
report("F(2,*) conjugate under E",
       meq(mul(mul(E, F(2, 0, 1)), dagger(E)), F(2, 1, 0)) or
       meq(mul(mul(E, F(2, 0, 1)), dagger(E)), F(2, 1, 1)))
C931 = closure([E, F(9, 3, 1)])
report("|C(9,3,1)|=243", len(C931) == 243)
C911 = closure([E, F(9, 1, 1)])
C1811 = closure([E, F(18, 1, 1)])
C18101 = closure([E, F(18, 10, 1)])
report("prop1 C(9,1,1) in C(18,1,1)", subset(C911, C1811))
report("prop1 C(9,1,1) in C(18,10,1)", subset(C911, C18101))
val("|C(9,1,1)|", len(C911))
val("|C(18,1,1)|", len(C1811))
val("|C(18,10,1)|", len(C18101))
C200 = closure([E, F(2, 0, 0)])
C421 = closure([E, F(4, 2, 1)])
C423 = closure([E, F(4, 2, 3)])
C311 = closure([E, F(3, 1, 1)])
C300 = closure([E, F(3, 0, 0)])
C543 = closure([E, F(5, 4, 3)])
l12 = [
    ("r1 C(2,0,1) in D(9,1,1;2,0,1)", C201, D_9_201),
    ("r1 C(4,2,1) in D(2,1,1;4,1,0)", C421,
     closure([E, F(2, 1, 1), Gt(4, 1, 0)])),
    ("r2 C(4,2,3) in D(2,1,1;4,3,0)", C423,
     closure([E, F(2, 1, 1), Gt(4, 3, 0)])),
    ("r3 C(2,0,0) in D(9,1,1;2,1,1)", C200, D9),
]
for lbl, c, d in l12:
    report(f"lemma12 {lbl}", subset(c, d), f"|C|={len(c)} |D|={len(d)}")
l13 = [
    ("r11 C(3,1,1) in D(9,1,1;3,1,1)", C311,
     closure([E, F(9, 1, 1), Gt(3, 1, 1)])),
    ("r12 C(3,0,0) in D(9,1,1;3,0,1)", C300,
     closure([E, F(9, 1, 1), Gt(3, 0, 1)])),
    ("r12 C(2,0,0) in D(9,1,1;2,0,1)", C200, D_9_201),
    ("r5 C(3,1,1) in D(2,1,1;3,1,0)", C311,
     closure([E, F(2, 1, 1), Gt(3, 1, 0)])),
    ("r10 C(5,4,3) in D(1,0,0;5,1,0)", C543,
     closure([E, F(1, 0, 0), Gt(5, 1, 0)])),
]
for lbl, c, d in l13:
    report(f"lemma13 {lbl}", subset(c, d), f"|C|={len(c)} |D|={len(d)}")
report("Gt^2 formula", all(
    meq(mpow(Gt(d, r, 1), 2), diag(e(2 * r / d), -e(-r / d), -e(-r / d)))
    for d, r in [(2, 1), (4, 1), (3, 1), (5, 2)]))
report("Gt^4 formula", all(
    meq(mpow(Gt(d, r, 1), 4),
        diag(e(4 * r / d), e(-2 * r / d), e(-2 * r / d)))
    for d, r in [(3, 1), (5, 1), (5, 2)]))

# ---------------------------------------------------------------------------
print("== triple graph ==")
moves = set()
for perm in permutations((1, 1, -2)):
    moves.add(perm)
    moves.add(tuple(-x for x in perm))
moves = sorted(moves)
val("move count", len(moves))
start = (0, 0, 0)
seen = {start}
frontier = [start]
while frontier:
    nxt = []
    for t in frontier:
        for mv in moves:
            u = tuple((a + b) % 18 for a, b in zip(t, mv))
            if u not in seen:
                seen.add(u)
                nxt.append(u)
    frontier = nxt
val("triple graph size mod 18", len(seen))
tg = {key(diag(e(t[0] / 18), e(t[1] / 18), e(t[2] / 18))): True
      for t in seen}
report("triple graph = <F,Fp,Fpp>", set_eq(tg, {k: True for k in Ngrp}))
report("contains (3,0,-3),(0,3,-3) order 6",
       (3, 0, 15) in seen and (0, 3, 15) in seen and
       order(diag(e(3 / 18), 1, e(-3 / 18))) == 6)
z18z6 = {}
for i in range(18):
    for j in range(6):
        m = diag(e(i / 18), e(j / 6), e(-(i / 18 + j / 6)))
        z18z6[key(m)] = m
report("N18 spectrum = Z18xZ6 spectrum", spectrum(Ngrp) == spectrum(z18z6))

# ---------------------------------------------------------------------------
print("== aut counts ==")


def aut_count(m, n):
    g = [(i, j) for i in range(m) for j in range(n)]

    def addp(p, q):
        return ((p[0] + q[0]) % m, (p[1] + q[1]) % n)

    def smul(k, p):
        return ((k * p[0]) % m, (k * p[1]) % n)

    def elt_order(p):
        o = 1
        q = p
        while q != (0, 0):
            q = addp(q, p)
            o += 1
        return o

    us = [p for p in g if m % elt_order(p) == 0]
    vs = [p for p in g if n % elt_order(p) == 0]
    count = 0
    for u in us:
        for v in vs:
            span = {addp(smul(i, u), smul(j, v))
                    for i in range(m) for j in range(n)}
            if len(span) == m * n:
                count += 1
    return count


val("aut(18,6)", aut_count(18, 6))
val("aut(2,2)", aut_count(2, 2))
val("aut(1,9)", aut_count(1, 9))

print("== summary ==")
if FAILURES:
    print(f"{len(FAILURES)} FAILURES:")
    for f in FAILURES:
        print("  " + f)
    sys.exit(1)
print("all checks passed")
