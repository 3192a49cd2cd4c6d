#!/usr/bin/env python3
"""Independent floating-point oracle for the level-4 recoupling data.

Computes quantum integers, theta / tetrahedral coefficients and unitary
6j symbols directly from the closed forms, entirely separate from the C++
implementation.  The printed table is frozen into tests/test_fusion.cpp;
any exact value produced by the library must match these decimals to 1e-9.

Conventions: positive quantum integers [n] = sin(n*pi/6)/sin(pi/6); the
tetrahedral closed form keeps its intrinsic alternating interior sum.
"""
import math
from fractions import Fraction
from itertools import product

R = 6  # level 4: labels 0..4, cutoff a+b+c <= 8


def qint(n):
    return math.sin(n * math.pi / R) / math.sin(math.pi / R)


def qfact(n):
    out = 1.0
    for j in range(1, n + 1):
        out *= qint(j)
    return out


def admissible(a, b, c):
    return (a + b + c) % 2 == 0 and abs(a - b) <= c <= a + b and a + b + c <= 2 * (R - 2)


def delta(a):
    return qint(a + 1)


def theta(a, b, c):
    m = (a + b - c) // 2
    n = (b + c - a) // 2
    p = (c + a - b) // 2
    return qfact(m + n + p + 1) * qfact(m) * qfact(n) * qfact(p) / (
        qfact(m + n) * qfact(n + p) * qfact(p + m))


def tet(A, B, E, C, D, F):
    a = [(A + D + E) // 2, (B + C + E) // 2, (A + B + F) // 2, (C + D + F) // 2]
    b = [(B + D + E + F) // 2, (A + C + E + F) // 2, (A + B + C + D) // 2]
    pref = 1.0
    for bj, ai in product(b, a):
        pref *= qfact(bj - ai)
    for x in (A, B, E, C, D, F):
        pref /= qfact(x)
    s_sum = 0.0
    for s in range(max(a), min(b) + 1):
        t = (-1) ** s * qfact(s + 1)
        for ai in a:
            t /= qfact(s - ai)
        for bj in b:
            t /= qfact(bj - s)
        s_sum += t
    return pref * s_sum


def sixj_u(G, B, E, C, D, F):
    num = tet(G, B, E, C, D, F) * math.sqrt(delta(E) * delta(F))
    den = math.sqrt(theta(G, D, E) * theta(C, D, F) * theta(C, B, E) * theta(G, B, F))
    return num / den


def vertex_ok(G, B, E, C, D, F):
    return all(admissible(*t) for t in [(G, D, E), (C, B, E), (G, B, F), (C, D, F)])


def exact_form(x):
    """Match x against q or q*sqrt(3) with small rational q, else '?'."""
    for scale, tag in [(1.0, ""), (math.sqrt(3), "*sqrt3")]:
        f = Fraction(x / scale).limit_denominator(720)
        if abs(float(f) * scale - x) < 1e-9:
            return f"{f}{tag}"
    return "?"


def main():
    print("# quantum integers [0..6]")
    print("qint:", [round(qint(n), 12) for n in range(7)])
    print("qdim:", [round(delta(a), 12) for a in range(5)])

    print("\n# theta table (a<=b<=c admissible)")
    for a, b, c in product(range(5), repeat=3):
        if a <= b <= c and admissible(a, b, c):
            print(f"theta({a},{b},{c}) = {theta(a, b, c):+.12f}  [{exact_form(theta(a, b, c))}]")

    print("\n# tet values over all admissible level-4 bracket configurations")
    vals = {}
    for G, B, E, C, D, F in product(range(5), repeat=6):
        if vertex_ok(G, B, E, C, D, F):
            vals[(G, B, E, C, D, F)] = tet(G, B, E, C, D, F)
    print("admissible configurations:", len(vals))
    print("tet(2,2,2;2,2,2) =", f"{vals[(2, 2, 2, 2, 2, 2)]:+.12f}")
    print("tet(2,2,0;2,2,2) =", f"{vals[(2, 2, 0, 2, 2, 2)]:+.12f}",
          f"[{exact_form(vals[(2, 2, 0, 2, 2, 2)])}]")
    print("tet(2,2,2;4,2,2) =", f"{vals[(2, 2, 2, 4, 2, 2)]:+.12f}",
          f"[{exact_form(vals[(2, 2, 2, 4, 2, 2)])}]")
    print("tet(0,4,0;4,0,4) =", f"{vals[(0, 4, 0, 4, 0, 4)]:+.12f}",
          f"[{exact_form(vals[(0, 4, 0, 4, 0, 4)])}]")

    # degeneration: one label 0 collapses to a theta, up to the sign
    # (-1)^((B+C+E)/2) carried by the alternating interior sum
    bad = 0
    for B, C, E in product(range(5), repeat=3):
        if admissible(B, C, E):
            sign = (-1) ** ((B + C + E) // 2)
            if abs(tet(0, B, E, C, E, B) - sign * theta(B, C, E)) > 1e-9:
                bad += 1
    print("degeneration-with-sign failures:", bad)

    # full tetrahedral symmetry: the value is invariant under relabelings
    # that preserve the four vertex triples {GDE, CBE, GBF, CDF}
    sym_bad = 0
    for (G, B, E, C, D, F), v in vals.items():
        images = [
            (B, G, E, D, C, F),   # swap the two columns
            (G, D, F, C, B, E),   # exchange the roles of the E and F edges
            (C, D, E, G, B, F),   # swap the two vertices adjacent to E
        ]
        for img in images:
            if vertex_ok(*img) and abs(vals[img] - v) > 1e-9:
                sym_bad += 1
                print("  symmetry FAIL", (G, B, E, C, D, F), "->", img)
    print("tet symmetry failures:", sym_bad)

    print("\n# unitary 6j: the (2,2,2,2) recoupling matrix over e,f in {0,2,4}")
    for e in (0, 2, 4):
        print("  ", [f"{sixj_u(2, 2, e, 2, 2, f):+.12f}" for f in (0, 2, 4)])

    print("\n# unitarity defect over every admissible external configuration")
    worst = 0.0
    for a, b, c, d in product(range(5), repeat=4):
        es = [e for e in range(5) if admissible(a, d, e) and admissible(c, b, e)]
        fs = [f for f in range(5) if admissible(a, b, f) and admissible(c, d, f)]
        if not es or len(es) != len(fs):
            continue
        M = [[sixj_u(a, b, e, c, d, f) for f in fs] for e in es]
        n = len(es)
        for i, j in product(range(n), repeat=2):
            dot = sum(M[i][k] * M[j][k] for k in range(n))
            worst = max(worst, abs(dot - (i == j)))
    print("worst:", worst)

    print("\n# the three pipeline couples (k,i): bracket1 {k 4 0; 4 k i},")
    print("# bracket2 {2 2 2; 4 k i}, loop theta_u(k,4,i)/delta_i, total")
    for k in (0, 2, 4):
        i = 4 - k
        b1 = sixj_u(k, 4, 0, 4, k, i)
        b2 = sixj_u(2, 2, 2, 4, k, i)
        loop = math.sqrt(delta(k) * delta(4) * delta(i)) / delta(i)
        print(f"k={k}: b1={b1:+.12f} b2={b2:+.12f} loop={loop:+.12f} "
              f"c={b1 * b2 * b2 * loop * loop:+.12f}")


if __name__ == "__main__":
    main()
