#!/usr/bin/env python3
"""Authoring script for data/catalog.json.

Expressions are written the way they are displayed and decomposed with sympy
into (integer polynomial, exponent) factors.  Run from the repository root:

    python3 tools/gen_catalog.py > data/catalog.json
"""

import json
import sys

import sympy as sp

p, x = sp.symbols("p x")
VARS = {"p": p, "x": x}
S5, S3, S2 = sp.sqrt(5), sp.sqrt(3), sp.sqrt(2)


def _poly(base, var):
    poly = sp.Poly(sp.expand(base), var)
    coeffs = list(reversed(poly.all_coeffs()))
    if not all(sp.Rational(c).is_Integer for c in coeffs):
        raise ValueError(f"non-integer coefficients in {base}")
    return [int(c) for c in coeffs]


def _factors(expr, var):
    """Split a product of powers of polynomials into (coeffs, exponent) pairs."""
    out = []
    sign = 1
    for arg in sp.Mul.make_args(expr):
        base, e = arg.as_base_exp()
        if base.is_Number:
            val = sp.Rational(base) ** e if e.is_Integer else None
            if val is None:
                if base < 0:
                    raise ValueError(f"negative radicand {arg}")
                out.append(([int(base)], sp.Rational(e)))
                continue
            if val < 0:
                sign = -sign
                val = -val
            num, den = sp.fraction(val)
            if num != 1:
                out.append(([int(num)], sp.Integer(1)))
            if den != 1:
                out.append(([int(den)], sp.Integer(-1)))
            continue
        e = sp.Rational(e)
        den = sp.ilcm(*[sp.Rational(c).q for c in sp.Poly(sp.expand(base), var).all_coeffs()])
        if den != 1:
            out.append(([int(den)], -e))
            base = sp.expand(base * den)
        coeffs = _poly(base, var)
        if coeffs[0] < 0:
            if not e.is_Integer:
                raise ValueError(f"negative constant term under fractional power {arg}")
            coeffs = [-c for c in coeffs]
            if int(e) % 2:
                sign = -sign
        out.append((coeffs, e))
    return sign, out


def _exp(e):
    e = sp.Rational(e)
    return f"{e.p}/{e.q}"


def entry(eid, label, level, base, pref, arg, var="p"):
    v = VARS[var]
    psign, pf = _factors(sp.sympify(pref, locals=VARS), v)
    if psign != 1:
        raise ValueError(f"{eid}: negative prefactor")
    asign, af = _factors(sp.sympify(arg, locals=VARS), v)
    for coeffs, e in af:
        if not sp.Rational(e).is_Integer:
            raise ValueError(f"{eid}: fractional argument exponent")
    return {
        "id": eid,
        "label": label,
        "level": level,
        "base": base,
        "prefactor": [{"poly": c, "exp": _exp(e)} for c, e in pf],
        "argument": {
            "sign": asign,
            "factors": [c for c, _ in af],
            "powers": [int(e) for _, e in af],
        },
    }


def group(gid, title, var, order, head, rows, chains=None, note=None):
    entries = []
    for i, r in enumerate(rows):
        # a sixth field is the corrected argument; the displayed one is kept too
        e = entry(f"{gid}.{i + 1:02d}", r[0], r[1], r[2], r[3], r[5] if len(r) > 5 else r[4], var)
        if len(r) > 5:
            e["printed_argument"] = entry(e["id"], r[0], r[1], r[2], r[3], r[4], var)["argument"]
        entries.append(e)
    g = {"id": gid, "title": title, "variable": var, "default_order": order,
         "expected_head": [str(h) for h in head], "entries": entries}
    if chains is not None:
        g["chains"] = [[f"{gid}.{i:02d}" for i in c] for c in chains]
    if note:
        g["note"] = note
    return g


# ---------------------------------------------------------------- Theorem 1
A1 = "(1+4*p-8*p**2)"
B1 = "(1+228*p-408*p**2-128*p**3-192*p**4+768*p**5-512*p**6)"
A2 = "(1-2*p+4*p**2)"
B2 = "(1-6*p+240*p**2-920*p**3+960*p**4-96*p**5+64*p**6)"
B3 = "(1-12*p+72*p**2-128*p**3-192*p**4+768*p**5-512*p**6)"
A4 = "(1-2*p-2*p**2)"
B4 = "(1-6*p+6*p**2+16*p**3+204*p**4-456*p**5-8*p**6)"
B6 = "(1-6*p+40*p**3-96*p**5+64*p**6)"
B12 = "(1-6*p+6*p**2+16*p**3-36*p**4+24*p**5-8*p**6)"
A7 = "(1-8*p+4*p**2)"
B7 = "(1-240*p+1932*p**2-5888*p**3+7728*p**4-3840*p**5+64*p**6)"
B8 = "(1+12*p**2-128*p**3+48*p**4+64*p**6)"


def lvl1(label, a, b, num):
    return (label, "Level 1", "F1", f"{a}**(-1/2)*{b}**(-1/2)", f"{num}/({a}**3*{b}**3)")


def lvl2(label, d, num):
    return (label, "Level 2", "F2", f"1/{d}", f"{num}/{d}**4")


def lvl3(label, d, num):
    return (label, "Level 3", "F3", f"{d}**(-2)", f"{num}/{d}**6")


T1 = [
    lvl1("3.1", A1, B1, "p*(1-p)**3*(1-4*p)**12*(1-2*p)*(1+2*p)**3"),
    lvl1("3.2", A2, B2, "p**2*(1-p)**6*(1-4*p)**6*(1-2*p)**2*(1+2*p)**6"),
    lvl1("3.3", A1, B3, "p**3*(1-p)*(1-4*p)**4*(1-2*p)**3*(1+2*p)"),
    lvl1("3.4", A4, B4, "p**4*(1-p)**12*(1-4*p)**3*(1-2*p)*(1+2*p)**3"),
    lvl1("3.5", A2, B6, "p**6*(1-p)**2*(1-4*p)**2*(1-2*p)**6*(1+2*p)**2"),
    lvl1("3.6", A4, B12, "p**12*(1-p)**4*(1-4*p)*(1-2*p)**3*(1+2*p)"),
    lvl1("3.7", A7, B7, "-p*(1-p)**3*(1-4*p)**3*(1-2*p)**4*(1+2*p)**12"),
    lvl1("3.8", A7, B8, "-p**3*(1-p)*(1-4*p)*(1-2*p)**12*(1+2*p)**4"),
    lvl2("3.9", "(1+20*p-48*p**2+32*p**3-32*p**4)",
         "p*(1-p)**3*(1-4*p)**6*(1-2*p)*(1+2*p)**3"),
    lvl2("3.10", "(1-4*p+24*p**2-40*p**3-8*p**4)",
         "p**2*(1-p)**6*(1-4*p)**3*(1-2*p)*(1+2*p)**3"),
    lvl2("3.11", "(1-4*p+32*p**3-32*p**4)", "p**3*(1-p)*(1-4*p)**2*(1-2*p)**3*(1+2*p)"),
    lvl2("3.12", "(1-4*p+8*p**3-8*p**4)", "p**6*(1-p)**2*(1-4*p)*(1-2*p)**3*(1+2*p)"),
    lvl2("3.13", "(1-28*p+96*p**2-112*p**3+16*p**4)",
         "-p*(1-p)**3*(1-4*p)**3*(1-2*p)**2*(1+2*p)**6"),
    lvl2("3.14", "(1-4*p-16*p**3+16*p**4)", "-p**3*(1-p)*(1-4*p)*(1-2*p)**6*(1+2*p)**2"),
    lvl3("3.15", A1, "p*(1-p)*(1-4*p)**4*(1-4*p**2)"),
    lvl3("3.16", A2, "p**2*(1-p)**2*(1-4*p)**2*(1-4*p**2)**2"),
    lvl3("3.17", A4, "p**4*(1-p)**4*(1-4*p)*(1-4*p**2)"),
    lvl3("3.18", A7, "-p*(1-p)*(1-4*p)*(1-4*p**2)**4"),
    ("3.19", "Level 4", "F4", "1/((1-2*p)*(1+2*p)**3)",
     "p*(1-p)**3*(1-4*p)**3/((1-2*p)**2*(1+2*p)**6)"),
    ("3.20", "Level 4", "F4", "1/((1-2*p)**3*(1+2*p))",
     "p**3*(1-p)*(1-4*p)/((1-2*p)**6*(1+2*p)**2)"),
    ("3.21", "Level 4", "F4", "(1-4*p)**(-3)",
     "-p*(1-2*p)*(1+2*p)**3*(1-p)**3/(1-4*p)**6"),
    ("3.22", "Level 4", "F4", "(1-4*p)**(-1)",
     "-p**3*(1-2*p)**3*(1+2*p)*(1-p)/(1-4*p)**2"),
    ("3.23", "Level 4", "F4", "(1-2*p)**(-1/2)*(1+2*p)**(-3/2)*(1-4*p)**(-3/2)",
     "-p**2*(1-p)**6/((1-2*p)*(1+2*p)**3*(1-4*p)**3)"),
    ("3.24", "Level 4", "F4", "(1-2*p)**(-3/2)*(1+2*p)**(-1/2)*(1-4*p)**(-1/2)",
     "-p**6*(1-p)**2/((1-2*p)**3*(1+2*p)*(1-4*p))"),
]

N1 = "p*(1-p)*(1-4*p)**2*(1-2*p)*(1+2*p)"
N2 = "p**2*(1-p)**2*(1-4*p)*(1-2*p)*(1+2*p)"
N3 = "-p*(1-p)*(1-4*p)*(1-2*p)**2*(1+2*p)**2"


def lvl6F(label, base, d, num):
    return (label, "Level 6, functions F", base, f"1/({d})", f"{num}/({d})**2")


T1 += [
    lvl6F("3.25", "F6a", "1-16*p+24*p**2+32*p**3-32*p**4", N1),
    lvl6F("3.26", "F6a", "1-4*p-12*p**2+32*p**3-8*p**4", N2),
    lvl6F("3.27", "F6a", "1+8*p-48*p**2+32*p**3+16*p**4", N3),
    lvl6F("3.28", "F6b", f"{A2}*{A1}", N1),
    lvl6F("3.29", "F6b", f"{A4}*{A2}", N2),
    lvl6F("3.30", "F6b", f"{A2}*{A7}", N3),
    lvl6F("3.31", "F6c", "1+8*p**2-32*p**3+32*p**4", N1),
    lvl6F("3.32", "F6c", "1-4*p+4*p**2+8*p**4", N2),
    # The paper reuses the label of (3.27) for this display.
    lvl6F("3.33", "F6c", "1-8*p+32*p**2-32*p**3+16*p**4", N3),
]


def lvl6G(label, base, d, num):
    return (label, "Level 6, functions G", base, f"1/({d})", f"{num}/({d})")


T1 += [
    lvl6G("3.34", "G6a", "(1+2*p)*(1-p)", "p*(1-4*p)**2*(1-2*p)"),
    lvl6G("3.35", "G6a", "(1-2*p)*(1-p)**2", "p**2*(1+2*p)*(1-4*p)"),
    lvl6G("3.36", "G6a", "(1-p)*(1-4*p)*(1-2*p)**2", "-p*(1+2*p)**2"),
    lvl6G("3.37", "G6b", "(1-4*p)**2", "p*(1+2*p)*(1-2*p)*(1-p)"),
    lvl6G("3.38", "G6b", "(1-2*p)*(1+2*p)*(1-4*p)", "p**2*(1-p)**2"),
    lvl6G("3.39", "G6b", "(1-2*p)**2*(1+2*p)**2", "-p*(1-p)*(1-4*p)"),
    lvl6G("3.40", "G6c", "(1-p)*(1+2*p)*(1-4*p)**2", "p*(1-2*p)"),
    lvl6G("3.41", "G6c", "(1+2*p)*(1-p)**2*(1-4*p)", "p**2*(1-2*p)"),
    lvl6G("3.42", "G6c", "(1-p)*(1-4*p)*(1+2*p)**2", "-p*(1-2*p)**2"),
]

# ---------------------------------------------------------------- Theorem 2
T2 = [
    ("4.9", "Level 2", "f2", "(1+20*p-48*p**2+32*p**3-32*p**4)**(-1/2)",
     "p*(1-p)**3*(1-2*p)*(1+2*p)**3/(1+20*p-48*p**2+32*p**3-32*p**4)**2"),
    ("4.10", "Level 2", "f2", "(1-4*p+24*p**2-40*p**3-8*p**4)**(-1/2)",
     "p**2*(1-p)**6/(1-4*p+24*p**2-40*p**3-8*p**4)**2"),
    ("4.11", "Level 2", "f2", "(1-4*p+32*p**3-32*p**4)**(-1/2)",
     "p**3*(1-p)*(1-2*p)**3*(1+2*p)/(1-4*p+32*p**3-32*p**4)**2"),
    ("4.12", "Level 2", "f2", "(1-4*p+8*p**3-8*p**4)**(-1/2)",
     "64*p**6*(1-p)**2/(1-4*p+8*p**3-8*p**4)**2",
     "p**6*(1-p)**2/(1-4*p+8*p**3-8*p**4)**2"),
    ("4.13", "Level 2", "f2", "(1-28*p+96*p**2-112*p**3+16*p**4)**(-1/2)",
     "-p*(1-p)**3*(1-4*p)**3/(1-28*p+96*p**2-112*p**3+16*p**4)**2"),
    ("4.14", "Level 2", "f2", "(1-4*p-16*p**3+16*p**4)**(-1/2)",
     "-p**3*(1-p)*(1-4*p)/(1-4*p-16*p**3+16*p**4)**2"),
    ("4.15", "Level 3", "f3", f"1/{A1}", f"p*(1-2*p)/{A1}**3"),
    ("4.16", "Level 3", "f3", f"1/{A2}", f"p**2*(1-2*p)**2/{A2}**3"),
    ("4.17", "Level 3", "f3", f"1/{A4}", f"p**4*(1-2*p)/{A4}**3"),
    ("4.18", "Level 3", "f3", f"1/{A7}", f"-p*(1-2*p)**4/{A7}**3"),
    ("4.19", "Level 4", "f4", "(1-2*p)**(-1/2)*(1+2*p)**(-3/2)",
     "p*(1-p)**3/((1-2*p)*(1+2*p)**3)"),
    ("4.20", "Level 4", "f4", "(1-2*p)**(-3/2)*(1+2*p)**(-1/2)",
     "p**3*(1-p)/((1-2*p)**3*(1+2*p))"),
    ("4.21", "Level 4", "f4", "(1-4*p)**(-3/2)", "-p*(1-p)**3/(1-4*p)**3"),
    ("4.22", "Level 4", "f4", "(1-4*p)**(-1/2)", "-p**3*(1-p)/(1-4*p)"),
    ("4.25", "Level 6", "f6a", "(1-4*p)**(-2)", "p*(1-2*p)/(1-4*p)**2"),
    ("4.26", "Level 6", "f6a", "1/((1-4*p)*(1+2*p))", "p**2/((1-4*p)*(1+2*p))"),
    ("4.27", "Level 6", "f6a", "(1+2*p)**(-2)", "-p/(1+2*p)**2"),
    ("4.28", "Level 6", "f6b", "1/((1-p)*(1+2*p))", "p*(1-2*p)/((1-p)*(1+2*p))"),
    ("4.29", "Level 6", "f6b", "(1-p)**(-2)", "p**2/(1-p)**2"),
    ("4.30", "Level 6", "f6b", "1/((1-p)*(1-4*p))", "-p/((1-p)*(1-4*p))"),
    ("4.31", "Level 6", "f6c", "1", "p*(1-2*p)"),
    ("4.32", "Level 6", "f6c", "1/(1-2*p)", "p**2/(1-2*p)"),
    ("4.33", "Level 6", "f6c", "(1-2*p)**(-2)", "-p/(1-2*p)**2"),
]

# ---------------------------------------------------------------- Theorem 3
T3 = [
    ("5.1", "Level 1", "F1", "(1+236*p+1440*p**2+1920*p**3+3840*p**4+256*p**5+256*p**6)**(-1/2)",
     "p*(1-4*p)**10*(1+p)**5/(1+236*p+1440*p**2+1920*p**3+3840*p**4+256*p**5+256*p**6)**3"),
    ("5.2", "Level 1", "F1", "(1-4*p+240*p**2-480*p**3+1440*p**4-944*p**5+16*p**6)**(-1/2)",
     "p**2*(1-4*p)**5*(1+p)**10/(1-4*p+240*p**2-480*p**3+1440*p**4-944*p**5+16*p**6)**3"),
    ("5.3", "Level 1", "F1", "(1-4*p+256*p**5+256*p**6)**(-1/2)",
     "p**5*(1-4*p)**2*(1+p)/(1-4*p+256*p**5+256*p**6)**3"),
    ("5.4", "Level 1", "F1", "(1-4*p+16*p**5+16*p**6)**(-1/2)",
     "p**10*(1-4*p)*(1+p)**2/(1-4*p+16*p**5+16*p**6)**3"),
    ("5.5", "Level 2", "F2", "(1+4*p**2)**(-1/2)/(1+22*p-4*p**2)",
     "p*(1+p)**5*(1-4*p)**5/((1+4*p**2)**2*(1+22*p-4*p**2)**4)"),
    ("5.6", "Level 2", "F2", "(1+4*p**2)**(-1/2)/(1-2*p-4*p**2)",
     "p**5*(1+p)*(1-4*p)/((1+4*p**2)**2*(1-2*p-4*p**2)**4)"),
    ("5.7", "Level 4", "F4", "(1-4*p)**(-5/2)", "-p*(1+p)**5/(1-4*p)**5"),
    ("5.8", "Level 4", "F4", "(1-4*p)**(-1/2)", "-p**5*(1+p)/(1-4*p)"),
    ("5.9", "Level 5, functions F", "F5", "(1+4*p**2)**(-1/2)/(1+4*p+8*p**2)",
     "p*(1-4*p)**2*(1+p)/((1+4*p**2)*(1+4*p+8*p**2)**2)"),
    ("5.10", "Level 5, functions F", "F5", "(1+4*p**2)**(-1/2)/(1-2*p+2*p**2)",
     "p**2*(1-4*p)*(1+p)**2/((1+4*p**2)*(1-2*p+2*p**2)**2)"),
    ("5.11", "Level 5, functions G", "G5", "1/((1+p)*(1-4*p)**2)", "p/((1+p)*(1-4*p)**2)"),
    ("5.12", "Level 5, functions G", "G5", "1/((1+p)**2*(1-4*p))", "p**2/((1+p)**2*(1-4*p))"),
    ("5.13", "Level 10", "H", "(1+4*p**2)**(-3/2)", "p*(1+p)*(1-4*p)/(1+4*p**2)**2"),
]

# ---------------------------------------------------------------- Section 8
XX = "(4*x*(1-x))"  # X = 4x(1-x) pre-substituted
EX81 = [
    ("8.1a", "Level 4", "F4", "1", f"{XX}/64"),
    ("8.1b", "Level 4", "F4", "1/(1-x)", "-4*x/(64*(1-x)**2)"),
    ("8.1c", "Level 4", "F4", "(1-x)**(-1/2)", "-x**2/(256*(1-x))"),
    ("8.1d", "Level 2", "F2", "1/(1+x)", "16*x*(1-x)**2/(256*(1+x)**4)"),
    ("8.1e", "Level 2", "F2", "1/(1-2*x)", "-16*x*(1-x)/(256*(1-2*x)**4)"),
    ("8.1f", "Level 1", "F1", f"2*(4-{XX})**(-1/2)", f"27*{XX}**2/(1728*(4-{XX})**3)"),
    ("8.1g", "Level 1", "F1", f"(1-4*{XX})**(-1/2)", f"-27*{XX}/(1728*(1-4*{XX})**3)"),
]
EX82 = [
    ("8.2a", "Level 3", "F3", "1", "4*x*(1-x)/108"),
    ("8.2b", "Level 1", "F1", "(1+8*x)**(-1/2)", "64*x*(1-x)**3/(1728*(1+8*x)**3)"),
    ("8.2c", "Level 1", "F1", "3*(9-8*x)**(-1/2)", "64*x**3*(1-x)/(1728*(9-8*x)**3)"),
]
EX83 = [
    ("8.3a", "Level 3", "f3", "(1+2*x)**(1/2)", "x**2*(1+x)**2/(4*(1+x+x**2)**3)"),
    ("8.3b", "Level 4", "f4", "(1+x+x**2)", "x**3*(2+x)/(16*(1+2*x))"),
    ("8.3c", "Level 3", "f3", "(2+2*x-x**2)/2", "x*(1+x)**4/(2*(1+4*x+x**2)**3)"),
    ("8.3d", "Level 3", "f3", "(1+4*x+x**2)", "x**4*(1+x)/(2*(2+2*x-x**2)**3)"),
]
EX84 = [
    ("8.4a", "Level 6", "G6b", "1", "x"),
    ("8.4b", "Level 3", "F3", "1/(1+16*x)", "x/(1+16*x)**3"),
    ("8.4c", "Level 3", "F3", "1/(1+4*x)", "x**2/(1+4*x)**3"),
    ("8.4d", "Level 6", "G6c", "1", "x"),
    ("8.4e", "Level 2", "F2", "1/(1+27*x)", "x/(1+27*x)**4"),
    ("8.4f", "Level 2", "F2", "1/(1+3*x)", "x**3/(1+3*x)**4"),
]
EX85 = [
    ("8.5a", "Level 6", "G6a", "1/(1+x)", "x*(1-8*x)/(1+x)"),
    ("8.5b", "Level 6", "G6b", "1/(1-8*x)", "x*(1+x)/(1-8*x)"),
    ("8.5c", "Level 6", "G6a", "1/(1-x)", "x*(1-9*x)/(1-x)"),
    ("8.5d", "Level 6", "G6c", "1/(1-9*x)", "x*(1-x)/(1-9*x)"),
    ("8.5e", "Level 6", "G6b", "1/(1+8*x)", "x*(1+9*x)/(1+8*x)"),
    ("8.5f", "Level 6", "G6c", "1/(1+9*x)", "x*(1+8*x)/(1+9*x)"),
]
EX86 = [
    ("8.6a", "Level 6", "f6a", "1", "x"),
    ("8.6b", "Level 6", "f6b", "1/(1+9*x)", "x/(1+9*x)"),
    ("8.6c", "Level 6", "f6c", "1/(1+8*x)", "x/(1+8*x)"),
    ("8.6d", "Level 6", "f6b", "1", "x"),
    ("8.6e", "Level 6", "f6a", "1/(1-9*x)", "x/(1-9*x)"),
    ("8.6f", "Level 6", "f6c", "1/(1-x)", "x/(1-x)"),
    ("8.6g", "Level 6", "f6c", "1", "x"),
    ("8.6h", "Level 6", "f6a", "1/(1-8*x)", "x/(1-8*x)"),
    ("8.6i", "Level 6", "f6b", "1/(1+x)", "x/(1+x)"),
]
EX87 = [
    ("8.7a", "Level 6", "f6b", "1", "x"),
    ("8.7b", "Level 2", "f2", "(1+18*x-27*x**2)**(-1/2)", "x/(1+18*x-27*x**2)**2"),
    ("8.7c", "Level 2", "f2", "(1-6*x-3*x**2)**(-1/2)", "x**3/(1-6*x-3*x**2)**2"),
    ("8.7d", "Level 6", "f6c", "1", "x"),
    ("8.7e", "Level 3", "f3", "1/(1+4*x)", "x/(1+4*x)**3"),
    ("8.7f", "Level 3", "f3", "1/(1-2*x)", "x**2/(1-2*x)**3"),
]
# Introduction: the cubic/quartic/sextic examples, the level-6 pair and the
# two-function level-4 transformation, each as its own chain.
EX1 = [
    ("1.3a", "Level 4", "F4", "1", "x/64"),
    ("1.3b", "Level 1", "F1", "2*(4-x)**(-1/2)", "27*x**2/(1728*(4-x)**3)"),
    ("1.4a", "Level 2", "F2", "1/(1+27*x)", "x/(1+27*x)**4"),
    ("1.4b", "Level 2", "F2", "1/(1+3*x)", "x**3/(1+3*x)**4"),
    ("1.5a", "Level 3", "F3", "1", "4*x*(1-x)/108"),
    ("1.5b", "Level 1", "F1", "3*(9-8*x)**(-1/2)", "64*x**3*(1-x)/(1728*(9-8*x)**3)"),
    ("1.6a", "Level 6", "f6b", "1", "x"),
    ("1.6b", "Level 6", "f6c", "1/(1-x)", "x/(1-x)"),
    ("1.6c", "Level 6", "f6c", "1", "x"),
    ("1.6d", "Level 6", "f6b", "1/(1+x)", "x/(1+x)"),
    ("1.7a", "Level 4", "F4", "(1-4*x)**(-5/2)", "-x*(1+x)**5/(1-4*x)**5"),
    ("1.7b", "Level 4", "F4", "(1-4*x)**(-1/2)", "-x**5*(1+x)/(1-4*x)"),
]

groups = [
    group("T1", "forty-two equal functions", "p", 60, [1, 4, 16], T1),
    group("T2", "twenty-three equal functions", "p", 120, [1, 2], T2),
    group("T3", "thirteen equal functions", "p", 80, [1, 2, 6], T3),
    group("EX8.1", "seven expressions in x with X = 4x(1-x)", "x", 40, [1], EX81),
    group("EX8.2", "cubic and sextic level-3/level-1 pair", "x", 40, [1], EX82),
    group("EX8.3", "two-sided 2F1 identities", "x", 40, [1], EX83,
          chains=[[1, 2], [3, 4]]),
    group("EX8.4", "G6b and G6c as 3F2 functions", "x", 40, [1], EX84,
          chains=[[1, 2, 3], [4, 5, 6]]),
    group("EX8.5", "level-6 G-function pairs", "x", 40, [1], EX85,
          chains=[[1, 2], [3, 4], [5, 6]]),
    group("EX8.6", "level-6 f-function chains", "x", 40, [1], EX86,
          chains=[[1, 2, 3], [4, 5, 6], [7, 8, 9]]),
    group("EX8.7", "level-6 f-functions as 2F1 functions", "x", 40, [1], EX87,
          chains=[[1, 2, 3], [4, 5, 6]]),
    group("EX1", "introductory transformations", "x", 40, [1], EX1,
          chains=[[1, 2], [3, 4], [5, 6], [7, 8], [9, 10], [11, 12]]),
]


# ---------------------------------------------------------------- Section 9
def qf(expr, d1, d2):
    """Coordinates of expr in Q(sqrt d1, sqrt d2) as 'num/den' strings."""
    expr = sp.radsimp(sp.sympify(expr))
    expr = sp.expand(expr)
    r1, r2 = sp.sqrt(d1), sp.sqrt(d2) if d2 != 1 else sp.Integer(0)
    r12 = sp.sqrt(d1 * d2) if d2 != 1 else sp.Integer(0)
    c = [sp.Integer(0)] * 4
    for term in sp.Add.make_args(expr):
        coeff, rest = term.as_coeff_Mul()
        if rest == 1:
            c[0] += coeff
        elif rest == r1:
            c[1] += coeff
        elif d2 != 1 and rest == r2:
            c[2] += coeff
        elif d2 != 1 and rest == r12:
            c[3] += coeff
        else:
            raise ValueError(f"{term} not in Q(sqrt{d1}, sqrt{d2})")
    assert sp.simplify(c[0] + c[1] * r1 + c[2] * r2 + c[3] * r12 - expr) == 0
    return {"d1": d1, "d2": d2, "coords": [f"{sp.Rational(v).p}/{sp.Rational(v).q}" for v in c]}


pi_series = [
    {"id": "EQ1.1", "label": "1.1", "base": "F4", "point": qf(sp.Rational(1, 4096), 2, 3),
     "lambda": qf(sp.Rational(5, 42), 2, 3), "rhs": qf(sp.Rational(8, 21), 2, 3),
     "digits": 50, "boundary": False},
    {"id": "EQ9.1", "label": "9.1", "base": "F1", "point": qf(sp.Rational(1, 8000), 5, 1),
     "lambda": qf(sp.Rational(3, 28), 5, 1), "rhs": qf(5 * S5 / 28, 5, 1),
     "digits": 50, "boundary": False},
    {"id": "EQ9.2", "label": "9.2", "base": "F2", "point": qf(sp.Rational(1, 28**4), 3, 1),
     "lambda": qf(sp.Rational(3, 40), 3, 1), "rhs": qf(49 * S3 / 360, 3, 1),
     "digits": 50, "boundary": False},
    {"id": "EQ9.3", "label": "9.3", "base": "F4", "point": qf(sp.Rational(-1, 64), 2, 3),
     "lambda": qf(sp.Rational(1, 4), 2, 3), "rhs": qf(sp.Rational(1, 2), 2, 3),
     "digits": 20, "boundary": True},
    {"id": "EQ9.5", "label": "9.5", "base": "F4", "point": qf((S5 - 1)**8 / 2**20, 5, 1),
     "lambda": qf(31 / (270 + 48 * S5), 5, 1), "rhs": qf(16 / (15 + 21 * S5), 5, 1),
     "digits": 40, "boundary": False},
    {"id": "EQ9.6", "label": "9.6", "base": "F3", "point": qf(sp.Rational(1, 15**3), 3, 1),
     "lambda": qf(sp.Rational(4, 33), 3, 1), "rhs": qf(5 * S3 / 22, 3, 1),
     "digits": 50, "boundary": False},
]


def u_poly(coeffs_in_u):
    """Clear denominators of sum c_k u^k with u = 2p + 1/(2p); ascending in p."""
    deg = len(coeffs_in_u) - 1
    expr = sum(c * ((4 * p**2 + 1) ** k) * (2 * p) ** (deg - k)
               for k, c in enumerate(coeffs_in_u))
    return _poly(expr, p)


P91 = (1 + 3 * S2 - 3 * S3) / 4
P93 = (8 - 4 * S3 + 3 * S5 - 2 * sp.sqrt(15)) / 2
equivalences = [
    {"id": "THM9.1", "point": {"kind": "field", "value": qf(P91, 2, 3)},
     "pairs": [{"a": "T1.02", "b": "T1.11", "lambda": "3/28"},
               {"a": "T1.11", "b": "T1.21", "lambda": "3/40"}],
     "metadata": [[1, 2, "e^{-2 pi sqrt 2}"], [2, 9, "e^{-3 pi sqrt 2}"],
                  [4, 2, "-e^{-pi sqrt 2}"]],
     "claims": {"x": "1/8000", "y": "1/614656", "r_squared": "405/392",
                "dydx_squared": f"{2 * 5**10}/{3 * 7**12}",
                "drdx_squared": qf(sp.Rational(4500, 343)**2 * (10410 - 4200 * sp.sqrt(6)), 2, 3),
                "second_pair_y": "-1/64"},
     "pi_links": ["EQ9.1", "EQ9.2", "EQ9.3"]},
    {"id": "THM9.3", "point": {"kind": "field", "value": qf(P93, 3, 5)},
     "pairs": [{"a": "T1.20", "b": "T1.16", "lambda": "unused"}],
     "metadata": [[4, 15, "e^{-pi sqrt 15}"], [3, 5, "e^{-2 pi sqrt(5/3)}"]],
     "claims": {"arg:T1.20": qf((S5 - 1)**8 / 2**20, 3, 5), "arg:T1.16": "1/3375"},
     "pi_links": ["EQ9.5", "EQ9.6"]},
    {"id": "THM9.4", "point": {"kind": "root", "poly": u_poly([-496, 480, -120, 1]),
                               "interval": ["43/10000", "44/10000"], "decimal": "0.00431456"},
     "pairs": [{"a": "T1.02", "b": "T1.08", "lambda": "unused"},
               {"a": "T1.02", "b": "T1.18", "lambda": "unused"},
               {"a": "T1.02", "b": "T1.19", "lambda": "unused"}],
     "metadata": [[1, 3, "e^{-2 pi sqrt 3}"], [1, 27, "-e^{-3 pi sqrt 3}"],
                  [3, 9, "-e^{-pi sqrt 3}"], [4, 3, "e^{-pi sqrt 3}"]]},
    {"id": "THM9.4b", "point": {"kind": "field", "value": qf(1 - S3 / 2, 3, 1)},
     "pairs": [{"a": "T1.17", "b": "T1.20", "lambda": "unused"}],
     "metadata": [[3, 4, "e^{-4 pi / sqrt 3}"], [4, 3, "e^{-pi sqrt 3}"]]},
    {"id": "THM9.5", "point": {"kind": "nested", "base": qf((7 + 3 * S3) / 4, 3, 1),
                               "coef": "-1/4", "radicand": qf(72 + 42 * S3, 3, 1),
                               "decimal": "0.0412759"},
     "pairs": [{"a": "T1.04", "b": "T1.10", "lambda": "unused"},
               {"a": "T1.04", "b": "T1.14", "lambda": "unused"},
               {"a": "T1.04", "b": "T1.23", "lambda": "unused"}],
     "metadata": [[1, 4, "e^{-4 pi}"], [2, 2, "e^{-2 pi}"], [2, 9, "-e^{-3 pi}"],
                  [4, 4, "-e^{-2 pi}"]]},
    {"id": "THM9.6", "point": {"kind": "root", "poly": u_poly([31984, -38416, 15360, -2044, 1]),
                               "interval": ["2/10000", "3/10000"], "decimal": "0.000245523"},
     "pairs": [{"a": "T1.02", "b": "T1.07", "lambda": "unused"},
               {"a": "T1.02", "b": "T1.13", "lambda": "unused"},
               {"a": "T1.02", "b": "T1.19", "lambda": "unused"}],
     "metadata": [[1, 7, "e^{-2 pi sqrt 7}"], [1, 7, "-e^{-pi sqrt 7}"],
                  [2, 7, "-e^{-pi sqrt 7}"], [4, 7, "e^{-pi sqrt 7}"]]},
    {"id": "THM9.7", "point": {"kind": "field", "value": qf((1 + S3 - sp.sqrt(6)) / 4, 2, 3)},
     "pairs": [{"a": "T1.11", "b": "T1.16", "lambda": "unused"}],
     "metadata": [[2, 3, "e^{-2 pi sqrt(3/2)}"], [3, 2, "e^{-2 pi sqrt(2/3)}"]]},
]

catalog = {"format": 1, "groups": groups, "pi_series": pi_series,
           "equivalences": equivalences}
json.dump(catalog, sys.stdout, indent=1)
sys.stdout.write("\n")
