#!/usr/bin/env python3
"""Regenerates include/holo/closed_forms.hpp.

Derives the Levi-Civita connection, Riemann, and Ricci tensors symbolically
from the closed-form Fisher-Rao metrics and emits them as templated C++.
Run from the repository root:

    python3 tools/gen_closed_forms.py

The build does not depend on this script; the generated header is checked in.
Conventions (see README.md): curvature sign R^a_bcd = d_c Gamma^a_db
- d_d Gamma^a_cb + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb; bivariate
source chart order (mu1, mu2, s1, s2, s12) with s1, s2 variances; the
independence manifold uses its natural chart (th1..th4).
"""

import sys
import sympy as sp

mu1, mu2, s1, s2, s12 = sp.symbols("mu1 mu2 s1 s2 s12", real=True)
t1, t2, t3, t4, t5 = sp.symbols("t1 t2 t3 t4 t5", real=True)


def fisher_bivariate():
    x = [mu1, mu2, s1, s2, s12]
    Sig = sp.Matrix([[s1, s12], [s12, s2]])
    SigI = Sig.inv()
    g = sp.zeros(5, 5)
    g[0:2, 0:2] = SigI
    cov = [s1, s2, s12]
    for i in range(3):
        for j in range(3):
            dSi = sp.Matrix([[sp.diff(Sig[r, c], cov[i]) for c in range(2)] for r in range(2)])
            dSj = sp.Matrix([[sp.diff(Sig[r, c], cov[j]) for c in range(2)] for r in range(2)])
            g[2 + i, 2 + j] = sp.Rational(1, 2) * sp.trace(SigI * dSi * SigI * dSj)
    return [sp.simplify(sp.together(e)) for e in g], x, g


def fisher_independence():
    th = [t1, t2, t3, t4]
    phi = -t1**2 / (4 * t3) - t2**2 / (4 * t4) + sp.log(1 / (t3 * t4)) / 2 + sp.log(sp.pi)
    g = sp.Matrix([[sp.simplify(sp.diff(phi, a, b)) for b in th] for a in th])
    return [sp.simplify(e) for e in g], th, g


def levi_civita(g, x):
    n = len(x)
    gi = g.inv()
    Gam = [[[sp.simplify(sp.together(sum(
        gi[c, e] * (sp.diff(g[b, e], x[a]) + sp.diff(g[a, e], x[b]) - sp.diff(g[a, b], x[e])) / 2
        for e in range(n)))) for b in range(n)] for a in range(n)] for c in range(n)]
    return Gam  # Gam[c][a][b] = Gamma^c_ab


def riemann_lowered(g, Gam, x):
    n = len(x)
    Rl = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    up = sum(
                        (sp.diff(Gam[e][d][b], x[c]) - sp.diff(Gam[e][c][b], x[d])
                         + sum(Gam[e][c][f] * Gam[f][d][b] - Gam[e][d][f] * Gam[f][c][b]
                               for f in range(n))) * g[a, e]
                        for e in range(n))
                    v = sp.simplify(sp.together(up))
                    if v != 0:
                        Rl[(a, b, c, d)] = v
    return Rl


def ricci(Gam, x):
    n = len(x)
    Ric = sp.zeros(n, n)
    for a in range(n):
        for b in range(n):
            Ric[a, b] = sp.simplify(sp.together(sum(
                sp.diff(Gam[c][b][a], x[c]) - sp.diff(Gam[c][c][a], x[b])
                + sum(Gam[c][c][e] * Gam[e][b][a] - Gam[c][b][e] * Gam[e][c][a] for e in range(n))
                for c in range(n))))
    return Ric


class CxxPrinter:
    """Renders the rational/log expressions that occur here as templated C++."""

    def __call__(self, e):
        return self.p(sp.together(e))

    def p(self, e):
        if e.is_Add:
            parts = [self.p(a) for a in e.args]
            out = parts[0]
            for s in parts[1:]:
                out += " - " + s[1:] if s.startswith("-") else " + " + s
            return out
        if e.is_Mul:
            num, den = [], []
            coeff = sp.Integer(1)
            for a in e.args:
                if a.is_Rational:
                    coeff *= a
                elif a.is_Pow and a.exp.is_Integer and a.exp < 0:
                    den.append(self.paren(sp.Pow(a.base, -a.exp)))
                else:
                    num.append(self.paren(a))
            sign = "-" if coeff < 0 else ""
            coeff = abs(coeff)
            if coeff.p != 1 or not num:
                num.insert(0, self.lit(coeff.p))
            if coeff.q != 1:
                den.insert(0, self.lit(coeff.q))
            out = "*".join(num)
            if den:
                ds = "*".join(den)
                if len(den) > 1 or not ds.replace(".", "").replace("_", "").isalnum():
                    ds = "(" + ds + ")"
                out += "/" + ds
            return sign + out
        if e.is_Pow:
            if e.exp.is_Integer and e.exp > 0:
                b = self.paren(e.base)
                return "*".join([b] * int(e.exp))
            if e.exp.is_Integer and e.exp < 0:
                ds = self.p(sp.Pow(e.base, -e.exp))
                if not ds.replace(".", "").replace("_", "").isalnum():
                    ds = "(" + ds + ")"
                return self.lit(1) + "/" + ds
            if e.exp == sp.Rational(1, 2):
                return "sqrt(" + self.p(e.base) + ")"
            if e.exp == sp.Rational(-1, 2):
                return self.lit(1) + "/sqrt(" + self.p(e.base) + ")"
            raise ValueError(f"pow {e}")
        if e.is_Rational:
            if e.q == 1:
                return ("-" if e < 0 else "") + self.lit(abs(e.p))
            return ("-" if e < 0 else "") + self.lit(abs(e.p)) + "/" + self.lit(e.q)
        if e.is_Symbol:
            return str(e)
        if e.func is sp.log:
            return "log(" + self.p(e.args[0]) + ")"
        if e is sp.pi:
            return "pi_v"
        raise ValueError(f"unsupported node {e} ({e.func})")

    def paren(self, e):
        s = self.p(e)
        return "(" + s + ")" if (e.is_Add or s.startswith("-") or "/" in s) else s

    def lit(self, n):
        return f"{n}.0"


PR = CxxPrinter()


def emit_cse(entries, assign, indent="  "):
    """entries: list of (lhs_string, expr). Returns C++ lines with CSE temps."""
    reps, reds = sp.cse([e for _, e in entries], optimizations="basic",
                        symbols=sp.numbered_symbols("w"))
    lines = []
    for sym, val in reps:
        lines.append(f"{indent}const T {sym} = {PR(val)};")
    for (lhs, _), val in zip(entries, reds):
        lines.append(f"{indent}{assign(lhs, PR(val))}")
    return lines


def fn_matrix(name, n, M, xdecl):
    entries = [(f"g[{a}][{b}]", M[a * n + b]) for a in range(n) for b in range(n)
               if M[a * n + b] != 0]
    body = [f"template <class T>", f"inline void {name}(const T* x, T g[{n}][{n}]) {{"]
    body += xdecl
    body += [f"  for (int a = 0; a < {n}; ++a)",
             f"    for (int b = 0; b < {n}; ++b) g[a][b] = T(0);"]
    body += emit_cse(entries, lambda l, r: f"{l} = {r};")
    body += ["}", ""]
    return body


def fn_gamma(name, n, Gam, xdecl):
    entries = []
    for c in range(n):
        for a in range(n):
            for b in range(a, n):
                if Gam[c][a][b] != 0:
                    entries.append(((c, a, b), Gam[c][a][b]))
    body = [f"template <class T>", f"inline void {name}(const T* x, T G[{n}][{n}][{n}]) {{"]
    body += xdecl
    body += [f"  for (int c = 0; c < {n}; ++c)",
             f"    for (int a = 0; a < {n}; ++a)",
             f"      for (int b = 0; b < {n}; ++b) G[c][a][b] = T(0);"]

    def assign(idx, rhs):
        c, a, b = idx
        s = f"G[{c}][{a}][{b}] = {rhs};"
        if a != b:
            s += f" G[{c}][{b}][{a}] = G[{c}][{a}][{b}];"
        return s

    body += emit_cse(entries, assign)
    body += ["}", ""]
    return body


def fn_riemann(name, n, Rl, xdecl):
    entries = []
    for (a, b, c, d), v in sorted(Rl.items()):
        if a < b and c < d:  # store one representative per antisymmetric pair
            entries.append(((a, b, c, d), v))
    body = [f"template <class T>", f"inline void {name}(const T* x, T R[{n}][{n}][{n}][{n}]) {{"]
    body += xdecl
    body += [f"  for (int a = 0; a < {n}; ++a)",
             f"    for (int b = 0; b < {n}; ++b)",
             f"      for (int c = 0; c < {n}; ++c)",
             f"        for (int d = 0; d < {n}; ++d) R[a][b][c][d] = T(0);"]

    def assign(idx, rhs):
        a, b, c, d = idx
        return (f"R[{a}][{b}][{c}][{d}] = {rhs}; "
                f"R[{b}][{a}][{c}][{d}] = -R[{a}][{b}][{c}][{d}]; "
                f"R[{a}][{b}][{d}][{c}] = -R[{a}][{b}][{c}][{d}]; "
                f"R[{b}][{a}][{d}][{c}] = R[{a}][{b}][{c}][{d}];")

    body += emit_cse(entries, assign)
    body += ["}", ""]
    return body


def fn_scalar(name, n, expr, xdecl):
    body = [f"template <class T>", f"inline T {name}(const T* x) {{"]
    body += xdecl
    body += emit_cse([("r", expr)], lambda l, r: f"return {r};")
    body += ["}", ""]
    return body


def decl(names):
    return [f"  const T {nm} = x[{i}];" for i, nm in enumerate(names)]


def main():
    out = []
    out.append("// Closed-form tensor component tables for the Fisher-Rao geometries.")
    out.append("// Generated by tools/gen_closed_forms.py; do not edit by hand.")
    out.append("#pragma once")
    out.append("")
    out.append("#include <cmath>")
    out.append("")
    out.append("namespace holo::closed {")
    out.append("")
    out.append("using std::log;")
    out.append("using std::sqrt;")
    out.append("inline constexpr double pi_v = 3.14159265358979323846264338327950288;")
    out.append("")

    print("deriving bivariate tensors...", file=sys.stderr)
    gG_list, xG, gG = fisher_bivariate()
    GamG = levi_civita(gG, xG)
    RG = riemann_lowered(gG, GamG, xG)
    RicG = ricci(GamG, xG)
    dG = decl(["mu1", "mu2", "s1", "s2", "s12"])
    # mu1, mu2 do not occur in any bivariate table; drop unused locals
    dG_cov = dG[2:]
    out += fn_matrix("metric_bivariate", 5, list(gG), dG_cov)
    out += fn_gamma("christoffel_bivariate", 5, GamG, dG_cov)
    out += fn_riemann("riemann_bivariate", 5, RG, dG_cov)
    out += fn_matrix("ricci_bivariate", 5, list(RicG), dG_cov)

    print("deriving independence tensors...", file=sys.stderr)
    gI_list, xI, gI = fisher_independence()
    GamI = levi_civita(gI, xI)
    RI = riemann_lowered(gI, GamI, xI)
    RicI = ricci(GamI, xI)
    dI = decl(["t1", "t2", "t3", "t4"])
    out += fn_matrix("metric_independence", 4, list(gI), dI)
    out += fn_gamma("christoffel_independence", 4, GamI, dI)
    out += fn_riemann("riemann_independence", 4, RI, dI)
    out += fn_matrix("ricci_independence", 4, list(RicI), dI)

    # potentials in natural coordinates
    D5 = 1 / (4 * t3 * t5 - t4**2)
    phiG = sp.log(2 * sp.pi * sp.sqrt(D5)) - D5 * (t2**2 * t3 - t1 * t2 * t4 + t1**2 * t5)
    out += fn_scalar("potential_bivariate", 5, phiG,
                     decl(["t1", "t2", "t3", "t4", "t5"]))
    phiI = -t1**2 / (4 * t3) - t2**2 / (4 * t4) + sp.log(1 / (t3 * t4)) / 2 + sp.log(sp.pi)
    out += fn_scalar("potential_independence", 4, phiI, dI)

    out.append("}  // namespace holo::closed")
    out.append("")
    with open("include/holo/closed_forms.hpp", "w") as f:
        f.write("\n".join(out))
    print("wrote include/holo/closed_forms.hpp", file=sys.stderr)


if __name__ == "__main__":
    main()
