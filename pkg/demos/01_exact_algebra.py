"""
Exact forms, jets and Wronskians
================================

Everything in limitram is exact: rationals, truncated power series in t,
and homogeneous forms whose coefficients are such series.
"""

from limitram.algebra import TJet, parse_form, proj_point, wronskian_affine

# forms over Q[[t]], parsed from text
G = parse_form("x*(x^2+y^2-z^2)+t*(y^3+y^2*z)", ("x", "y", "z"), jet_variable="t")
print("G =", G)

# jets truncate at a declared precision; products keep track of it
a = TJet({0: 1, 1: 2}, prec=4)
print("(1+2t)^2 =", a * a)

# a net of cubics on the line and its Wronskian divisor
net = [parse_form(f, ("u", "v")) for f in ["-(u^3+u^2*v)", "u*(u^2-v^2)", "v*(u^2-v^2)"]]
W = wronskian_affine(net)
print("Wronskian degree:", W.degree, "(expected (r+1)e - r(r+1) = 3*3 - 6 = 3)")
print("weight at (-1:1):", W.weight_at(proj_point(-1, 1)))
