"""
The limit ramification divisor
==============================

Component Wronskians plus node weights (r - l_ij)(r+1), checked against
the global degree (r+1)kd + r(r+1)(g-1).
"""

from limitram import case12_check, limit_divisor, load_example


def show(name, *params):
    model = load_example(name, *params)
    rep = limit_divisor(model)
    print(f"{name}{params or ''}: total degree {rep.total_degree}")
    for e in rep.entries:
        where = e.plane if e.plane is not None else e.form
        print(f"   {e.kind:9} {str(where):22} weight {e.weight}")
    print("   checks:", rep.checks)
    return model, rep


show("case11", 1, 1)   # 3 p1 + 3 p2 + div((y+z)^3) on M
show("case11", 1, 2)   # the cubic H does not factor over Q
show("conic")          # lines carry no ramification; the node is not in Z
model, rep = show("weierstrass4")   # 24 = 9 + 6 + 9

# nodes outside Z come with a vanishing-sequence certificate
for cert in limit_divisor(load_example("conic")).certificates:
    print("conic node:", cert.eps_i, cert.eps_j, "l =", cert.l_ij, "outside Z:", cert.outside)

for cond in case12_check(load_example("case11"), limit_divisor(load_example("case11"))):
    print(f"{cond.name}: {cond.holds}")
