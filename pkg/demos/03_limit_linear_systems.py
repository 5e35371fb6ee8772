"""
Limit linear systems and connecting numbers
===========================================

For each component there is one twist class whose limit system is
injective there and nonzero on every other component.
"""

from limitram import associated_extensions, connecting_matrix, limit_at_twist, load_example

model = load_example("case11")
Q, M = model.index("Q"), model.index("M")

# the untwisted limit only sees Q; on M two sections collapse
limit = limit_at_twist(model, (0, 0))
print("on M at (0,0):", [str(f) for f in limit.on(M)])

# twisting by -M recovers a full net of cubics on M
limit = limit_at_twist(model, (0, -1))
print("on M at (0,-1):", [str(f) for f in limit.on(M)])

exts = associated_extensions(model)
for ext in exts:
    print(model.components[ext.component].name, "twist", ext.twist,
          "multidegree", ext.limit.degrees)
print("connecting numbers:", connecting_matrix(exts))

conic = load_example("conic")
print("conic degeneration:", connecting_matrix(associated_extensions(conic)))
