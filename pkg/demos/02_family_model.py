"""
Describing a degeneration
=========================

A family G = q_1 ... q_t + t h is given by its components, their
parametrizations, the nodes between them and a linear system.
"""

import json

from limitram import example, family_from_json, multidegree, validate_family

data = example("case11", 1, 1)
print(json.dumps(data, indent=2)[:400], "...")

model = family_from_json(data)
report = validate_family(model)
print("valid:", report.valid)
for w in report.warnings:
    print("warning:", w)

# intersection matrix of the dual graph
print("intersection matrix:", model.intersection_matrix)

# twisting by a divisor supported on the special fibre moves degree between components
for n in [(0, 0), (0, -1), (1, 1)]:
    print("twist", n, "-> multidegree", multidegree(model, n))
