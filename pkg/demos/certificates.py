"""
Certificates of chromatic equivalence
=====================================

The path P4 and the star K_{1,3} have the same chromatic polynomial
q(q-1)^3. A certificate is a chain of rewrite steps, each one preserving
the polynomial, that turns one graph into the other.
"""

# %%
from graphpoly import path, star
from graphpoly.certificates import example_certificate, expression_value, search, verify

cert = example_certificate()
for i, expr in enumerate(cert.expressions):
    print(f"E{i}: {expr}")
    print("    value:", expression_value(expr, cert.context))
print(verify(cert))

# %%
# Breadth-first search finds the same two-step shape on its own.
found = search(path(4), star(3), "chromatic", max_depth=3)
print("found:", found.found, "after", found.nodes, "expressions")
for step in found.certificate.steps:
    print(" ", step.rule, step.locus, step.params)

# %%
# Changing any coefficient breaks it.
data = cert.to_json()
data["expressions"][1]["terms"][1]["coef"] = "1"
print(verify(type(cert).from_json(data)))
