"""Decide Johnson-kernel equivalence for a few pairs of curves."""

from johnsonkit.library import handle_push
from johnsonkit.orbits import (SEPARATING, CurvePair, closed_model, nonsep_equivalent,
                               sep_equivalent, standard_curve)

genus = 3
M = closed_model(genus)
x5 = M.gen("x5")

for k in (1, 2):
    gamma = standard_curve(genus, k) * x5
    v = nonsep_equivalent(CurvePair(genus, gamma, x5))
    print(f"w_{k} x5 vs x5: {v.verdict}, class {v.cls}")

print("x1 vs x4 x1 x4^-1:", nonsep_equivalent(CurvePair(genus, M.gen("x1"), M.gen("x1").conj(M.gen("x4")))).verdict)

gamma = standard_curve(genus, 1)
v = sep_equivalent(CurvePair(genus, gamma, gamma.conj(M.gen("x3")), SEPARATING))
print("w_1 vs its conjugate by x3:", v.verdict, "witness", v.witness)

push = handle_push(M, 0, 1)
v = sep_equivalent(CurvePair(genus, gamma, push(gamma), SEPARATING))
print("w_1 vs its image under a handle push:", v.verdict, "class", v.cls)
