# The certified expansions need -1 < beta <= alpha <= 0 and x >= 0. Other
# inputs are reduced to that box: a reflection x -> -x swaps the exponents,
# and each unit shift writes P_n at a raised exponent as a combination of P_n
# and P_(n+1) at the lowered one.
from fractions import Fraction

from jacobi_asymptotics import Parameters, canonicalize, evaluate_general
from jacobi_asymptotics.oracle import jacobi_recurrence_rational

params = Parameters(1.5, 0.5)
x = -1.8
canon = canonicalize(params, x)
print("reduced exponents:", canon.params, " region:", canon.region)
for step in canon.steps:
    print("   step:", step.kind.value)

res = evaluate_general(80, params, x, 3)
exact = jacobi_recurrence_rational(80, Fraction(3, 2), Fraction(1, 2), Fraction(x))
print("leaves (degree, multiplier):", [(leaf.n, f"{c:+.4g}") for c, leaf in res.leaves])
print("value      ", res.value.decimal())
print("exact      ", f"{float(exact):.17g}")
print("bound      ", res.absolute_bound.decimal())
print("flags      ", res.flags or "none")

# Reduction can leave beta > alpha (here alpha = 0.5 lowers to -0.5 while beta
# stays 0). The expansion still converges but its constants are not proved
# there, so the result is flagged rather than silently trusted.
odd = evaluate_general(80, Parameters(0.5, 0.0), 2.5, 2)
print("\nalpha=0.5, beta=0 flags:", odd.flags)
