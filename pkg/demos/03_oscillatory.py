# Inside (-1, 1) the polynomial oscillates, and the expansion carries a phase
# theta = N gamma + kappa. Here we follow P_n^(0,-1/2)(cos 0.7) over a range of n.
import math

from jacobi_asymptotics import Convention, Parameters, RegionPoint, evaluate, oracle_value_at

params = Parameters(0.0, -0.5)
point = RegionPoint.osc(0.7)

print("   n      exact           p=3 value       |err|/bound")
for n in (20, 50, 120, 300, 700):
    res = evaluate(point, n, params, 3)
    exact = float(oracle_value_at(point, n, params))
    err = abs(exact - float(res.value))
    print(f"{n:5d}  {exact:+.8e}  {float(res.value):+.8e}  {err / float(res.absolute_bound):.2e}")

# The sum can be written two ways that differ by conjugating A_j. Only the
# default form leaves a remainder that shrinks like n^-p; the other stalls
# at order 1/n, which is easy to see by scaling the remainder by n^3.
print("\nremainder * n^3 under each convention (p = 3):")
for n in (100, 200, 400, 800):
    row = []
    for conv in (Convention.CONJUGATE, Convention.THM):
        res = evaluate(point, n, params, 3, conv)
        zeta = float(oracle_value_at(point, n, params) / res.prefactor) - res.normalized_sum
        row.append(f"{conv.value}: {zeta * n**3:+10.4f}")
    print(f"n={n:4d}  " + "   ".join(row))

# The Chebyshev polynomial is a pure cosine, which makes a tidy check.
res = evaluate(RegionPoint.osc(0.5), 100, Parameters(-0.5, -0.5), 1)
print("\nChebyshev-type value:", float(res.value), " cos(50)/sqrt(100 pi):",
      math.cos(50) / math.sqrt(100 * math.pi))
