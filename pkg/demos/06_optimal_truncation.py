# More terms do not always help: the bound constants grow quickly with p, so
# at a fixed degree there is a best order. optimal_truncation searches for it.
from jacobi_asymptotics import Parameters, RegionPoint, evaluate, optimal_truncation

params = Parameters(0, -0.5)
for gamma in (0.25, 1.0, 2.0):
    print(f"gamma = {gamma}")
    for n in (20, 200, 2000, 20000):
        p_best, bound = optimal_truncation(n, gamma, params, "outer", 10)
        print(f"   n={n:6d}  best p={p_best}  normalised bound={bound:.3e}")

# The bounds one order at a time, to see the turnover. Orders above 6 run the
# coefficient engine in extended precision automatically. Neighbouring orders
# can tie closely: the sharp bound at order p shares its dominant term with
# the coarse bound at order p+1.
point = RegionPoint.outer(1.0)
print("\nn=200, gamma=1: bound by order")
for p in range(1, 11):
    print(f"   p={p}  {evaluate(point, 200, params, p).bundle.certified_bound:.3e}")
