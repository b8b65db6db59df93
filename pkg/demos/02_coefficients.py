# The expansion coefficients A_j and how they are built.
#
# For the Chebyshev case alpha = beta = -1/2 the coefficients do not depend
# on gamma at all: they are the coefficients of Gamma(n+1/2)/(sqrt(n) Gamma(n))
# in powers of 1/n.
from jacobi_asymptotics import Parameters, RegionPoint, coefficients_at

cheb = Parameters(-0.5, -0.5)
for gamma in (0.3, 0.8, 1.2):
    A = coefficients_at(RegionPoint.outer(gamma), cheb, 3).A
    print(f"gamma={gamma}:", [f"{a.real:+.10f}" for a in A])
print("expected:      1, -1/8, 1/128, 5/1024 =",
      [1, -1 / 8, 1 / 128, 5 / 1024])

# A general pair. On the real axis A_j is real; on the unit circle it is complex.
p = Parameters(-0.25, -0.5)
outer = coefficients_at(RegionPoint.outer(0.5), p, 4)
osc = coefficients_at(RegionPoint.osc(0.5), p, 4)
for j in range(5):
    print(f"A_{j}:  outer {outer.A[j].real:+.6e}   osc {osc.A[j]:.6e}")

# The table keeps every intermediate: amplitude data a_k, phase data b_m and
# the polynomials Q_j whose Gamma moments give A_j.
print("a_k :", [f"{v.real:.4f}" for v in outer.a[:4]])
print("b_m :", [f"{v.real:.4f}" for v in outer.b[:3]], "(m = 3, 4, 5)")
print("Q_2 :", [f"{complex(c).real:.4f}" for c in outer.q[2].coefficients])
print("precision mode:", "extended" if outer.precise else "binary64",
      f"(largest term / result = {outer.cancellation:.1f})")

# Past order 6 the engine switches to 106-bit arithmetic on its own.
print("p=8 uses extended precision:", coefficients_at(RegionPoint.outer(0.5), p, 8).precise)
