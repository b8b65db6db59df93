# A first large-degree value: the Legendre polynomial P_400 at x = cosh(1).
# The three-term recurrence gives the reference value; the expansion gives an
# approximation together with a bound that is guaranteed, not estimated.
import math

from jacobi_asymptotics import Parameters, RegionPoint, evaluate, oracle_value_at

legendre = Parameters(0, 0)
point = RegionPoint.outer(1.0)      # x = cosh(1) ~ 1.543

exact = oracle_value_at(point, 400, legendre)
print("recurrence    P_400 =", exact.decimal())   # ~1.6e172, still fits a double

for p in (1, 2, 3):
    res = evaluate(point, 400, legendre, p)
    err = abs(float((res.value - exact) / exact))
    # absolute_bound covers |P_n - value|; compare it with the true error
    print(f"p={p}  value={res.value.decimal()}  rel.err={err:.2e}  "
          f"certified rel.bound={float(res.absolute_bound / abs(exact)):.2e}")

# At n = 100000 the polynomial overflows binary64, but values are carried as
# mantissa * 2^exponent, so nothing breaks.
big = evaluate(point, 100_000, legendre, 2)
print("P_100000(cosh 1) ~", big.value.decimal(), f"(log10 = {big.value.log10abs():.3f})")
print("exact log10 from the recurrence:",
      f"{oracle_value_at(point, 100_000, legendre).log10abs():.3f}")
print("leading growth alone, n*gamma*log10(e) =", f"{100_000 / math.log(10):.1f}")
