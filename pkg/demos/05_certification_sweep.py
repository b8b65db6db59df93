# A certification sweep: every grid point is evaluated, compared with the
# recurrence, and checked against its bound. The report is a CSV whose rows
# come out in grid order regardless of the number of worker threads.
from jacobi_asymptotics import GridSpec, Parameters, convergence_slope, sweep

grid = GridSpec(region="outer", gamma=(0.5, 1.0, 2.0), n=(10, 50, 200),
                pairs=((0, 0), (-0.25, -0.5)), p=(1, 2, 3))
report = sweep(grid, threads=4)
s = report.summary
print(f"{s['n_points']} points, pass rate {s['pass_rate']}, worst ratio {s['worst_ratio']:.2e}")
for p, stats in s["per_p"].items():
    print(f"  p={p}: worst |remainder|/bound = {stats['worst_ratio']:.2e}")

print("\nfirst rows of the CSV:")
print("\n".join(report.csv_text().splitlines()[:3]))

# The bounds are far from tight (the ratios above are small), but the
# remainder really does decay like n^-p. A log-log fit shows it.
for region, gamma in (("outer", 1.0), ("osc", 0.7)):
    for p in (1, 2, 3):
        slope = convergence_slope(gamma, Parameters(-0.25, -0.5), p, region,
                                  [100, 140, 200, 280, 400, 500])
        print(f"{region:5s} gamma={gamma} p={p}: slope {slope:+.3f}")
