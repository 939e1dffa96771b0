"""Residuals of the frequency-domain identities on the default grid."""
from alpert.fourier import DEFAULT_GRID, fourier_report, qmf_residual

for n in range(7):
    r = fourier_report(n)
    qmf = max(qmf_residual(n, a) for a in DEFAULT_GRID)
    print(f"n={n}: two-scale {r['two_scale']:.1e}  addition {r['addition']:.1e}  "
          f"derivative {r['derivative']:.1e}  qmf {qmf:.1e}")

print("grid spans", DEFAULT_GRID[0], "to", DEFAULT_GRID[-1], "in", len(DEFAULT_GRID), "points")
