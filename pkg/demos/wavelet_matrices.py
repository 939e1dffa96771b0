"""Solve for the wavelet filters and look at their structure."""
import mpmath

from alpert import build_coeff_matrices
from alpert.waveletsolve import build_wavelet_matrices, verify_wavelet_orthogonality, wavelet_moments

n = 3
C = build_coeff_matrices(n)
D = build_wavelet_matrices(C)
print("solved exactly:", D.exact)
for row in D.D1:
    print("   ", [str(x) for x in row])

print("orthogonal to the scaling filters:", verify_wavelet_orthogonality(C, D))
for m in range(n + 2):
    moments = wavelet_moments(D, m)
    print(f"moment t^{m}:", [mpmath.nstr(x.to_mpf(60), 8) for x in moments])

# the float fallback gives the same answer to well beyond double precision
F = build_wavelet_matrices(C, force_fallback=True)
with mpmath.workprec(256):
    gap = max(abs(mpmath.mpf(F.D1[i][j]) - D.D1[i][j].to_mpf(256)) for i in range(n + 1) for j in range(n + 1))
print("fallback vs exact:", mpmath.nstr(gap, 3))
