"""Build the two-scale matrices exactly and check them a few ways."""
from alpert import build_coeff_matrices, verify_orthogonality
from alpert.refinement import PATHS, resolve_subsubdiagonal

n = 4
C = build_coeff_matrices(n)
print(f"C_1 for order {n}, exact:")
for row in C.C1:
    print("   ", [str(x) for x in row])

# every closed-form route lands on the same matrix
same = all(build_coeff_matrices(n, p) == C for p in PATHS)
print("paths agree:", same)

# C_1 C_1^T + C_-1 C_-1^T = 2I, plus the row-parity orthogonality
print("orthogonality holds:", verify_orthogonality(C))

res = resolve_subsubdiagonal(10)
print("second subdiagonal:", res["formula"], "with radicand", res["resolved"])
