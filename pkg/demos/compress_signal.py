"""Decompose a piecewise-smooth signal and threshold the details."""
import numpy as np

from alpert.transform import SignalTree, analyze, project_samples, sample_nodes, synthesize, threshold_compress

n, m = 3, 8
t = sample_nodes(n, m)
signal = np.where(t < 0.3, np.sin(6 * t), 0.5 + t ** 2)

s = project_samples(signal.ravel(), n, m)
tree = analyze(SignalTree.from_finest(s, n))
print("coefficients:", tree.coefficient_count())
print("energy before/after:", np.sum(s ** 2), tree.energy())
print("round trip error:", np.max(np.abs(synthesize(tree) - s)))

for eps in (1e-8, 1e-6, 1e-4):
    small, kept = threshold_compress(tree, eps)
    err = np.sqrt(np.sum((synthesize(small) - s) ** 2))
    print(f"eps={eps:g}: kept {kept} details, L2 error {err:.2e}")

# large details cluster around the jump at t = 0.3
for p in sorted(tree.d_blocks):
    norms = np.linalg.norm(tree.d_blocks[p], axis=1)
    print(f"level {p}: largest detail in block {int(np.argmax(norms))} of {len(norms)}")
