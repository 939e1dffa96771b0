"""Discrete multiwavelet transform on [0, 1) in double precision.

Level-``p`` basis functions are ``2^{p/2} phat_i(2(2^p t - k) - 1)`` on the
block ``[k 2^-p, (k+1) 2^-p)``.  With that normalization one analysis step is

    s^p_k = (C_-1 s^{p+1}_{2k} + C_1 s^{p+1}_{2k+1}) / sqrt(2)
    d^p_k = (D_-1 s^{p+1}_{2k} + D_1 s^{p+1}_{2k+1}) / sqrt(2)

and the stacked step matrix is orthogonal, so synthesis is its transpose.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import SurdValue
from .legendre import PolyExact, monic_legendre, orthonormal_scale
from .refinement import CoeffMatrixPair, build_coeff_matrices
from .waveletsolve import WaveletMatrixPair, build_wavelet_matrices

SQRT_HALF = math.sqrt(0.5)


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class FilterBank:
    order: int
    Cm1: np.ndarray
    C1: np.ndarray
    Dm1: np.ndarray
    D1: np.ndarray

    def step_matrix(self) -> np.ndarray:
        """``(1/sqrt 2) [[C_-1, C_1], [D_-1, D_1]]``."""
        return SQRT_HALF * np.block([[self.Cm1, self.C1], [self.Dm1, self.D1]])


def _to_float(M) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in M], dtype=float)


def make_filter_bank(C: CoeffMatrixPair, D: WaveletMatrixPair) -> FilterBank:
    if C.order != D.order:
        raise TransformError("scaling and wavelet matrices have different orders")
    return FilterBank(C.order, _to_float(C.Cm1), _to_float(C.C1), _to_float(D.Dm1), _to_float(D.D1))


@lru_cache(maxsize=None)
def filter_bank(n: int) -> FilterBank:
    C = build_coeff_matrices(n)
    return make_filter_bank(C, build_wavelet_matrices(C))


def _bank(n, C, D) -> FilterBank:
    if isinstance(C, FilterBank):
        return C
    if C is None and D is None:
        return filter_bank(n)
    return make_filter_bank(C, D)


@dataclass
class SignalTree:
    order: int
    finest_level: int
    s_blocks: dict = field(default_factory=dict)  # level -> (2^p, n+1)
    d_blocks: dict = field(default_factory=dict)  # level -> (2^p, n+1), p < m

    @classmethod
    def from_finest(cls, s: np.ndarray, order: int | None = None) -> "SignalTree":
        s = np.asarray(s, dtype=float)
        if s.ndim != 2:
            raise TransformError("finest coefficients must be a (blocks, n+1) array")
        blocks, width = s.shape
        if order is not None and width != order + 1:
            raise TransformError(f"expected vectors of length {order + 1}, got {width}")
        m = blocks.bit_length() - 1
        if blocks != 1 << m:
            raise TransformError(f"block count {blocks} is not a power of two")
        return cls(width - 1, m, {m: s.copy()}, {})

    def validate(self) -> None:
        for name, store in (("s", self.s_blocks), ("d", self.d_blocks)):
            for p, arr in store.items():
                if arr.shape != (1 << p, self.order + 1):
                    raise TransformError(f"{name} level {p} has shape {arr.shape}")

    def energy(self) -> float:
        """Squared 2-norm of the coarsest complete representation held in the tree."""
        if 0 in self.s_blocks and all(p in self.d_blocks for p in range(self.finest_level)):
            return float(np.sum(self.s_blocks[0] ** 2) + sum(np.sum(d ** 2) for d in self.d_blocks.values()))
        return float(np.sum(self.s_blocks[self.finest_level] ** 2))

    def coefficient_count(self) -> int:
        return (self.order + 1) * ((1 << self.finest_level) if self.finest_level in self.s_blocks else 0)

    def copy(self) -> "SignalTree":
        return SignalTree(self.order, self.finest_level,
                          {p: a.copy() for p, a in self.s_blocks.items()},
                          {p: a.copy() for p, a in self.d_blocks.items()})

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "finest_level": self.finest_level,
            "s_blocks": {str(p): self.s_blocks[p].tolist() for p in sorted(self.s_blocks)},
            "d_blocks": {str(p): self.d_blocks[p].tolist() for p in sorted(self.d_blocks)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SignalTree":
        t = cls(
            int(data["order"]), int(data["finest_level"]),
            {int(p): np.array(v, dtype=float).reshape(-1, int(data["order"]) + 1) for p, v in data["s_blocks"].items()},
            {int(p): np.array(v, dtype=float).reshape(-1, int(data["order"]) + 1) for p, v in data["d_blocks"].items()},
        )
        t.validate()
        return t

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SignalTree":
        return cls.from_dict(json.loads(text))


def project_polynomial_exact(f: PolyExact, n: int, m: int) -> list[list[SurdValue]]:
    if m < 0:
        raise TransformError("level must be nonnegative")
    f = f if isinstance(f, PolyExact) else PolyExact(f)
    h = Fraction(1, 1 << m)
    root = SurdValue.sqrt(1 << m)
    out = []
    for k in range(1 << m):
        row = []
        for i in range(n + 1):
            local = monic_legendre(i).affine(1 << (m + 1), -2 * k - 1)
            row.append(root * orthonormal_scale(i) * (f * local).integrate(k * h, (k + 1) * h))
        out.append(row)
    return out


def project_polynomial(f: PolyExact, n: int, m: int) -> np.ndarray:
    """Finest-level coefficients of a polynomial, integrated exactly then rounded."""
    return np.array([[float(x) for x in row] for row in project_polynomial_exact(f, n, m)], dtype=float)


@lru_cache(maxsize=None)
def _sample_projector(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes on [0, 1) and the map from node values to level-0 coefficients."""
    x, w = np.polynomial.legendre.leggauss(n + 1)
    # phat_i(x_q) = sqrt((2i+1)/2) P_i(x_q)
    V = (np.polynomial.legendre.legvander(x, n) * np.sqrt((2 * np.arange(n + 1) + 1) / 2)).T
    # int_0^1 g(t) phat_i(2t-1) dt = (1/2) sum_q w_q g(t_q) phat_i(x_q)
    return (x + 1) / 2, 0.5 * V * w[None, :]


def sample_nodes(n: int, m: int) -> np.ndarray:
    """Sample locations expected by :func:`project_samples`, shape ``(2^m, n+1)``."""
    t, _ = _sample_projector(n)
    k = np.arange(1 << m)[:, None]
    return (k + t[None, :]) / (1 << m)


def project_samples(values, n: int, m: int) -> np.ndarray:
    """Coefficients of the per-block interpolant through Gauss-Legendre node samples.

    ``values`` holds ``2^m (n+1)`` numbers, block after block, taken at
    :func:`sample_nodes`.  The quadrature is exact for the degree-``n``
    interpolant, so polynomial data of degree at most ``n`` projects exactly.
    """
    v = np.asarray(values, dtype=float).reshape(-1)
    if v.size != (1 << m) * (n + 1):
        raise TransformError(f"expected {(1 << m) * (n + 1)} samples, got {v.size}")
    _, Q = _sample_projector(n)
    return 2.0 ** (-m / 2) * v.reshape(1 << m, n + 1) @ Q.T


def analyze(tree: SignalTree, C=None, D=None) -> SignalTree:
    """Fill coarser ``s`` levels and all ``d`` levels from the finest ``s``."""
    m = tree.finest_level
    if m not in tree.s_blocks:
        raise TransformError("finest level is missing")
    bank = _bank(tree.order, C, D)
    if bank.order != tree.order:
        raise TransformError("filter bank order does not match the tree")
    out = SignalTree(tree.order, m, {m: np.array(tree.s_blocks[m], dtype=float)}, {})
    out.validate()
    s = out.s_blocks[m]
    for p in range(m - 1, -1, -1):
        left, right = s[0::2], s[1::2]
        out.d_blocks[p] = SQRT_HALF * (left @ bank.Dm1.T + right @ bank.D1.T)
        s = SQRT_HALF * (left @ bank.Cm1.T + right @ bank.C1.T)
        out.s_blocks[p] = s
    return out


def synthesize(tree: SignalTree, C=None, D=None) -> np.ndarray:
    """Finest ``s`` blocks rebuilt from level-0 ``s`` and every ``d`` level."""
    if 0 not in tree.s_blocks:
        raise TransformError("level-0 scaling coefficients are missing")
    missing = [p for p in range(tree.finest_level) if p not in tree.d_blocks]
    if missing:
        raise TransformError(f"detail levels missing: {missing}")
    bank = _bank(tree.order, C, D)
    s = np.array(tree.s_blocks[0], dtype=float)
    for p in range(tree.finest_level):
        d = tree.d_blocks[p]
        fine = np.empty((2 * s.shape[0], s.shape[1]))
        fine[0::2] = SQRT_HALF * (s @ bank.Cm1 + d @ bank.Dm1)
        fine[1::2] = SQRT_HALF * (s @ bank.C1 + d @ bank.D1)
        s = fine
    return s


def threshold_compress(tree: SignalTree, eps: float) -> tuple[SignalTree, int]:
    """Zero detail coefficients with ``|d| < eps``; return the new tree and the number kept."""
    if eps < 0:
        raise TransformError("threshold must be nonnegative")
    out = tree.copy()
    kept = 0
    for p, d in out.d_blocks.items():
        d[np.abs(d) < eps] = 0.0
        kept += int(np.count_nonzero(np.abs(tree.d_blocks[p]) >= eps))
    return out, kept


def forward(s_finest, n: int, C=None, D=None) -> SignalTree:
    return analyze(SignalTree.from_finest(s_finest, n), C, D)
