"""Exact Alpert multiwavelet matrices, their identities and a multiwavelet transform."""
from .exact import SurdValue, SurdDivisionError
from .hypergeom import HypTerminatingSpec, hyp, hyp_eval
from .legendre import PolyExact, eval_scaling_vector, integrate_shifted_product, monic_legendre, orthonormal_legendre
from .refinement import CoeffMatrixPair, build_coeff_matrices, c1_entry, verify_orthogonality
from .waveletsolve import WaveletMatrixPair, build_wavelet_matrices, verify_wavelet_orthogonality
from .transform import SignalTree, analyze, synthesize, project_polynomial, threshold_compress

__version__ = "0.1.0"

__all__ = [
    "SurdValue", "SurdDivisionError", "HypTerminatingSpec", "hyp", "hyp_eval",
    "PolyExact", "eval_scaling_vector", "integrate_shifted_product", "monic_legendre", "orthonormal_legendre",
    "CoeffMatrixPair", "build_coeff_matrices", "c1_entry", "verify_orthogonality",
    "WaveletMatrixPair", "build_wavelet_matrices", "verify_wavelet_orthogonality",
    "SignalTree", "analyze", "synthesize", "project_polynomial", "threshold_compress",
]
