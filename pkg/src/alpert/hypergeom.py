"""Terminating generalized hypergeometric series at rational arguments."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import pochhammer


def _is_nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypTerminatingSpec:
    """Parameters of ``pFq(a_1..a_p; b_1..b_q; t)`` with a terminating numerator.

    The series stops after ``N`` terms where ``-N`` is the largest nonpositive
    integer among the numerator parameters.  Denominator parameters may be
    nonpositive integers as long as their zero factor lies beyond ``N``.
    """

    numerator_params: tuple = ()
    denominator_params: tuple = ()
    argument: Fraction = Fraction(0)
    require_balanced: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "numerator_params", tuple(Fraction(a) for a in self.numerator_params))
        object.__setattr__(self, "denominator_params", tuple(Fraction(b) for b in self.denominator_params))
        object.__setattr__(self, "argument", Fraction(self.argument))
        n = self.length
        for b in self.denominator_params:
            if _is_nonpositive_int(b) and -b < n:
                raise ValueError(
                    f"denominator parameter {b} vanishes inside the summation range 0..{n}")
        if self.require_balanced and not self.is_balanced():
            raise ValueError(f"hypergeometric series is not balanced: {self}")

    @property
    def length(self) -> int:
        """Index of the last nonzero term."""
        stops = [-a for a in self.numerator_params if _is_nonpositive_int(a)]
        if not stops:
            raise ValueError("series does not terminate: no nonpositive integer numerator parameter")
        return int(min(stops))

    def is_balanced(self) -> bool:
        return sum(self.numerator_params) + 1 == sum(self.denominator_params)


def hyp_terms(spec: HypTerminatingSpec) -> list[Fraction]:
    """All terms of the series, accumulated by the running term ratio."""
    t = spec.argument
    term = Fraction(1)
    out = [term]
    for i in range(spec.length):
        num = Fraction(1)
        for a in spec.numerator_params:
            num *= a + i
        den = Fraction(i + 1)
        for b in spec.denominator_params:
            den *= b + i
        term = term * num * t / den
        out.append(term)
    return out


def hyp_eval(spec: HypTerminatingSpec) -> Fraction:
    """Exact value of a terminating pFq."""
    return sum(hyp_terms(spec), Fraction(0))


def hyp(num, den, t, balanced: bool = False) -> Fraction:
    return hyp_eval(HypTerminatingSpec(tuple(num), tuple(den), Fraction(t), balanced))


def verify_chu_vandermonde(j: int, k: int) -> bool:
    """2F1(-j, j+1; k+2; 1) == (k-j+1)_j / (k+2)_j."""
    lhs = hyp((-j, j + 1), (k + 2,), 1)
    rhs = pochhammer(k - j + 1, j) / pochhammer(k + 2, j)
    return lhs == rhs


def verify_saalschutz(j: int, m: int) -> bool:
    """Balanced 3F2(-j, j+1, 2m+1; 1, 2m+2; 1) against its product form."""
    spec = HypTerminatingSpec((-j, j + 1, 2 * m + 1), (1, 2 * m + 2), 1, require_balanced=True)
    rhs = pochhammer(-j, j) * pochhammer(2 * m - j + 1, j) / (pochhammer(1, j) * pochhammer(2 * m + 2, j))
    return hyp_eval(spec) == rhs
