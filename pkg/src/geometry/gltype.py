"""
The defining datum of a GL order: projective dimension d, weights p_i and the
hyperplanes l_i(T) = sum_j lambda_ij T_j of P^d.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from src.algebra.linalg import Rational, fstr, rank, to_fraction
from src.errors import GeneralPositionError, InputError, StratumError, WeightError
from src.logs import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class GLType:
    d: int
    weights: Tuple[int, ...]
    hyperplanes: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def create(cls, d: int, weights: Sequence[int], hyperplanes: Sequence[Sequence[Rational]]) -> 'GLType':
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise InputError(f"d must be a positive integer, got {d!r}")
        weights = tuple(weights)
        rows = tuple(tuple(to_fraction(v) for v in row) for row in hyperplanes)
        if len(rows) != len(weights):
            raise InputError(f"{len(weights)} weights but {len(rows)} hyperplanes")
        for i, row in enumerate(rows):
            if len(row) != d + 1:
                raise InputError(f"hyperplane {i + 1} has {len(row)} coefficients, expected d+1={d + 1}")
        for i, p in enumerate(weights):
            if isinstance(p, bool) or not isinstance(p, int):
                raise InputError(f"weight {i + 1} is not an integer: {p!r}")
            if p < 1:
                raise WeightError(f"weight p_{i + 1}={p}: weights must be positive")
        for i, row in enumerate(rows):
            if not any(row):
                raise InputError(f"hyperplane {i + 1} has all coefficients zero")
        return cls(d=d, weights=weights, hyperplanes=rows)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def order_rank(self) -> int:
        """Rank of the order as a sheaf of matrix algebras, prod p_i."""
        result = 1
        for p in self.weights:
            result *= p
        return result

    def to_dict(self) -> dict:
        return {
            'd': self.d,
            'weights': list(self.weights),
            'hyperplanes': [[int(v) if v.denominator == 1 else fstr(v) for v in row] for row in self.hyperplanes],
        }


@dataclass
class ValidationReport:
    violations: List[Tuple[Tuple[int, ...], int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_type(t: GLType) -> ValidationReport:
    """Every subset of at most d+1 hyperplane rows must be linearly independent."""
    report = ValidationReport()
    for size in range(1, min(t.n, t.d + 1) + 1):
        for subset in combinations(range(t.n), size):
            r = rank([t.hyperplanes[i] for i in subset])
            if r < size:
                report.violations.append((subset, r))
    if report.violations:
        logger.debug(f"general position violated by {len(report.violations)} subsets")
    return report


def require_valid(t: GLType) -> GLType:
    report = validate_type(t)
    if not report.ok:
        raise GeneralPositionError(report)
    return t


def strata(t: GLType) -> List[Tuple[int, ...]]:
    """Index subsets (0-based) whose hyperplane intersection is nonempty."""
    require_valid(t)
    return [subset for size in range(0, min(t.n, t.d) + 1)
            for subset in combinations(range(t.n), size)]


def check_stratum(s: Sequence[int], t: GLType) -> Tuple[int, ...]:
    subset = tuple(sorted(set(s)))
    if len(subset) != len(s):
        raise StratumError(f"repeated hyperplane index in {list(s)}")
    if any(i < 0 or i >= t.n for i in subset):
        raise StratumError(f"hyperplane index out of range in {list(s)}")
    if len(subset) > t.d:
        raise StratumError(f"{len(subset)} hyperplanes in P^{t.d} in general position have empty intersection")
    return subset
