"""
Exact linear algebra over the rationals.

Rank uses fraction-free (Bareiss) elimination on integer rows; solving and
span bookkeeping use Gauss-Jordan over Fraction. No floating point anywhere.
"""

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union

from src.errors import InputError

Rational = Union[int, str, Fraction]


def to_fraction(value: Rational) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational number: {value!r}")
    raise InputError(f"not a rational number: {value!r}")


def fstr(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def integer_rows(rows: Sequence[Sequence[Rational]]) -> List[List[int]]:
    """Scale every row by the lcm of its denominators."""
    result = []
    for row in rows:
        fracs = [to_fraction(v) for v in row]
        scale = 1
        for f in fracs:
            scale = scale * f.denominator // math.gcd(scale, f.denominator)
        result.append([int(f * scale) for f in fracs])
    return result


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    if not rows:
        return 0
    a = integer_rows(rows)
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, m):
            for j in range(col + 1, n):
                # Bareiss step: the division is exact
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = a[r][col]
        r += 1
    return r


def solve(basis: Sequence[Sequence[Rational]], target: Sequence[Rational]) -> Optional[List[Fraction]]:
    """Coefficients mu with sum_j mu[j] * basis[j] == target, or None.

    basis vectors must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if all(to_fraction(v) == 0 for v in target) else None
    n = len(target)
    # augmented system: columns are basis vectors
    aug = [[to_fraction(basis[j][i]) for j in range(k)] + [to_fraction(target[i])] for i in range(n)]
    pivots = []
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, n) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        lead = aug[r][col]
        aug[r] = [v / lead for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [vi - factor * vr for vi, vr in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, n)):
        return None
    mu = [Fraction(0)] * k
    for row, col in enumerate(pivots):
        mu[col] = aug[row][k]
    return mu


class RowSpace:
    """Incrementally maintained reduced echelon basis of a span of sparse vectors.

    Vectors are dicts from a hashable coordinate key to Fraction.
    """

    def __init__(self):
        self.rows: Dict[object, Dict[object, Fraction]] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vector: Dict[object, Fraction]) -> Dict[object, Fraction]:
        v = {key: Fraction(c) for key, c in vector.items() if c != 0}
        for lead, row in self.rows.items():
            c = v.get(lead)
            if c:
                for key, rc in row.items():
                    nv = v.get(key, 0) - c * rc
                    if nv:
                        v[key] = nv
                    else:
                        v.pop(key, None)
        return v

    def add(self, vector: Dict[object, Fraction]) -> bool:
        v = self._reduce(vector)
        if not v:
            return False
        lead = min(v)
        scale = v[lead]
        v = {key: c / scale for key, c in v.items()}
        for other_lead, row in self.rows.items():
            c = row.get(lead)
            if c:
                for key, vc in v.items():
                    nv = row.get(key, 0) - c * vc
                    if nv:
                        row[key] = nv
                    else:
                        row.pop(key, None)
        self.rows[lead] = v
        return True

    def basis(self) -> List[Dict[object, Fraction]]:
        return [dict(self.rows[lead]) for lead in sorted(self.rows)]
