"""Line bundle cohomology on P^d and the Hom/Ext calculus between summands P(x)."""

from dataclasses import dataclass
from math import comb
from typing import Tuple

from src.errors import InputError
from src.grading.lgroup import LElement


@dataclass(frozen=True)
class CohomologyVector:
    dims: Tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.dims) - 1

    def higher(self) -> Tuple[int, ...]:
        """Entries h^i with i > 0."""
        return self.dims[1:]

    def vanishes_above_zero(self) -> bool:
        return not any(self.higher())


def h(i: int, ell: int, d: int) -> int:
    """dim H^i(P^d, O(ell))."""
    if d < 1:
        raise InputError(f"d must be positive, got {d}")
    if not 0 <= i <= d:
        raise InputError(f"cohomological degree {i} outside 0..{d}")
    if i == 0:
        return comb(ell + d, d) if ell >= 0 else 0
    if i == d:
        # Serre duality: h^d(O(ell)) = h^0(O(-ell-d-1))
        return comb(-ell - 1, d) if ell <= -d - 1 else 0
    return 0


def cohomology(ell: int, d: int) -> CohomologyVector:
    return CohomologyVector(dims=tuple(h(i, ell, d) for i in range(d + 1)))


def hom_dim(x: LElement, y: LElement, t) -> int:
    """dim Hom(P(x), P(y)) = h^0(O(ell(y - x)))."""
    return h(0, (y - x).ell, t.d)


def ext_dims(x: LElement, y: LElement, t) -> CohomologyVector:
    return cohomology((y - x).ell, t.d)
