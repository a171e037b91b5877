"""
The Zc-regrading R^[Zc] of the L-graded ring R.

Degree h of R^[Zc] is the matrix (R_{i-j+hc})_{i,j in I} over a set I of coset
representatives of L/Zc; multiplication is the matrix product with entries
multiplied in R. Its Hilbert function is compared with the triangular tensor
form over S = k[T] and with the section algebra B(Lambda, L).
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import DegreeError, InputError
from src.geometry.gltype import GLType
from src.geometry.projcohom import h as cohom
from src.grading.lgroup import LElement, canonical
from src.order.ordermodel import multi_indices, order_entry
from src.ring.glring import ReducedMonomial, RingElement, hilbert, ring_for

Block = Tuple[int, int]


def coset_reps(t: GLType) -> List[LElement]:
    """I = {sum a_i x_i : 0 <= a_i < p_i}, lexicographic in a."""
    p = tuple(t.weights)
    return [LElement(a=tuple(a), ell=0, weights=p) for a in product(*(range(pi) for pi in p))]


def _check_reps(reps: Sequence[LElement], t: GLType) -> List[LElement]:
    reps = list(reps)
    if len(reps) != t.order_rank or len({r.a for r in reps}) != len(reps):
        raise InputError("representatives must cover L/Zc exactly once")
    return reps


@dataclass
class RegradedComponent:
    h: int
    reps: List[LElement]
    blocks: Dict[Block, List[ReducedMonomial]] = field(default_factory=dict)

    def block_degree(self, i: int, j: int) -> LElement:
        return self.reps[i] - self.reps[j] + canonical(self.reps[i].weights, self.h)

    def dims(self) -> np.ndarray:
        size = len(self.reps)
        out = np.zeros((size, size), dtype=np.int64)
        for (i, j), basis in self.blocks.items():
            out[i, j] = len(basis)
        return out

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.blocks.values())


def regrade_component(h: int, t: GLType, reps: Optional[Sequence[LElement]] = None) -> RegradedComponent:
    reps = coset_reps(t) if reps is None else _check_reps(reps, t)
    ring = ring_for(t)
    component = RegradedComponent(h=h, reps=reps)
    for i, j in product(range(len(reps)), repeat=2):
        component.blocks[(i, j)] = ring.monomial_basis(component.block_degree(i, j))
    return component


@dataclass
class RegradedElement:
    h: int
    reps: List[LElement]
    entries: Dict[Block, RingElement] = field(default_factory=dict)

    def block_degree(self, i: int, j: int) -> LElement:
        return self.reps[i] - self.reps[j] + canonical(self.reps[i].weights, self.h)

    def check(self) -> 'RegradedElement':
        for (i, j), f in self.entries.items():
            deg = f.degree()
            if deg is not None and deg != self.block_degree(i, j):
                raise DegreeError(f"entry ({i}, {j}) has degree {deg}, expected {self.block_degree(i, j)}")
        return self

    def nonzero(self) -> Dict[Block, RingElement]:
        return {k: f for k, f in self.entries.items() if not f.is_zero()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegradedElement):
            return NotImplemented
        return self.h == other.h and self.reps == other.reps and self.nonzero() == other.nonzero()


def regrade_identity(t: GLType, reps: Optional[Sequence[LElement]] = None) -> RegradedElement:
    reps = coset_reps(t) if reps is None else _check_reps(reps, t)
    one = ring_for(t).one()
    return RegradedElement(h=0, reps=reps, entries={(i, i): one for i in range(len(reps))})


def regrade_multiply(u: RegradedElement, v: RegradedElement) -> RegradedElement:
    """(u v)_{ij} = sum_k u_{ik} v_{kj}, landing in degree h + h'."""
    if u.reps != v.reps:
        raise DegreeError("elements use different coset representatives")
    u.check()
    v.check()
    out: Dict[Block, RingElement] = {}
    by_row: Dict[int, List[Tuple[int, RingElement]]] = {}
    for (k, j), g in v.entries.items():
        by_row.setdefault(k, []).append((j, g))
    for (i, k), f in u.entries.items():
        for j, g in by_row.get(k, []):
            term = f * g
            out[(i, j)] = out[(i, j)] + term if (i, j) in out else term
    return RegradedElement(h=u.h + v.h, reps=u.reps, entries=out).check()


def strictly_upper_count(j: Sequence[int], k: Sequence[int]) -> int:
    return sum(1 for ji, ki in zip(j, k) if ji < ki)


def triangular_tensor_dim(ell: int, t: GLType) -> int:
    """Degree ell of T_p1(S, X_1^p1) (x)_S ... (x)_S T_pn(S, X_n^pn)."""
    if ell < 0:
        return 0
    total = 0
    indices = multi_indices(t)
    for j in indices:
        for k in indices:
            total += cohom(0, ell - strictly_upper_count(j, k), t.d)
    return total


def b_algebra_dim(ell: int, t: GLType) -> int:
    """dim H^0(P^d, Lambda (x) O(ell))."""
    if ell < 0:
        raise DegreeError(f"B(Lambda, L) has no component of negative degree {ell}")
    indices = multi_indices(t)
    return sum(cohom(0, ell + order_entry(j, k, t).total, t.d) for j in indices for k in indices)


def regraded_series(t: GLType, max_degree: int) -> List[int]:
    return [regrade_component(h, t).dimension for h in range(max_degree + 1)]


def triangular_series(t: GLType, max_degree: int) -> List[int]:
    return [triangular_tensor_dim(h, t) for h in range(max_degree + 1)]


def b_algebra_series(t: GLType, max_degree: int) -> List[int]:
    return [b_algebra_dim(h, t) for h in range(max_degree + 1)]


def transport_shift(g: LElement, t: GLType) -> Tuple[int, int]:
    """g = i + hc with i in I: the shift R(g) goes to (R^[Zc](h)) e_i."""
    if g.weights != tuple(t.weights):
        raise InputError(f"{g} does not belong to L{tuple(t.weights)}")
    reps = coset_reps(t)
    index = next(k for k, r in enumerate(reps) if r.a == g.a)
    return g.ell, index


def untransport(h: int, index: int, t: GLType) -> LElement:
    reps = coset_reps(t)
    if not 0 <= index < len(reps):
        raise InputError(f"representative index {index} out of range")
    return reps[index] + canonical(t, h)


def component_total(h: int, t: GLType) -> int:
    """sum_{i,j} hilbert(i - j + hc) without building monomial bases."""
    reps = coset_reps(t)
    c = canonical(t, h)
    return sum(hilbert(ri - rj + c, t) for ri in reps for rj in reps)
