"""
End(T) with exact structure constants.

Hom(P(x), P(y)) is identified with R_{y-x}; composing x -> y with y -> z is
multiplication in R. Basis elements are (source index, target index, monomial).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from src.errors import InputError
from src.ring.glring import GLRing, ReducedMonomial, RingElement, ring_for
from src.tilting.bundle import TiltingDatum
from src.logs import get_logger

logger = get_logger(__name__)

Element = Dict[int, Fraction]


@dataclass(frozen=True)
class BasisElement:
    source: int
    target: int
    monomial: ReducedMonomial


class EndoAlgebra:
    def __init__(self, T: TiltingDatum):
        self.tilting = T
        self.type = T.type
        self.ring: GLRing = ring_for(T.type)
        self.basis: List[BasisElement] = []
        self._blocks: Dict[Tuple[int, int], List[int]] = {}
        self._lookup: Dict[BasisElement, int] = {}
        self._constants: Dict[Tuple[int, int], Element] = {}

        for i, x in enumerate(T.summands):
            for j, y in enumerate(T.summands):
                indices = []
                for m in self.ring.monomial_basis(y - x):
                    b = BasisElement(i, j, m)
                    self._lookup[b] = len(self.basis)
                    indices.append(len(self.basis))
                    self.basis.append(b)
                self._blocks[(i, j)] = indices
        logger.debug(f"End(T): {len(T)} summands, dimension {len(self.basis)}")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def block(self, i: int, j: int) -> List[int]:
        return self._blocks[(i, j)]

    def block_dim(self, i: int, j: int) -> int:
        return len(self._blocks[(i, j)])

    def element(self, i: int, j: int, f: RingElement) -> Element:
        """The map P(x_i) -> P(x_j) given by f in R_{x_j - x_i}."""
        out: Element = {}
        for m, c in f.terms.items():
            key = BasisElement(i, j, m)
            if key not in self._lookup:
                raise InputError(f"{f} is not in the component of ({i}, {j})")
            out[self._lookup[key]] = c
        return out

    def ring_value(self, u: Element) -> RingElement:
        return RingElement(self.ring, {self.basis[k].monomial: c for k, c in u.items()})

    def identity(self, i: int) -> Element:
        return self.element(i, i, self.ring.one())

    def unit(self) -> Element:
        out: Element = {}
        for i in range(len(self.tilting)):
            out.update(self.identity(i))
        return out

    def structure_constants(self, a: int, b: int) -> Element:
        """Basis element a followed by basis element b."""
        key = (a, b)
        if key not in self._constants:
            ba, bb = self.basis[a], self.basis[b]
            if ba.target != bb.source:
                self._constants[key] = {}
            else:
                product_ = self.ring.multiply(self.ring.monomial(ba.monomial), self.ring.monomial(bb.monomial))
                self._constants[key] = self.element(ba.source, bb.target, product_)
        return self._constants[key]

    def compose(self, u: Element, v: Element) -> Element:
        """u followed by v (zero where targets and sources do not match)."""
        out: Element = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for k, c in self.structure_constants(a, b).items():
                    val = out.get(k, 0) + ca * cb * c
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def composable_triples(self) -> Iterator[Tuple[int, int, int]]:
        size = len(self.tilting)
        successors = {i: [j for j in range(size) if self._blocks[(i, j)]] for i in range(size)}
        for i in range(size):
            for j, k, l in ((j, k, l) for j in successors[i] for k in successors[j] for l in successors[k]):
                for a in self._blocks[(i, j)]:
                    for b in self._blocks[(j, k)]:
                        for c in self._blocks[(k, l)]:
                            yield a, b, c

    def check_associativity(self, limit: Optional[int] = None) -> List[Tuple[int, int, int]]:
        failures = []
        for count, (a, b, c) in enumerate(self.composable_triples()):
            if limit is not None and count >= limit:
                break
            left = self.compose(self.compose({a: Fraction(1)}, {b: Fraction(1)}), {c: Fraction(1)})
            right = self.compose({a: Fraction(1)}, self.compose({b: Fraction(1)}, {c: Fraction(1)}))
            if left != right:
                failures.append((a, b, c))
        return failures


def endo_algebra(T: TiltingDatum) -> EndoAlgebra:
    return EndoAlgebra(T)
