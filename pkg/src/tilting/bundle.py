"""
The tilting bundle T = sum of P(x) over x in [0, dc], its Cartan matrix and the
rigidity certificate Ext^i(T, T) = 0 for i > 0.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from src.geometry.gltype import GLType, require_valid
from src.geometry.projcohom import CohomologyVector, ext_dims, hom_dim
from src.grading.lgroup import LElement, format_element, interval
from src.logs import get_logger

logger = get_logger(__name__)


@dataclass
class TiltingDatum:
    summands: List[LElement]
    type: GLType
    _index: Dict[LElement, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        self._index = {x: k for k, x in enumerate(self.summands)}

    def __len__(self) -> int:
        return len(self.summands)

    def index(self, x: LElement) -> int:
        return self._index[x]

    def __contains__(self, x: LElement) -> bool:
        return x in self._index

    def labels(self) -> List[str]:
        return [format_element(x) for x in self.summands]


def build_tilting(t: GLType) -> TiltingDatum:
    require_valid(t)
    datum = TiltingDatum(summands=interval(t), type=t)
    logger.debug(f"tilting bundle with {len(datum)} summands")
    return datum


@dataclass
class CartanMatrix:
    summands: List[LElement]
    matrix: np.ndarray

    def entry(self, x: LElement, y: LElement) -> int:
        return int(self.matrix[self.summands.index(x), self.summands.index(y)])

    @property
    def total(self) -> int:
        return int(self.matrix.sum())

    def rows(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.matrix]


def cartan(T: TiltingDatum) -> CartanMatrix:
    size = len(T)
    matrix = np.zeros((size, size), dtype=np.int64)
    for i, x in enumerate(T.summands):
        for j, y in enumerate(T.summands):
            matrix[i, j] = hom_dim(x, y, T.type)
    return CartanMatrix(summands=list(T.summands), matrix=matrix)


@dataclass(frozen=True)
class PairExt:
    source: LElement
    target: LElement
    ell: int
    dims: CohomologyVector


@dataclass
class RigidityReport:
    d: int
    pairs: List[PairExt] = field(default_factory=list)

    @property
    def failures(self) -> List[PairExt]:
        return [p for p in self.pairs if not p.dims.vanishes_above_zero()]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def ell_range(self) -> Optional[Tuple[int, int]]:
        if not self.pairs:
            return None
        ells = [p.ell for p in self.pairs]
        return min(ells), max(ells)

    @property
    def ell_certified(self) -> bool:
        return all(-self.d <= p.ell <= self.d for p in self.pairs)


def rigidity_report(T: TiltingDatum, progress: bool = False) -> RigidityReport:
    report = RigidityReport(d=T.type.d)
    for x in tqdm(T.summands, desc="rigidity", disable=not progress, leave=False):
        for y in T.summands:
            dims = ext_dims(x, y, T.type)
            report.pairs.append(PairExt(source=x, target=y, ell=(y - x).ell, dims=dims))
    if not report.ok:
        logger.warning(f"rigidity fails on {len(report.failures)} pairs")
    return report
