"""
Quiver with relations for End(T).

Vertices are the summands x in [0, dc]; an arrow x -> x + x_i labelled x_i is
multiplication by X_i. Relations are commutativity squares and, for every i
outside a pivot set B of d+1 hyperplanes, x_i^p_i = sum_{j in B} mu_ij x_j^p_j
where l_i = sum_j mu_ij l_j.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from src.algebra.linalg import RowSpace, rank, solve
from src.errors import ArrowInsufficientError, InputError
from src.geometry.gltype import GLType
from src.grading.lgroup import LElement, canonical, generator
from src.tilting.bundle import TiltingDatum, cartan
from src.tilting.endo import Element, EndoAlgebra
from src.logs import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Arrow:
    source: LElement
    gen: int
    target: LElement


@dataclass(frozen=True)
class RelationTerm:
    path: Tuple[int, ...]
    coef: Fraction


@dataclass
class Relation:
    at: LElement
    kind: str
    terms: List[RelationTerm]


@dataclass
class QuiverPresentation:
    vertices: List[LElement]
    arrows: List[Arrow]
    relations: List[Relation]
    pivot: Tuple[int, ...]
    coefficients: Dict[int, List[Fraction]] = field(default_factory=dict)

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        index = {x: k for k, x in enumerate(self.vertices)}
        for arrow in self.arrows:
            g.add_edge(index[arrow.source], index[arrow.target], gen=arrow.gen)
        return g

    def relations_of_kind(self, kind: str) -> List[Relation]:
        return [r for r in self.relations if r.kind == kind]


def quiver_arrows(T: TiltingDatum) -> List[Arrow]:
    gens = [generator(i, T.type) for i in range(T.type.n)]
    arrows = []
    for x in T.summands:
        for i, g in enumerate(gens):
            y = x + g
            if y in T:
                arrows.append(Arrow(source=x, gen=i, target=y))
    return arrows


def choose_pivot(t: GLType, override: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """Lexicographically first d+1 hyperplanes whose forms are a basis, unless overridden."""
    size = t.d + 1
    if override is not None:
        pivot = tuple(sorted(set(override)))
        if len(pivot) != size or len(pivot) != len(override):
            raise InputError(f"pivot set must name {size} distinct hyperplanes, got {list(override)}")
        if any(not 0 <= i < t.n for i in pivot):
            raise InputError(f"pivot index out of range in {[i + 1 for i in override]}")
        if rank([t.hyperplanes[i] for i in pivot]) < size:
            raise InputError(f"pivot forms {[i + 1 for i in pivot]} are not a basis of linear forms")
        return pivot
    for pivot in combinations(range(t.n), size):
        if rank([t.hyperplanes[i] for i in pivot]) == size:
            return pivot
    raise ArrowInsufficientError(t.d, t.n)


def pivot_coefficients(t: GLType, pivot: Sequence[int]) -> Dict[int, List[Fraction]]:
    basis = [t.hyperplanes[j] for j in pivot]
    coefficients = {}
    for i in range(t.n):
        if i in pivot:
            continue
        mu = solve(basis, t.hyperplanes[i])
        if mu is None:
            raise InputError(f"l_{i + 1} is not in the span of the pivot forms")
        coefficients[i] = mu
    return coefficients


def quiver_presentation(T: TiltingDatum, pivot: Optional[Sequence[int]] = None) -> QuiverPresentation:
    t = T.type
    if t.n <= t.d:
        raise ArrowInsufficientError(t.d, t.n)
    chosen = choose_pivot(t, pivot)
    mu = pivot_coefficients(t, chosen)
    gens = [generator(i, t) for i in range(t.n)]
    c = canonical(t)

    relations = []
    for x in T.summands:
        for i, j in combinations(range(t.n), 2):
            if x + gens[i] + gens[j] in T:
                relations.append(Relation(at=x, kind='commutativity', terms=[
                    RelationTerm((i, j), Fraction(1)),
                    RelationTerm((j, i), Fraction(-1)),
                ]))
        if x + c in T:
            for i, coefs in mu.items():
                terms = [RelationTerm((i,) * t.weights[i], Fraction(1))]
                for j, m in zip(chosen, coefs):
                    if m:
                        terms.append(RelationTerm((j,) * t.weights[j], -m))
                relations.append(Relation(at=x, kind='pivot', terms=terms))

    presentation = QuiverPresentation(vertices=list(T.summands), arrows=quiver_arrows(T),
                                      relations=relations, pivot=chosen, coefficients=mu)
    logger.debug(f"quiver: {len(presentation.vertices)} vertices, {len(presentation.arrows)} arrows, "
                 f"{len(relations)} relations, pivot {[i + 1 for i in chosen]}")
    return presentation


def path_element(endo: EndoAlgebra, start: LElement, path: Sequence[int]) -> Element:
    """Composite of the arrows along path, starting at vertex start."""
    T = endo.tilting
    current = T.index(start)
    value = endo.identity(current)
    x = start
    for gen in path:
        y = x + generator(gen, T.type)
        if y not in T:
            raise InputError(f"path leaves the interval at {y}")
        target = T.index(y)
        arrow = endo.element(current, target, endo.ring.x(gen))
        value = endo.compose(value, arrow)
        x, current = y, target
    return value


def relation_value(endo: EndoAlgebra, relation: Relation) -> Element:
    total: Element = {}
    for term in relation.terms:
        for k, v in path_element(endo, relation.at, term.path).items():
            val = total.get(k, 0) + term.coef * v
            if val:
                total[k] = val
            else:
                total.pop(k, None)
    return total


@dataclass(frozen=True)
class SpanDeficit:
    source: LElement
    target: LElement
    span_dim: int
    cartan_dim: int


@dataclass
class GenerationReport:
    pairs_checked: int = 0
    deficits: List[SpanDeficit] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.deficits


def arrow_generation_check(T: TiltingDatum, endo: Optional[EndoAlgebra] = None,
                           progress: bool = False) -> GenerationReport:
    """Compare the span of arrow-path composites x -> y with dim Hom(P(x), P(y))."""
    endo = endo or EndoAlgebra(T)
    cm = cartan(T)
    arrows = quiver_arrows(T)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(T)))
    incoming: Dict[int, List[Tuple[int, Element]]] = {k: [] for k in range(len(T))}
    for arrow in arrows:
        i, j = T.index(arrow.source), T.index(arrow.target)
        graph.add_edge(i, j)
        incoming[j].append((i, endo.element(i, j, endo.ring.x(arrow.gen))))
    order = list(nx.lexicographical_topological_sort(graph))

    report = GenerationReport()
    for s in tqdm(range(len(T)), desc="generation", disable=not progress, leave=False):
        spans: Dict[int, RowSpace] = {s: RowSpace()}
        spans[s].add(endo.identity(s))
        for v in order:
            if v == s:
                continue
            span = RowSpace()
            for u, arrow in incoming[v]:
                if u in spans:
                    for vec in spans[u].basis():
                        span.add(endo.compose(vec, arrow))
            if span.dim:
                spans[v] = span
        for v in range(len(T)):
            expected = int(cm.matrix[s, v])
            got = spans[v].dim if v in spans else 0
            report.pairs_checked += 1
            if got < expected:
                report.deficits.append(SpanDeficit(T.summands[s], T.summands[v], got, expected))
    if report.deficits:
        logger.info(f"arrow paths miss {len(report.deficits)} Hom spaces")
    return report
