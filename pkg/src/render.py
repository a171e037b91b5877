"""Text, JSON and DOT renderings of every command result."""

import json
from typing import Any, Dict, List, Optional, Sequence

from src.algebra.linalg import fstr
from src.geometry.gltype import GLType, ValidationReport
from src.grading.lgroup import LElement, format_element
from src.order.ordermodel import ColumnBundle, LocalType
from src.regrade.regrade import RegradedComponent
from src.tilting.bundle import CartanMatrix, RigidityReport
from src.tilting.endo import EndoAlgebra
from src.tilting.quiver import GenerationReport, QuiverPresentation, Relation


def to_json(payload: Any, indent: int = 2) -> str:
    return json.dumps(payload, indent=indent, ensure_ascii=False)


def _subset(s: Sequence[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in s) + "}"


# validate

def validation_payload(t: GLType, report: ValidationReport) -> Dict[str, Any]:
    return {
        'ok': report.ok,
        'type': t.to_dict(),
        'violations': [{'subset': [i + 1 for i in s], 'rank': r} for s, r in report.violations],
    }


def validation_text(t: GLType, report: ValidationReport) -> str:
    if report.ok:
        return f"OK: {t.n} hyperplanes in P^{t.d} are in general position"
    lines = [f"INVALID: {len(report.violations)} subsets violate general position"]
    for s, r in report.violations:
        lines.append(f"  subset {_subset(s)} has rank {r} < {len(s)}")
    return "\n".join(lines)


# interval

def interval_payload(elements: List[LElement], columns: Optional[List[ColumnBundle]] = None) -> Dict[str, Any]:
    payload = {'size': len(elements), 'elements': [format_element(x) for x in elements]}
    if columns is not None:
        payload['columns'] = [{'element': format_element(x), 'column': col.to_dict()}
                              for x, col in zip(elements, columns)]
    return payload


def interval_text(elements: List[LElement], columns: Optional[List[ColumnBundle]] = None) -> str:
    if columns is None:
        return "\n".join(format_element(x) for x in elements)
    lines = []
    for x, col in zip(elements, columns):
        cells = " ".join(f"{''.join(map(str, j))}:{e}" for j, e in sorted(col.entries.items()))
        lines.append(f"{format_element(x)}\t{cells}")
    return "\n".join(lines)


# cartan

def cartan_payload(cm: CartanMatrix) -> Dict[str, Any]:
    return {
        'summands': [format_element(x) for x in cm.summands],
        'matrix': cm.rows(),
        'total': cm.total,
    }


def _table(header: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(r[k]) for r in [header] + rows) for k in range(len(header))]
    fmt = lambda r: "  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip()
    return "\n".join([fmt(header)] + [fmt(r) for r in rows])


def cartan_text(cm: CartanMatrix) -> str:
    labels = [format_element(x) for x in cm.summands]
    rows = [[labels[i]] + [str(v) for v in row] for i, row in enumerate(cm.rows())]
    return _table([""] + labels, rows) + f"\ntotal {cm.total}"


# rigidity

def rigidity_payload(report: RigidityReport) -> Dict[str, Any]:
    lo, hi = report.ell_range or (0, 0)
    return {
        'ok': report.ok,
        'ell_range': [lo, hi],
        'ell_certified': report.ell_certified,
        'pairs': [{'source': format_element(p.source), 'target': format_element(p.target),
                   'ell': p.ell, 'cohomology': list(p.dims.dims)} for p in report.pairs],
    }


def rigidity_text(report: RigidityReport) -> str:
    lo, hi = report.ell_range or (0, 0)
    if report.ok:
        return f"OK: all Ext^i, i>0 vanish; ell range [{lo},{hi}]"
    lines = [f"FAIL: {len(report.failures)} pairs with nonvanishing Ext^i, i>0; ell range [{lo},{hi}]"]
    for p in report.failures:
        higher = ", ".join(f"Ext^{i}={v}" for i, v in enumerate(p.dims.dims) if i and v)
        lines.append(f"  ({format_element(p.source)}, {format_element(p.target)}) ell={p.ell}: {higher}")
    return "\n".join(lines)


# quiver

def _path(path: Sequence[int]) -> str:
    runs: List[List[int]] = []
    for gen in path:
        if runs and runs[-1][0] == gen:
            runs[-1][1] += 1
        else:
            runs.append([gen, 1])
    return "*".join(f"x{g + 1}" if k == 1 else f"x{g + 1}^{k}" for g, k in runs) or "e"


def relation_text(relation: Relation) -> str:
    """First term on the left, the rest moved to the right."""
    head, rest = relation.terms[0], relation.terms[1:]
    left = _path(head.path) if head.coef == 1 else f"{fstr(head.coef)}*{_path(head.path)}"
    right = ""
    for k, term in enumerate(rest):
        coef = -term.coef / head.coef
        body = _path(term.path) if abs(coef) == 1 else f"{fstr(abs(coef))}*{_path(term.path)}"
        if k == 0:
            right = body if coef > 0 else f"-{body}"
        else:
            right += f" + {body}" if coef > 0 else f" - {body}"
    return f"{left} = {right or '0'}"


def quiver_payload(q: QuiverPresentation) -> Dict[str, Any]:
    return {
        'vertices': [format_element(x) for x in q.vertices],
        'arrows': [{'from': format_element(a.source), 'to': format_element(a.target), 'gen': a.gen + 1}
                   for a in q.arrows],
        'pivot': [i + 1 for i in q.pivot],
        'relations': [{'at': format_element(r.at), 'kind': r.kind,
                       'terms': [{'path': [g + 1 for g in term.path], 'coef': fstr(term.coef)}
                                 for term in r.terms]}
                      for r in q.relations],
    }


def quiver_text(q: QuiverPresentation) -> str:
    lines = [f"vertices ({len(q.vertices)}): " + ", ".join(format_element(x) for x in q.vertices),
             f"arrows ({len(q.arrows)}):"]
    lines += [f"  {format_element(a.source)} -> {format_element(a.target)} [x{a.gen + 1}]" for a in q.arrows]
    lines.append(f"pivot: {_subset(q.pivot)}")
    lines.append(f"relations ({len(q.relations)}):")
    lines += [f"  at {format_element(r.at)}: {relation_text(r)}" for r in q.relations]
    return "\n".join(lines)


def quiver_dot(q: QuiverPresentation) -> str:
    lines = ["digraph quiver {", "  rankdir=LR;"]
    lines += [f'  "{format_element(x)}";' for x in q.vertices]
    lines += [f'  "{format_element(a.source)}" -> "{format_element(a.target)}" [label="x{a.gen + 1}"];'
              for a in q.arrows]
    lines.append("}")
    return "\n".join(lines)


# endo

def endo_payload(endo: EndoAlgebra, failures: Optional[list] = None,
                 generation: Optional[GenerationReport] = None) -> Dict[str, Any]:
    size = len(endo.tilting)
    payload = {
        'dimension': endo.dimension,
        'summands': endo.tilting.labels(),
        'blocks': [[endo.block_dim(i, j) for j in range(size)] for i in range(size)],
        'associative': None if failures is None else not failures,
    }
    if generation is not None:
        payload['generation'] = {
            'ok': generation.ok,
            'pairs_checked': generation.pairs_checked,
            'deficits': [{'source': format_element(d.source), 'target': format_element(d.target),
                          'span': d.span_dim, 'cartan': d.cartan_dim} for d in generation.deficits],
        }
    return payload


def endo_text(endo: EndoAlgebra, failures: Optional[list] = None,
              generation: Optional[GenerationReport] = None) -> str:
    lines = [f"dimension {endo.dimension}"]
    for i, x in enumerate(endo.tilting.labels()):
        for j, y in enumerate(endo.tilting.labels()):
            basis = [str(endo.basis[k].monomial) for k in endo.block(i, j)]
            if basis:
                lines.append(f"  Hom({x}, {y}): {', '.join(basis)}")
    if failures is not None:
        lines.append("associativity: ok" if not failures else f"associativity: {len(failures)} failing triples")
    if generation is not None:
        if generation.ok:
            lines.append(f"arrow generation: ok ({generation.pairs_checked} pairs)")
        else:
            lines.append(f"arrow generation: {len(generation.deficits)} deficits")
            lines += [f"  ({format_element(d.source)}, {format_element(d.target)}): span {d.span_dim} < {d.cartan_dim}"
                      for d in generation.deficits]
    return "\n".join(lines)


# hilbert

def hilbert_payload(rows: List[Dict[str, Any]]) -> Dict[str, Any]:
    return {'degrees': rows}


def hilbert_text(rows: List[Dict[str, Any]]) -> str:
    lines = []
    for row in rows:
        line = f"{row['degree']}\t{row['dim']}"
        if 'basis' in row:
            line += "\t" + ", ".join(row['basis'])
        lines.append(line)
    return "\n".join(lines)


# regrade

def regrade_series_payload(series: List[Dict[str, int]]) -> Dict[str, Any]:
    ok = all(row['regraded'] == row['triangular'] == row['b_algebra'] for row in series)
    return {'ok': ok, 'series': series}


def regrade_series_text(series: List[Dict[str, int]]) -> str:
    rows = [[str(r['h']), str(r['regraded']), str(r['triangular']), str(r['b_algebra']),
             "ok" if r['regraded'] == r['triangular'] == r['b_algebra'] else "MISMATCH"] for r in series]
    return _table(["h", "regraded", "triangular", "b_algebra", ""], rows)


def component_payload(component: RegradedComponent) -> Dict[str, Any]:
    return {
        'h': component.h,
        'reps': [format_element(r) for r in component.reps],
        'dims': [[int(v) for v in row] for row in component.dims()],
    }


def component_text(component: RegradedComponent) -> str:
    labels = [format_element(r) for r in component.reps]
    rows = [[labels[i]] + [str(int(v)) for v in row] for i, row in enumerate(component.dims())]
    return _table([f"h={component.h}"] + labels, rows) + f"\ntotal {component.dimension}"


# local

def local_payload(items: List[LocalType]) -> Dict[str, Any]:
    return {'strata': [{'stratum': [i + 1 for i in lt.stratum], 'weights': lt.weights,
                        'global_dimension': lt.global_dimension, 'morita_trivial': lt.morita_trivial}
                       for lt in items]}


def local_text(items: List[LocalType]) -> str:
    lines = []
    for lt in items:
        weights = "(" + ",".join(map(str, lt.weights)) + ")" if lt.weights else "trivial"
        lines.append(f"{_subset(lt.stratum)}\tweights {weights}\tgldim {lt.global_dimension}")
    return "\n".join(lines)


# transport

def transport_payload(g: LElement, h: int, index: int, rep: LElement) -> Dict[str, Any]:
    return {'element': format_element(g), 'h': h, 'rep_index': index, 'rep': format_element(rep)}


def transport_text(g: LElement, h: int, index: int, rep: LElement) -> str:
    return f"{format_element(g)} = {format_element(rep)} + {h}*c -> (h={h}, rep #{index})"
