"""
The rank one grading group L(p) = <x_1..x_n, c> / (p_i x_i - c).

Elements are kept in normal form sum a_i x_i + ell c with 0 <= a_i < p_i.
"""

import re
from dataclasses import dataclass
from math import prod
from itertools import combinations, product
from typing import List, Sequence, Tuple, Union

from src.errors import InputError

Weights = Tuple[int, ...]


def _weights(t) -> Weights:
    if hasattr(t, 'weights'):
        return tuple(t.weights)
    return tuple(t)


@dataclass(frozen=True)
class LElement:
    a: Tuple[int, ...]
    ell: int
    weights: Weights

    @property
    def n(self) -> int:
        return len(self.a)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.ell, self.a)

    def raw(self) -> Tuple[int, ...]:
        """The integer word (a_1, ..., a_n, ell)."""
        return self.a + (self.ell,)

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, ai in enumerate(self.a) if ai > 0)

    def __add__(self, other: 'LElement') -> 'LElement':
        return group_op(self, other, 1)

    def __sub__(self, other: 'LElement') -> 'LElement':
        return group_op(self, other, -1)

    def __neg__(self) -> 'LElement':
        return normal_form([-v for v in self.raw()], self.weights)

    def __mul__(self, k: int) -> 'LElement':
        return normal_form([k * v for v in self.raw()], self.weights)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_element(self)


def normal_form(raw: Sequence[int], t) -> LElement:
    """Reduce the word sum b_i x_i + m c; floor division keeps 0 <= a_i < p_i."""
    p = _weights(t)
    raw = list(raw)
    if len(raw) != len(p) + 1:
        raise InputError(f"word has {len(raw)} entries, expected n+1={len(p) + 1}")
    ell = raw[-1]
    a = []
    for b, pi in zip(raw[:-1], p):
        q, r = divmod(b, pi)
        a.append(r)
        ell += q
    return LElement(a=tuple(a), ell=ell, weights=p)


def group_op(x: LElement, y: LElement, sign: int = 1) -> LElement:
    if x.weights != y.weights:
        raise InputError(f"elements of different groups L{x.weights} and L{y.weights}")
    if sign not in (1, -1):
        raise InputError(f"sign must be +1 or -1, got {sign}")
    return normal_form([u + sign * v for u, v in zip(x.raw(), y.raw())], x.weights)


def zero(t) -> LElement:
    p = _weights(t)
    return LElement(a=(0,) * len(p), ell=0, weights=p)


def generator(i: int, t) -> LElement:
    """x_{i+1} (0-based index)."""
    p = _weights(t)
    if not 0 <= i < len(p):
        raise InputError(f"generator index {i + 1} out of range 1..{len(p)}")
    raw = [0] * (len(p) + 1)
    raw[i] = 1
    return normal_form(raw, p)


def canonical(t, ell: int = 1) -> LElement:
    """ell * c."""
    p = _weights(t)
    return LElement(a=(0,) * len(p), ell=ell, weights=p)


def is_effective(x: LElement) -> bool:
    return x.ell >= 0


def leq(x: LElement, y: LElement) -> bool:
    return is_effective(y - x)


def in_interval(x: LElement, d: int) -> bool:
    return x.ell >= 0 and x.ell + len(x.support()) <= d


def interval(t) -> List[LElement]:
    """[0, dc] in graded-lex order by (ell, a)."""
    d = t.d
    p = _weights(t)
    elements = []
    for a in product(*(range(pi) for pi in p)):
        nonzero = sum(1 for ai in a if ai > 0)
        for ell in range(0, d - nonzero + 1):
            elements.append(LElement(a=tuple(a), ell=ell, weights=p))
    return sorted(elements, key=LElement.sort_key)


def elementary_symmetric(values: Sequence[int], m: int) -> int:
    return sum(prod(c) for c in combinations(values, m))


def interval_size(t) -> int:
    """Closed form sum_m (d-m+1) e_m(p_1-1, ..., p_n-1)."""
    q = [pi - 1 for pi in _weights(t)]
    return sum((t.d - m + 1) * elementary_symmetric(q, m) for m in range(0, min(t.d, len(q)) + 1))


def format_element(x: LElement) -> str:
    terms = []
    for i, ai in enumerate(x.a):
        if ai:
            terms.append(f"x{i + 1}" if ai == 1 else f"{ai}*x{i + 1}")
    if x.ell:
        if x.ell == 1:
            terms.append("c")
        elif x.ell == -1:
            terms.append("-c")
        else:
            terms.append(f"{x.ell}*c")
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


_TERM = re.compile(r'([+-]?)\s*(\d*)\s*\*?\s*(x(\d+)|c)?')


def parse_element(text: str, t) -> LElement:
    """Inverse of format_element; also accepts '2x1', 'x1 - c', '-3*c'."""
    p = _weights(t)
    raw = [0] * (len(p) + 1)
    s = text.replace(" ", "")
    if s in ("", "0"):
        return zero(p)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) == "" and m.group(3) is None):
            raise InputError(f"cannot parse group element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3) is None:
            # bare integer: multiple of c is not implied, reject
            raise InputError(f"cannot parse group element {text!r}")
        if m.group(3) == "c":
            raw[-1] += sign * coef
        else:
            i = int(m.group(4)) - 1
            if not 0 <= i < len(p):
                raise InputError(f"x{i + 1} out of range in {text!r}")
            raw[i] += sign * coef
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise InputError(f"cannot parse group element {text!r}")
    return normal_form(raw, p)


def coerce(value: Union[LElement, str, Sequence[int]], t) -> LElement:
    if isinstance(value, LElement):
        return value
    if isinstance(value, str):
        return parse_element(value, t)
    return normal_form(value, t)
