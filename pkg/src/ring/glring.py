"""
The L-graded ring R = k[T, X] / (X_i^p_i - l_i(T)).

Elements are stored in the reduced monomial basis X^a T^e with 0 <= a_i < p_i.
Rewriting X_i^p_i -> l_i(T) is confluent since the substitutes have no X.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from src.algebra.linalg import fstr
from src.errors import InputError
from src.geometry.gltype import GLType
from src.geometry.projcohom import h
from src.grading.lgroup import LElement

Exponents = Tuple[int, ...]
TPoly = Dict[Exponents, Fraction]


@dataclass(frozen=True, order=True)
class ReducedMonomial:
    xexp: Exponents
    texp: Exponents

    def degree(self, t: GLType) -> LElement:
        return LElement(a=self.xexp, ell=sum(self.texp), weights=tuple(t.weights))

    def __str__(self) -> str:
        return _monomial_str(self.xexp, self.texp)


def _monomial_str(xexp: Exponents, texp: Exponents) -> str:
    factors = []
    for i, e in enumerate(xexp):
        if e:
            factors.append(f"X{i + 1}" if e == 1 else f"X{i + 1}^{e}")
    for j, e in enumerate(texp):
        if e:
            factors.append(f"T{j}" if e == 1 else f"T{j}^{e}")
    return "*".join(factors) if factors else "1"


def _format_terms(items) -> str:
    if not items:
        return "0"
    out = []
    for k, (mono, coef) in enumerate(items):
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        if mono == "1":
            body = fstr(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{fstr(mag)}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def compositions(total: int, parts: int) -> List[Exponents]:
    """All exponent vectors of length parts summing to total, T0 first (descending lex)."""
    if total < 0:
        return []
    result = []
    for combo in combinations_with_replacement(range(parts), total):
        exps = [0] * parts
        for j in combo:
            exps[j] += 1
        result.append(tuple(exps))
    return sorted(result, reverse=True)


def _tmul(f: TPoly, g: TPoly) -> TPoly:
    out: TPoly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


class Polynomial:
    """A formal polynomial in T_0..T_d, X_1..X_n with no relations applied."""

    def __init__(self, t: GLType, terms: Optional[Dict[Tuple[Exponents, Exponents], Fraction]] = None):
        self.type = t
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, t: GLType, value=1) -> 'Polynomial':
        return cls(t, {((0,) * t.n, (0,) * (t.d + 1)): Fraction(value)})

    @classmethod
    def X(cls, i: int, t: GLType) -> 'Polynomial':
        if not 0 <= i < t.n:
            raise InputError(f"X{i + 1} out of range")
        xexp = tuple(1 if k == i else 0 for k in range(t.n))
        return cls(t, {(xexp, (0,) * (t.d + 1)): Fraction(1)})

    @classmethod
    def T(cls, j: int, t: GLType) -> 'Polynomial':
        if not 0 <= j <= t.d:
            raise InputError(f"T{j} out of range")
        texp = tuple(1 if k == j else 0 for k in range(t.d + 1))
        return cls(t, {((0,) * t.n, texp): Fraction(1)})

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return Polynomial(self.type, terms)

    def __neg__(self) -> 'Polynomial':
        return Polynomial(self.type, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return self + (-other)

    def __mul__(self, other) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return Polynomial(self.type, {k: v * Fraction(other) for k, v in self.terms.items()})
        terms: Dict[Tuple[Exponents, Exponents], Fraction] = {}
        for (x1, t1), c1 in self.terms.items():
            for (x2, t2), c2 in other.terms.items():
                key = (tuple(a + b for a, b in zip(x1, x2)), tuple(a + b for a, b in zip(t1, t2)))
                terms[key] = terms.get(key, 0) + c1 * c2
        return Polynomial(self.type, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Polynomial':
        result = Polynomial.constant(self.type)
        for _ in range(k):
            result = result * self
        return result

    def __str__(self) -> str:
        items = [(_monomial_str(x, e), c) for (x, e), c in sorted(self.terms.items(), reverse=True)]
        return _format_terms(items)


class RingElement:
    def __init__(self, ring: 'GLRing', terms: Optional[Dict[ReducedMonomial, Fraction]] = None):
        self.ring = ring
        self.terms: Dict[ReducedMonomial, Fraction] = {
            m: Fraction(c) for m, c in (terms or {}).items() if c != 0
        }

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[LElement]:
        t = self.ring.type
        return sorted({m.degree(t) for m in self.terms}, key=LElement.sort_key)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[LElement]:
        degrees = self.degrees()
        if len(degrees) > 1:
            raise InputError(f"element {self} is not homogeneous")
        return degrees[0] if degrees else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring.type == other.ring.type and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: 'RingElement') -> 'RingElement':
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return RingElement(self.ring, terms)

    def __neg__(self) -> 'RingElement':
        return RingElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'RingElement') -> 'RingElement':
        return self + (-other)

    def __mul__(self, other) -> 'RingElement':
        if isinstance(other, RingElement):
            return self.ring.multiply(self, other)
        return RingElement(self.ring, {m: c * Fraction(other) for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'RingElement':
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __str__(self) -> str:
        return _format_terms([(str(m), c) for m, c in sorted(self.terms.items(), reverse=True)])

    def __repr__(self) -> str:
        return f"RingElement({self})"


class GLRing:
    def __init__(self, t: GLType):
        self.type = t
        self.weights = tuple(t.weights)
        self.d = t.d
        self.n = t.n
        self._linear_forms: List[TPoly] = []
        for row in t.hyperplanes:
            form: TPoly = {}
            for j, coef in enumerate(row):
                if coef:
                    form[tuple(1 if k == j else 0 for k in range(t.d + 1))] = Fraction(coef)
            self._linear_forms.append(form)
        self._powers: Dict[Tuple[int, int], TPoly] = {}

    def _form_power(self, i: int, q: int) -> TPoly:
        key = (i, q)
        if key not in self._powers:
            result: TPoly = {(0,) * (self.d + 1): Fraction(1)}
            for _ in range(q):
                result = _tmul(result, self._linear_forms[i])
            self._powers[key] = result
        return self._powers[key]

    def _reduce_term(self, xexp: Exponents, texp: Exponents, coef: Fraction,
                     out: Dict[ReducedMonomial, Fraction]):
        if len(xexp) != self.n or len(texp) != self.d + 1:
            raise InputError("exponent vector has wrong length")
        if any(e < 0 for e in xexp) or any(e < 0 for e in texp):
            raise InputError("negative exponent")
        remainder = []
        tpart: TPoly = {texp: coef}
        for i, (b, p) in enumerate(zip(xexp, self.weights)):
            q, r = divmod(b, p)
            remainder.append(r)
            if q:
                tpart = _tmul(tpart, self._form_power(i, q))
        rem = tuple(remainder)
        for e, c in tpart.items():
            key = ReducedMonomial(rem, e)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)

    def reduce(self, poly: Polynomial) -> RingElement:
        out: Dict[ReducedMonomial, Fraction] = {}
        for (xexp, texp), coef in poly.terms.items():
            self._reduce_term(xexp, texp, coef, out)
        return RingElement(self, out)

    def multiply(self, f: RingElement, g: RingElement) -> RingElement:
        if f.ring.type != self.type or g.ring.type != self.type:
            raise InputError("ring elements of different types")
        out: Dict[ReducedMonomial, Fraction] = {}
        for m1, c1 in f.terms.items():
            for m2, c2 in g.terms.items():
                xexp = tuple(a + b for a, b in zip(m1.xexp, m2.xexp))
                texp = tuple(a + b for a, b in zip(m1.texp, m2.texp))
                self._reduce_term(xexp, texp, c1 * c2, out)
        return RingElement(self, out)

    def one(self) -> RingElement:
        return self.monomial(ReducedMonomial((0,) * self.n, (0,) * (self.d + 1)))

    def monomial(self, m: ReducedMonomial, coef=1) -> RingElement:
        return RingElement(self, {m: Fraction(coef)})

    def x(self, i: int) -> RingElement:
        return self.reduce(Polynomial.X(i, self.type))

    def t(self, j: int) -> RingElement:
        return self.reduce(Polynomial.T(j, self.type))

    def linear_form(self, i: int) -> RingElement:
        return RingElement(self, {ReducedMonomial((0,) * self.n, e): c
                                  for e, c in self._linear_forms[i].items()})

    def monomial_basis(self, g: LElement) -> List[ReducedMonomial]:
        if g.weights != self.weights:
            raise InputError(f"degree {g} does not belong to L{self.weights}")
        if g.ell < 0:
            return []
        return [ReducedMonomial(g.a, texp) for texp in compositions(g.ell, self.d + 1)]

    def hilbert(self, g: LElement) -> int:
        return hilbert(g, self.type)


@lru_cache(maxsize=64)
def ring_for(t: GLType) -> GLRing:
    return GLRing(t)


def reduce(poly: Polynomial, t: GLType) -> RingElement:
    return ring_for(t).reduce(poly)


def multiply(f: RingElement, g: RingElement) -> RingElement:
    return f.ring.multiply(f, g)


def monomial_basis(g: LElement, t: GLType) -> List[ReducedMonomial]:
    return ring_for(t).monomial_basis(g)


def hilbert(g: LElement, t: GLType) -> int:
    """dim R_g = C(ell + d, d) for ell >= 0."""
    return h(0, g.ell, t.d)
