"""
Bookkeeping model of the GL order Lambda = T_p1(O, O(-L_1)) (x) ... (x) T_pn(O, O(-L_n)).

Entries of Lambda and of the modules P(x) are line bundles O(m + sum tw_i L_i);
multi-indices are 1-based, matching matrix positions.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Sequence, Tuple, Union

from src.errors import InputError
from src.geometry.gltype import GLType, check_stratum, require_valid
from src.grading.lgroup import LElement

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class DivisorTwist:
    m: int
    tw: Tuple[int, ...]

    @property
    def total(self) -> int:
        # O(L_i) is O(1) for cohomology
        return self.m + sum(self.tw)

    def __add__(self, other: 'DivisorTwist') -> 'DivisorTwist':
        return DivisorTwist(self.m + other.m, tuple(a + b for a, b in zip(self.tw, other.tw)))

    def __str__(self) -> str:
        parts = []
        if self.m:
            parts.append(str(self.m))
        for i, k in enumerate(self.tw):
            if k == 1:
                parts.append(f"L{i + 1}")
            elif k == -1:
                parts.append(f"-L{i + 1}")
            elif k:
                parts.append(f"{k}L{i + 1}")
        if not parts:
            return "O"
        body = parts[0] + "".join(p if p.startswith("-") else "+" + p for p in parts[1:])
        return f"O({body})"


@dataclass
class ColumnBundle:
    entries: Dict[MultiIndex, DivisorTwist] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def top(self) -> DivisorTwist:
        return self.entries[(1,) * len(next(iter(self.entries)))]

    def to_dict(self) -> dict:
        return {
            'rank': self.rank,
            'entries': [{'index': list(j), 'm': e.m, 'tw': list(e.tw)}
                        for j, e in sorted(self.entries.items())],
        }


@dataclass
class LocalType:
    stratum: Tuple[int, ...]
    weights: List[int]
    global_dimension: int

    @property
    def morita_trivial(self) -> bool:
        return not self.weights


def multi_indices(t: GLType) -> List[MultiIndex]:
    return list(product(*(range(1, p + 1) for p in t.weights)))


def _check_index(j: Sequence[int], t: GLType) -> MultiIndex:
    j = tuple(j)
    if len(j) != t.n or any(not 1 <= ji <= p for ji, p in zip(j, t.weights)):
        raise InputError(f"multi-index {list(j)} out of range for weights {list(t.weights)}")
    return j


def order_entry(j: Sequence[int], k: Sequence[int], t: GLType) -> DivisorTwist:
    """Entry (j, k) of Lambda: O(-L_i) above the diagonal of factor i, O otherwise."""
    j = _check_index(j, t)
    k = _check_index(k, t)
    return DivisorTwist(0, tuple(-1 if ji < ki else 0 for ji, ki in zip(j, k)))


def composite_entry(j: Sequence[int], via: Sequence[int], k: Sequence[int], t: GLType) -> DivisorTwist:
    """Twist of the product Lambda_(j,via) * Lambda_(via,k)."""
    return order_entry(j, via, t) + order_entry(via, k, t)


def twisted_column(x: Union[LElement, Sequence[int]], t: GLType) -> ColumnBundle:
    """P(x) entrywise.

    Factor i of J_i^b (x) P_i is column ((-b) mod p_i) + 1 of Lambda_i twisted by
    ceil(b/p_i) L_i; x may be a normal form or any raw word sum b_i x_i + m c.
    """
    raw = x.raw() if isinstance(x, LElement) else tuple(x)
    if len(raw) != t.n + 1:
        raise InputError(f"word has {len(raw)} entries, expected n+1={t.n + 1}")
    b, m = raw[:-1], raw[-1]
    columns = [(-bi) % p + 1 for bi, p in zip(b, t.weights)]
    ceilings = [-((-bi) // p) for bi, p in zip(b, t.weights)]
    entries = {}
    for j in multi_indices(t):
        tw = tuple(ceil - (1 if ji < col else 0) for ji, col, ceil in zip(j, columns, ceilings))
        entries[j] = DivisorTwist(m, tw)
    return ColumnBundle(entries)


def top_entry(x: Union[LElement, Sequence[int]], t: GLType) -> int:
    """Degree of e P(x): sum_i floor(b_i/p_i) + m."""
    raw = x.raw() if isinstance(x, LElement) else tuple(x)
    if len(raw) != t.n + 1:
        raise InputError(f"word has {len(raw)} entries, expected n+1={t.n + 1}")
    return sum(bi // p for bi, p in zip(raw[:-1], t.weights)) + raw[-1]


def local_type(s: Sequence[int], t: GLType) -> LocalType:
    """Local Morita type of Lambda at a point of the open stratum of s (0-based indices)."""
    require_valid(t)
    subset = check_stratum(s, t)
    return LocalType(stratum=subset, weights=[t.weights[i] for i in subset], global_dimension=t.d)
