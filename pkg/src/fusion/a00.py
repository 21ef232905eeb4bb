"""Fusion rules for simple comodules I_{m,n} of a quantum group of type A0|0.

Labels are integer pairs (m, n) with total degree s = m + n. The
superdeterminant D = I_{1,-1} is invertible and D^j = I_{j,-j}; tensoring with
D^j shifts a label componentwise by (j, -j). Every label with s != 0 is
I_{s,0}·D^{-n}, so products reduce to products of I_{a,0} and I_{b,0}.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from loguru import logger

from ..utils.exceptions import InvalidParameterError


@dataclass(frozen=True, order=True)
class SimpleLabel:
    m: int
    n: int

    @property
    def total_degree(self) -> int:
        return self.m + self.n

    def __str__(self) -> str:
        return f"({self.m},{self.n})"

    def as_pair(self) -> List[int]:
        return [self.m, self.n]


def superdeterminant_power(j: int) -> SimpleLabel:
    """D^j = I_{j,-j}"""
    return SimpleLabel(j, -j)


def twist(label: SimpleLabel, j: int) -> SimpleLabel:
    """label · D^j"""
    return SimpleLabel(label.m + j, label.n - j)


def dual(label: SimpleLabel) -> SimpleLabel:
    return SimpleLabel(-label.m, -label.n)


def is_splitting(label: SimpleLabel) -> bool:
    return label.total_degree != 0


def dim(label: SimpleLabel) -> int:
    return 2 if is_splitting(label) else 1


class K0Element:
    """Finitely supported integer combination of simple labels"""

    def __init__(self, terms: Optional[Mapping[SimpleLabel, int]] = None):
        self._terms: Dict[SimpleLabel, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def of(cls, *labels: SimpleLabel) -> "K0Element":
        return cls(Counter(labels))

    def items(self) -> Iterator[Tuple[SimpleLabel, int]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (-kv[0].total_degree, -kv[0].m)))

    def multiplicity(self, label: SimpleLabel) -> int:
        return self._terms.get(label, 0)

    def support(self) -> List[SimpleLabel]:
        return [label for label, _ in self.items()]

    def dimension(self) -> int:
        return sum(c * dim(label) for label, c in self._terms.items())

    def dual(self) -> "K0Element":
        return K0Element({dual(label): c for label, c in self._terms.items()})

    def __add__(self, other: "K0Element") -> "K0Element":
        terms = dict(self._terms)
        for label, c in other._terms.items():
            terms[label] = terms.get(label, 0) + c
        return K0Element(terms)

    def __rmul__(self, c: int) -> "K0Element":
        return K0Element({label: c * v for label, v in self._terms.items()})

    def __mul__(self, other: "K0Element") -> "K0Element":
        return k0_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, K0Element) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_dict(self) -> Dict[SimpleLabel, int]:
        return dict(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_format_term(label, c) for label, c in self.items())

    __repr__ = __str__


def _format_term(label: SimpleLabel, multiplicity: int) -> str:
    return str(label) if multiplicity == 1 else f"{multiplicity}·{label}"


class DecompositionKind(str, Enum):
    SEMISIMPLE = "semisimple"
    INDECOMPOSABLE_INJECTIVE = "indecomposable_injective"


@dataclass(frozen=True)
class TensorDecomposition:
    kind: DecompositionKind
    # semisimple: the summands; injective: composition factors, socle first
    terms: Tuple[Tuple[SimpleLabel, int], ...]
    socle: Optional[SimpleLabel] = None

    @property
    def factors(self) -> K0Element:
        return K0Element(dict(self.terms))

    def dimension(self) -> int:
        return sum(c * dim(label) for label, c in self.terms)

    def __str__(self) -> str:
        if self.kind == DecompositionKind.SEMISIMPLE:
            return " + ".join(_format_term(label, c) for label, c in self.terms)
        factors = "+".join(_format_term(label, c) for label, c in self.terms)
        return f"INDEC-INJ socle {self.socle}; factors {factors}"

    def to_json(self) -> Dict:
        out = {
            "kind": self.kind.value,
            "terms": [[label.m, label.n, c] for label, c in self.terms],
        }
        if self.socle is not None:
            out["socle"] = self.socle.as_pair()
        return out


def _untwisted_product(a: int, b: int) -> List[SimpleLabel]:
    """I_{a,0}·I_{b,0} for a, b != 0 and a + b != 0"""
    s = a + b
    if a > 0 and b > 0:
        return [SimpleLabel(s, 0), SimpleLabel(s - 1, 1)]
    if a < 0 and b < 0:
        return [SimpleLabel(s, 0), SimpleLabel(s + 1, -1)]
    # mixed signs; the negative total degree case is the dual of the positive one
    if s > 0:
        return [SimpleLabel(s, 0), SimpleLabel(s + 1, -1)]
    return [SimpleLabel(s, 0), SimpleLabel(s - 1, 1)]


def tensor(x: SimpleLabel, y: SimpleLabel) -> TensorDecomposition:
    s1, s2 = x.total_degree, y.total_degree
    if s1 == 0 or s2 == 0:
        # one factor is a power of the superdeterminant
        return TensorDecomposition(DecompositionKind.SEMISIMPLE, ((SimpleLabel(x.m + y.m, x.n + y.n), 1),))
    j = -(x.n + y.n)
    if s1 + s2 == 0:
        socle = superdeterminant_power(j)
        terms = ((socle, 2), (superdeterminant_power(j + 1), 1), (superdeterminant_power(j - 1), 1))
        return TensorDecomposition(DecompositionKind.INDECOMPOSABLE_INJECTIVE, terms, socle=socle)
    terms = tuple((twist(label, j), 1) for label in _untwisted_product(s1, s2))
    return TensorDecomposition(DecompositionKind.SEMISIMPLE, terms)


def k0_mul(x: K0Element, y: K0Element) -> K0Element:
    """Bilinear extension of tensor on composition factors"""
    terms: Counter = Counter()
    for (a, ca), (b, cb) in product(x.items(), y.items()):
        for label, c in tensor(a, b).terms:
            terms[label] += ca * cb * c
    return K0Element(terms)


def fundamental() -> SimpleLabel:
    """V = I_{1,0}"""
    return SimpleLabel(1, 0)


def tensor_power_multiplicities(n: int) -> Dict[SimpleLabel, int]:
    """Multiplicities of the simple composition factors of V^{⊗n}"""
    if n < 1:
        raise InvalidParameterError(f"tensor power needs n >= 1, got {n}")
    v = K0Element.of(fundamental())
    power = v
    for _ in range(n - 1):
        power = k0_mul(power, v)
    return power.to_dict()


@dataclass(frozen=True)
class FusionRow:
    x: SimpleLabel
    y: SimpleLabel
    decomposition: TensorDecomposition
    dimension_ok: bool = field(default=True)


def fusion_table(bound: int) -> Iterable[FusionRow]:
    """All products with |m|, |n|, |p|, |q| <= bound, each dimension-checked"""
    if bound < 0:
        raise InvalidParameterError(f"range must be non-negative, got {bound}")
    span = range(-bound, bound + 1)
    failures = 0
    for m, n, p, q in product(span, span, span, span):
        x, y = SimpleLabel(m, n), SimpleLabel(p, q)
        decomposition = tensor(x, y)
        ok = decomposition.dimension() == dim(x) * dim(y)
        if not ok:
            failures += 1
            logger.error(f"dimension check fails for {x}⊗{y}: {decomposition}")
        yield FusionRow(x, y, decomposition, ok)
    logger.debug(f"fusion table |K|<={bound}: {failures} dimension failures")
