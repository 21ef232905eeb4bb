"""Finite-dimensional Hopf algebras given by structure constants.

Elements are coefficient vectors over the basis e_0..e_{n-1}. The antipode
matrix stores S(e_i) in column i. Δ(e_i) is a list of (j, k, c) triples
meaning Σ c·e_j⊗e_k.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel

from ..linalg.matrix import ONE, ZERO, Matrix, Vector, to_scalar
from ..utils.exceptions import AxiomError

Triple = Tuple[int, int, Fraction]
Tensor2 = Dict[Tuple[int, int], Fraction]
Tensor3 = Dict[Tuple[int, int, int], Fraction]


@dataclass(frozen=True)
class HopfAlgebra:
    basis_names: Tuple[str, ...]
    mult: Tuple[Tuple[Vector, ...], ...]
    unit: Vector
    comult: Tuple[Tuple[Triple, ...], ...]
    counit: Vector
    antipode: Matrix
    name: str = field(default="H", compare=False)

    @property
    def n(self) -> int:
        return len(self.basis_names)

    def __str__(self) -> str:
        return f"{self.name}[{', '.join(self.basis_names)}]"

    # ------------------------------------------------------------------ elements

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.n))

    def zero(self) -> Vector:
        return (ZERO,) * self.n

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def multiply(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
        out = [ZERO] * self.n
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for t, c in enumerate(self.mult[i][j]):
                    if c:
                        out[t] += x * y * c
        return tuple(out)

    def comultiply(self, a: Sequence[Fraction]) -> Tensor2:
        out: Tensor2 = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, k, c in self.comult[i]:
                out[(j, k)] = out.get((j, k), ZERO) + x * c
        return {key: v for key, v in out.items() if v}

    def epsilon(self, a: Sequence[Fraction]) -> Fraction:
        return sum((x * e for x, e in zip(a, self.counit)), ZERO)

    def apply_antipode(self, a: Sequence[Fraction]) -> Vector:
        return self.antipode.apply(a)

    def antipode_squared(self, a: Sequence[Fraction]) -> Vector:
        return self.apply_antipode(self.apply_antipode(a))

    def is_grouplike(self, i: int) -> bool:
        return self.comultiply(self.basis_vector(i)) == {(i, i): ONE} and self.counit[i] == 1


class ValidationReport(BaseModel):
    ok: bool
    failed_axiom: Optional[str] = None
    detail: Optional[str] = None


def _add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _scale(c: Fraction, a: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in a)


def _clean(t: Dict) -> Dict:
    return {k: v for k, v in t.items() if v}


def _delta_tensor_product(h: HopfAlgebra, a: int, b: int) -> Tensor2:
    """Δ(e_a)·Δ(e_b) computed in H⊗H"""
    out: Tensor2 = {}
    for (j1, k1, c1), (j2, k2, c2) in product(h.comult[a], h.comult[b]):
        left = h.mult[j1][j2]
        right = h.mult[k1][k2]
        for s, x in enumerate(left):
            if not x:
                continue
            for t, y in enumerate(right):
                if y:
                    out[(s, t)] = out.get((s, t), ZERO) + c1 * c2 * x * y
    return _clean(out)


def _coassociativity_sides(h: HopfAlgebra, i: int) -> Tuple[Tensor3, Tensor3]:
    left: Tensor3 = {}
    right: Tensor3 = {}
    for j, k, c in h.comult[i]:
        for a, b, d in h.comult[j]:
            left[(a, b, k)] = left.get((a, b, k), ZERO) + c * d
        for a, b, d in h.comult[k]:
            right[(j, a, b)] = right.get((j, a, b), ZERO) + c * d
    return _clean(left), _clean(right)


def _check_shapes(h: HopfAlgebra):
    n = h.n
    if len(h.mult) != n or any(len(row) != n or any(len(v) != n for v in row) for row in h.mult):
        raise AxiomError("shape", "multiplication table must be n×n vectors of length n")
    if len(h.unit) != n or len(h.counit) != n or len(h.comult) != n:
        raise AxiomError("shape", "unit, counit and comultiplication need n entries")
    if h.antipode.shape != (n, n):
        raise AxiomError("shape", f"antipode must be {n}x{n}")
    for i, triples in enumerate(h.comult):
        for j, k, _ in triples:
            if not (0 <= j < n and 0 <= k < n):
                raise AxiomError("shape", f"Δ(e_{i}) refers to a basis index outside 0..{n - 1}")


def _check_axioms(h: HopfAlgebra):
    n = h.n
    basis = [h.basis_vector(i) for i in range(n)]
    names = h.basis_names

    for i, j, k in product(range(n), repeat=3):
        if h.multiply(h.mult[i][j], basis[k]) != h.multiply(basis[i], h.mult[j][k]):
            raise AxiomError("associativity", f"({names[i]}·{names[j]})·{names[k]}")

    for i in range(n):
        if h.multiply(h.unit, basis[i]) != basis[i] or h.multiply(basis[i], h.unit) != basis[i]:
            raise AxiomError("unit", names[i])

    for i in range(n):
        left, right = _coassociativity_sides(h, i)
        if left != right:
            raise AxiomError("coassociativity", names[i])

    for i in range(n):
        delta = h.comultiply(basis[i])
        left = [ZERO] * n
        right = [ZERO] * n
        for (j, k), c in delta.items():
            left[k] += h.counit[j] * c
            right[j] += h.counit[k] * c
        if tuple(left) != basis[i] or tuple(right) != basis[i]:
            raise AxiomError("counit", names[i])

    for i, j in product(range(n), repeat=2):
        if h.comultiply(h.mult[i][j]) != _delta_tensor_product(h, i, j):
            raise AxiomError("bialgebra", f"Δ({names[i]}·{names[j]}) != Δ({names[i]})·Δ({names[j]})")
        if h.epsilon(h.mult[i][j]) != h.counit[i] * h.counit[j]:
            raise AxiomError("bialgebra", f"ε({names[i]}·{names[j]})")

    unit_delta = {}
    for s, x in enumerate(h.unit):
        for t, y in enumerate(h.unit):
            if x and y:
                unit_delta[(s, t)] = x * y
    if h.comultiply(h.unit) != unit_delta or h.epsilon(h.unit) != 1:
        raise AxiomError("bialgebra", "Δ(1) = 1⊗1 and ε(1) = 1")

    for i in range(n):
        left = h.zero()
        right = h.zero()
        for j, k, c in h.comult[i]:
            left = _add(left, _scale(c, h.multiply(h.apply_antipode(basis[j]), basis[k])))
            right = _add(right, _scale(c, h.multiply(basis[j], h.apply_antipode(basis[k]))))
        expected = _scale(h.counit[i], h.unit)
        if left != expected or right != expected:
            raise AxiomError("antipode", f"S({names[i]}_1){names[i]}_2 != ε({names[i]})1")


def validate(h: HopfAlgebra) -> ValidationReport:
    """Check every Hopf axiom exactly; report the first failure"""
    try:
        _check_shapes(h)
        _check_axioms(h)
    except AxiomError as e:
        logger.debug(f"{h}: {e}")
        return ValidationReport(ok=False, failed_axiom=e.axiom, detail=e.detail)
    return ValidationReport(ok=True)


def require_valid(h: HopfAlgebra) -> HopfAlgebra:
    report = validate(h)
    if not report.ok:
        raise AxiomError(report.failed_axiom, report.detail or "")
    return h


# ---------------------------------------------------------------------- builders


def from_tables(
    name: str,
    basis_names: Sequence[str],
    products: Dict[Tuple[str, str], Dict[str, int]],
    coproducts: Dict[str, List[Tuple[str, str, int]]],
    counit: Dict[str, int],
    antipode: Dict[str, Dict[str, int]],
    unit: str = "1",
) -> HopfAlgebra:
    """Build from name-keyed tables; missing products are zero"""
    n = len(basis_names)
    idx = {b: i for i, b in enumerate(basis_names)}

    def vec(coeffs: Dict[str, int]) -> Vector:
        out = [ZERO] * n
        for b, c in coeffs.items():
            out[idx[b]] += to_scalar(c)
        return tuple(out)

    mult = tuple(tuple(vec(products.get((a, b), {})) for b in basis_names) for a in basis_names)
    comult = tuple(
        tuple((idx[j], idx[k], to_scalar(c)) for j, k, c in coproducts[b]) for b in basis_names
    )
    s = Matrix.from_entries(n, n, ((idx[t], idx[b], c) for b in basis_names for t, c in antipode[b].items()))
    return HopfAlgebra(
        basis_names=tuple(basis_names),
        mult=mult,
        unit=vec({unit: 1}),
        comult=comult,
        counit=vec(counit),
        antipode=s,
        name=name,
    )


def group_algebra(order: int) -> HopfAlgebra:
    """kC_n with basis 1, g, ..., g^{n-1}"""
    names = ["1"] + ["g" if k == 1 else f"g^{k}" for k in range(1, order)]
    products = {(names[a], names[b]): {names[(a + b) % order]: 1} for a in range(order) for b in range(order)}
    coproducts = {b: [(b, b, 1)] for b in names}
    antipode = {names[a]: {names[(-a) % order]: 1} for a in range(order)}
    return from_tables(f"kC{order}", names, products, coproducts, {b: 1 for b in names}, antipode)


def sweedler(antipode_sign: int = -1) -> HopfAlgebra:
    """Sweedler's four-dimensional algebra: g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x.

    ``antipode_sign=+1`` gives S(x) = +gx, which violates the antipode axiom.
    """
    names = ["1", "g", "x", "gx"]
    products = {
        ("1", "1"): {"1": 1}, ("1", "g"): {"g": 1}, ("1", "x"): {"x": 1}, ("1", "gx"): {"gx": 1},
        ("g", "1"): {"g": 1}, ("g", "g"): {"1": 1}, ("g", "x"): {"gx": 1}, ("g", "gx"): {"x": 1},
        ("x", "1"): {"x": 1}, ("x", "g"): {"gx": -1},
        ("gx", "1"): {"gx": 1}, ("gx", "g"): {"x": -1},
    }
    coproducts = {
        "1": [("1", "1", 1)],
        "g": [("g", "g", 1)],
        "x": [("x", "1", 1), ("g", "x", 1)],
        "gx": [("gx", "g", 1), ("1", "gx", 1)],
    }
    counit = {"1": 1, "g": 1}
    antipode = {"1": {"1": 1}, "g": {"g": 1}, "x": {"gx": antipode_sign}, "gx": {"x": 1}}
    name = "sweedler4" if antipode_sign == -1 else "sweedler4_bad_antipode"
    return from_tables(name, names, products, coproducts, counit, antipode)
