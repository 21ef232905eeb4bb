"""Right comodules over a finite-dimensional Hopf algebra.

ρ(v_i) = Σ c·v_j⊗e_h is stored as (j, h, c) triples. A right H-comodule is a
left module over the dual algebra H* through φ⇀v = v₀·φ(v₁); the matrix of
the dual basis element e^h is ``action_matrices(h, m)[h]``. Simplicity,
Hom spaces and projectivity are all computed on that module.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from sympy import Poly, Rational, Symbol

from ..linalg.matrix import (
    ONE,
    ZERO,
    Matrix,
    SparseRow,
    Vector,
    kernel_basis,
    rank,
    solve,
    span_basis,
    sparse_kernel_basis,
    to_scalar,
)
from ..utils.config import get_settings
from ..utils.exceptions import AlgebraError, DegreeCapError, InconsistentSystemError, NotSimpleError
from .algebra import HopfAlgebra, ValidationReport
from .integrals import IntegralFunctional, left_integral

CoactionTriple = Tuple[int, int, Fraction]


@dataclass(frozen=True)
class Comodule:
    dim: int
    coaction: Tuple[Tuple[CoactionTriple, ...], ...]
    name: str = field(default="M", compare=False)

    def __str__(self) -> str:
        return f"{self.name}(dim={self.dim})"


@dataclass(frozen=True)
class CoefficientSpace:
    basis: Tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def make_comodule(dim: int, coaction: Iterable[Iterable[Tuple[int, int, object]]], name: str = "M") -> Comodule:
    """Canonical form: duplicate (j, h) pairs merged, zeros dropped, triples sorted"""
    canonical = []
    for triples in coaction:
        merged: Dict[Tuple[int, int], Fraction] = {}
        for j, t, c in triples:
            merged[(j, t)] = merged.get((j, t), ZERO) + to_scalar(c)
        canonical.append(tuple((j, t, c) for (j, t), c in sorted(merged.items()) if c))
    if len(canonical) != dim:
        raise AlgebraError(f"coaction lists {len(canonical)} vectors for a {dim}-dimensional comodule")
    return Comodule(dim, tuple(canonical), name=name)


# ---------------------------------------------------------------------- validation


def validate_comodule(h: HopfAlgebra, m: Comodule) -> ValidationReport:
    n = h.n
    for i, triples in enumerate(m.coaction):
        for j, t, _ in triples:
            if not (0 <= j < m.dim and 0 <= t < n):
                return ValidationReport(ok=False, failed_axiom="shape", detail=f"ρ(v_{i}) has index ({j}, {t})")

    for i, triples in enumerate(m.coaction):
        counit = [ZERO] * m.dim
        left: Dict[Tuple[int, int, int], Fraction] = {}
        right: Dict[Tuple[int, int, int], Fraction] = {}
        for j, t, c in triples:
            counit[j] += c * h.counit[t]
            for a, s, d in m.coaction[j]:
                left[(a, s, t)] = left.get((a, s, t), ZERO) + c * d
            for s, u, d in h.comult[t]:
                right[(j, s, u)] = right.get((j, s, u), ZERO) + c * d
        if tuple(counit) != tuple(ONE if k == i else ZERO for k in range(m.dim)):
            return ValidationReport(ok=False, failed_axiom="comodule_counit", detail=f"v_{i}")
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            return ValidationReport(ok=False, failed_axiom="comodule_coassociativity", detail=f"v_{i}")
    return ValidationReport(ok=True)


def _checked(h: HopfAlgebra, m: Comodule) -> Comodule:
    report = validate_comodule(h, m)
    if not report.ok:
        raise AlgebraError(f"{m} is not an {h.name}-comodule: {report.failed_axiom} ({report.detail})")
    return m


# ---------------------------------------------------------------------- constructors


def trivial_comodule(h: HopfAlgebra) -> Comodule:
    """k with ρ(v) = v⊗1"""
    return make_comodule(1, [[(0, t, u) for t, u in enumerate(h.unit) if u]], name="trivial")


def character_comodule(h: HopfAlgebra, index: int) -> Comodule:
    """k with ρ(v) = v⊗g for a grouplike basis element g"""
    if not h.is_grouplike(index):
        raise AlgebraError(f"{h.basis_names[index]} is not grouplike in {h}")
    return make_comodule(1, [[(0, index, ONE)]], name=f"M_{h.basis_names[index]}")


def regular_comodule(h: HopfAlgebra) -> Comodule:
    """H coacting on itself by Δ"""
    return make_comodule(h.n, h.comult, name=f"regular({h.name})")


def simple_comodules(h: HopfAlgebra) -> List[Comodule]:
    """The characters of the grouplike basis elements.

    These are all the simple comodules when the coradical is spanned by
    grouplike basis elements. Functions on a nonabelian group have simples of
    higher dimension that this does not list.
    """
    return [character_comodule(h, i) for i in range(h.n) if h.is_grouplike(i)]


def dual_comodule(h: HopfAlgebra, m: Comodule) -> Comodule:
    """Left dual M* with ρ(φ)(x) = φ(x₀)·S(x₁)"""
    coaction: List[List[CoactionTriple]] = [[] for _ in range(m.dim)]
    for i, triples in enumerate(m.coaction):
        for a, t, c in triples:
            for s, w in enumerate(h.antipode.column(t)):
                if w:
                    coaction[a].append((i, s, c * w))
    return _checked(h, make_comodule(m.dim, coaction, name=f"{m.name}*"))


def double_dual(h: HopfAlgebra, m: Comodule) -> Comodule:
    """M** with ρ(v) = v₀⊗S²(v₁)"""
    coaction = []
    for triples in m.coaction:
        out = []
        for j, t, c in triples:
            for s, w in enumerate(h.antipode_squared(h.basis_vector(t))):
                if w:
                    out.append((j, s, c * w))
        coaction.append(out)
    return _checked(h, make_comodule(m.dim, coaction, name=f"{m.name}**"))


# ---------------------------------------------------------------------- H*-module structure


def action_matrices(h: HopfAlgebra, m: Comodule) -> List[Matrix]:
    """A_t[j][i] = coefficient of v_j⊗e_t in ρ(v_i), i.e. the action of e^t"""
    entries: List[List[Tuple[int, int, Fraction]]] = [[] for _ in range(h.n)]
    for i, triples in enumerate(m.coaction):
        for j, t, c in triples:
            entries[t].append((j, i, c))
    return [Matrix.from_entries(m.dim, m.dim, e) for e in entries]


def hit(h: HopfAlgebra, m: Comodule, phi: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    """φ⇀v = v₀·φ(v₁)"""
    out = [ZERO] * m.dim
    for i, x in enumerate(v):
        if not x:
            continue
        for j, t, c in m.coaction[i]:
            out[j] += x * c * phi[t]
    return tuple(out)


def coefficient_space(h: HopfAlgebra, m: Comodule) -> CoefficientSpace:
    """Span of the matrix coefficients of ρ inside H"""
    coefficients: Dict[Tuple[int, int], List[Fraction]] = {}
    for i, triples in enumerate(m.coaction):
        for j, t, c in triples:
            coefficients.setdefault((j, i), [ZERO] * h.n)[t] += c
    basis = span_basis([tuple(v) for v in coefficients.values()])
    logger.debug(f"{m}: coefficient space of dimension {len(basis)}")
    return CoefficientSpace(tuple(basis))


def _intertwiner_rows(first: Sequence[Matrix], second: Sequence[Matrix], d1: int, d2: int) -> List[SparseRow]:
    """T·A¹ = A²·T for each pair, T a d2×d1 matrix flattened row-major"""
    rows: List[SparseRow] = []
    for a1, a2 in zip(first, second):
        for r in range(d2):
            for i in range(d1):
                row: SparseRow = {}
                for k in range(d1):
                    v = a1[k, i]
                    if v:
                        row[r * d1 + k] = row.get(r * d1 + k, ZERO) + v
                for k in range(d2):
                    v = a2[r, k]
                    if v:
                        row[k * d1 + i] = row.get(k * d1 + i, ZERO) - v
                row = {key: value for key, value in row.items() if value}
                if row:
                    rows.append(row)
    return rows


def hom_basis(h: HopfAlgebra, m1: Comodule, m2: Comodule) -> List[Matrix]:
    """Comodule maps m1 -> m2 as d2×d1 matrices"""
    rows = _intertwiner_rows(action_matrices(h, m1), action_matrices(h, m2), m1.dim, m2.dim)
    return [Matrix(m2.dim, m1.dim, v) for v in sparse_kernel_basis(rows, m1.dim * m2.dim)]


def hom_dim(h: HopfAlgebra, m1: Comodule, m2: Comodule) -> int:
    return len(hom_basis(h, m1, m2))


def is_isomorphic(
    h: HopfAlgebra, m1: Comodule, m2: Comodule, seed: Optional[int] = None, attempts: Optional[int] = None
) -> bool:
    """Search for an invertible comodule map.

    Random integer combinations of a basis of Hom(m1, m2) are tried; for simple
    comodules any nonzero map is an isomorphism, so the answer is exact there.
    """
    if m1.dim != m2.dim:
        return False
    maps = hom_basis(h, m1, m2)
    if not maps:
        return False
    if m1.dim == 0:
        return True
    settings = get_settings()
    rng = np.random.default_rng(settings.RANDOM_SEED if seed is None else seed)
    for _ in range(attempts or settings.NORTON_ATTEMPTS):
        combo = Matrix.zeros(m1.dim, m1.dim)
        for coeff, t in zip(rng.integers(-5, 6, size=len(maps)), maps):
            combo = combo + t.scale(int(coeff))
        if combo.det() != 0:
            return True
    return False


# ---------------------------------------------------------------------- simplicity


def _spin(vector: Sequence[Fraction], generators: Sequence[Matrix]) -> int:
    """Dimension of the smallest subspace containing vector and stable under generators"""
    basis: List[Vector] = []
    queue = [tuple(vector)]
    while queue:
        v = queue.pop()
        if not any(v):
            continue
        candidate = basis + [v]
        if rank(Matrix.from_columns(candidate)) > len(basis):
            basis = candidate
            queue.extend(g.apply(v) for g in generators)
    return len(basis)


def _enveloping_basis(generators: Sequence[Matrix], dim: int) -> List[Matrix]:
    """Basis of the unital algebra generated by the given matrices"""
    basis: List[Matrix] = []
    queue = [Matrix.identity(dim), *generators]
    while queue:
        a = queue.pop()
        if a.is_zero():
            continue
        candidate = basis + [a]
        if rank(Matrix.from_columns([b.entries for b in candidate])) > len(basis):
            basis = candidate
            queue.extend(a @ g for g in generators)
    return basis


def _poly_at(coefficients: Sequence[Fraction], a: Matrix) -> Matrix:
    """Horner evaluation, leading coefficient first"""
    result = Matrix.zeros(a.rows, a.cols)
    ident = Matrix.identity(a.rows)
    for c in coefficients:
        result = result @ a + ident.scale(c)
    return result


def _factors(coefficients: Sequence[Fraction]) -> List[List[Fraction]]:
    t = Symbol("t")
    poly = Poly([Rational(c.numerator, c.denominator) for c in coefficients], t, domain="QQ")
    _, factors = poly.factor_list()
    return sorted(([to_scalar(c) for c in p.all_coeffs()] for p, _ in factors), key=len)


def is_simple(
    h: HopfAlgebra,
    m: Comodule,
    seed: Optional[int] = None,
    attempts: Optional[int] = None,
    max_dim: Optional[int] = None,
) -> bool:
    """Norton's irreducibility test on the H*-module M.

    A random element a of the algebra generated by the action matrices is
    drawn and its characteristic polynomial factored over Q. For a factor p
    with dim ker p(a) = deg p, M is simple iff a nonzero kernel vector of p(a)
    spins up to M and a nonzero kernel vector of p(a)ᵀ spins up to M* under
    the transposed action. Vectors that spin to a proper subspace prove
    reducibility.
    """
    settings = get_settings()
    max_dim = settings.SIMPLICITY_MAX_DIM if max_dim is None else max_dim
    if m.dim > max_dim:
        raise DegreeCapError(f"simplicity test capped at dimension {max_dim}, got {m.dim}")
    if m.dim == 0:
        return False
    if m.dim == 1:
        return True
    generators = [a for a in action_matrices(h, m) if not a.is_zero()]
    transposed = [a.transpose() for a in generators]
    algebra = _enveloping_basis(generators, m.dim)
    rng = np.random.default_rng(settings.RANDOM_SEED if seed is None else seed)

    for attempt in range(attempts or settings.NORTON_ATTEMPTS):
        a = Matrix.zeros(m.dim, m.dim)
        for coeff, b in zip(rng.integers(-3, 4, size=len(algebra)), algebra):
            a = a + b.scale(int(coeff))
        for p in _factors(a.charpoly()):
            pa = _poly_at(p, a)
            null = kernel_basis(pa)
            for v in null:
                if _spin(v, generators) < m.dim:
                    logger.debug(f"{m}: proper submodule found on attempt {attempt}")
                    return False
            if len(null) == len(p) - 1:
                w = kernel_basis(pa.transpose())[0]
                simple = _spin(w, transposed) == m.dim
                logger.debug(f"{m}: Norton test settled on attempt {attempt}: simple={simple}")
                return simple
    raise AlgebraError(f"{m}: simplicity undecided after {attempts or settings.NORTON_ATTEMPTS} attempts")


def require_simple(h: HopfAlgebra, m: Comodule):
    if not is_simple(h, m):
        raise NotSimpleError(f"{m} is not a simple {h.name}-comodule")


# ---------------------------------------------------------------------- actions of H on M


def _circle_matrix(h: HopfAlgebra, lam: IntegralFunctional, m: Comodule, v: Sequence[Fraction]) -> Matrix:
    """K[j][x] = coefficient of v_j in e_x∘v, where h∘v = v₀·λ(h·S(v₁))"""
    entries = []
    for i, x in enumerate(v):
        if not x:
            continue
        for j, t, c in m.coaction[i]:
            s_t = h.antipode.column(t)
            for k in range(h.n):
                w = lam(h.multiply(h.basis_vector(k), s_t))
                if w:
                    entries.append((j, k, x * c * w))
    return Matrix.from_entries(m.dim, h.n, entries)


def circle_action(
    h: HopfAlgebra, lam: IntegralFunctional, m: Comodule, element: Sequence[Fraction], v: Sequence[Fraction]
) -> Vector:
    """element∘v = v₀·λ(element·S(v₁))"""
    return _circle_matrix(h, lam, m, v).apply(element)


def star_action(
    h: HopfAlgebra, lam: IntegralFunctional, m: Comodule, element: Sequence[Fraction], v: Sequence[Fraction]
) -> Vector:
    """element*v = v₀·λ(v₁·S(element))"""
    s_element = h.apply_antipode(element)
    out = [ZERO] * m.dim
    for i, x in enumerate(v):
        if not x:
            continue
        for j, t, c in m.coaction[i]:
            w = lam(h.multiply(h.basis_vector(t), s_element))
            if w:
                out[j] += x * c * w
    return tuple(out)


def bullet(h: HopfAlgebra, m: Comodule, lam: Optional[IntegralFunctional] = None) -> Comodule:
    """M• for a simple comodule M.

    With the generator v̄ = v_0, each v_i is written as h⁽ⁱ⁾∘v̄ and the new
    coaction is δ•(v_i) = (h⁽ⁱ⁾₁∘v̄)⊗h⁽ⁱ⁾₂.
    """
    require_simple(h, m)
    lam = lam or left_integral(h)
    generator = tuple(ONE if k == 0 else ZERO for k in range(m.dim))
    k_matrix = _circle_matrix(h, lam, m, generator)
    coaction = []
    for i in range(m.dim):
        target = tuple(ONE if k == i else ZERO for k in range(m.dim))
        try:
            preimage = solve(k_matrix, target)
        except InconsistentSystemError as e:
            raise InconsistentSystemError(f"{m}: v_{i} is not in H∘v_0, bullet is undefined") from e
        triples = []
        for (j, k), c in h.comultiply(preimage).items():
            for r in range(m.dim):
                w = k_matrix[r, j]
                if w:
                    triples.append((r, k, c * w))
        coaction.append(triples)
    return _checked(h, make_comodule(m.dim, coaction, name=f"{m.name}•"))
