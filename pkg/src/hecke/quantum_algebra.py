"""Quantum symmetric / antisymmetric algebras of a Hecke symmetry.

S = T(V)/(Im(R - q·id)) and Λ = T(V)/(Im(R - lower·id)), lower = -1 unless
rescaled. The degree-n component of the ideal is spanned by the images of
id^{⊗i-1} ⊗ X ⊗ id^{⊗n-i-1}, so its dimension is the rank of their horizontal
concatenation.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel

from ..linalg.matrix import Matrix, SparseRow, column_span_rank, format_scalar, sparse_kernel_basis
from ..utils.config import get_settings
from ..utils.exceptions import AxiomError, DegreeCapError, InvalidParameterError
from .symmetry import (
    Eigenspace,
    HeckeSymmetry,
    braid_generators,
    hecke_relation_text,
    is_valid_q,
    local_operator,
    projector,
    verify_hecke_relation,
)


class AlgebraKind(str, Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


class PoincareTable(BaseModel):
    algebra_kind: AlgebraKind
    dims: List[int]
    fitted_a: Optional[str] = None
    fitted_b: Optional[str] = None


class BirankVerdict(BaseModel):
    is_birank11: bool
    table: PoincareTable
    # Λ dims in degrees 2 and 3 at the second specialization, when one was run
    generic_check: Optional[Tuple[int, int]] = None


def _relation_operator(h: HeckeSymmetry, kind: AlgebraKind) -> Matrix:
    """Projector whose image spans the quadratic relations: Im(R - q) = E_lower, Im(R - lower) = E_q"""
    if kind == AlgebraKind.SYMMETRIC:
        return projector(h, Eigenspace.MINUS_ONE)
    return projector(h, Eigenspace.Q)


@lru_cache(maxsize=256)
def _quotient_dim(h: HeckeSymmetry, kind: AlgebraKind, n: int) -> int:
    if n < 2:
        return h.dim ** n
    relation = _relation_operator(h, kind)
    ideal = column_span_rank([local_operator(relation, i, n, h.dim) for i in range(n - 1)])
    logger.debug(f"{h}: {kind.value} degree {n}: ideal rank {ideal} of {h.dim ** n}")
    return h.dim ** n - ideal


def _check_degree(h: HeckeSymmetry, n: int):
    if n < 0:
        raise InvalidParameterError(f"degree must be non-negative, got {n}")
    if not verify_hecke_relation(h):
        raise AxiomError("hecke_relation", f"{h} does not satisfy {hecke_relation_text(h)}")


def sym_dim(h: HeckeSymmetry, n: int) -> int:
    """dim S_n"""
    _check_degree(h, n)
    return _quotient_dim(h, AlgebraKind.SYMMETRIC, n)


def ext_dim(h: HeckeSymmetry, n: int) -> int:
    """dim Λ_n"""
    _check_degree(h, n)
    return _quotient_dim(h, AlgebraKind.ANTISYMMETRIC, n)


def poincare_table(h: HeckeSymmetry, kind: AlgebraKind, max_degree: int, cap: Optional[int] = None) -> PoincareTable:
    if cap is None:
        cap = get_settings().POINCARE_MAX_DEGREE
    if max_degree > cap:
        raise DegreeCapError(f"degree {max_degree} exceeds the Poincaré cap {cap}")
    dim_fn = sym_dim if kind == AlgebraKind.SYMMETRIC else ext_dim
    return PoincareTable(algebra_kind=kind, dims=[dim_fn(h, n) for n in range(max_degree + 1)])


def predicted_dims(a, b, max_degree: int) -> List[Fraction]:
    """Coefficients of (1 + a·t)(1 - b·t)^{-1} up to t^max_degree"""
    a, b = Fraction(a), Fraction(b)
    return [Fraction(1)] + [(a + b) * b ** (n - 1) for n in range(1, max_degree + 1)]


def _second_specialization(q: Fraction) -> Fraction:
    candidate = q + 1
    while not is_valid_q(candidate):
        candidate += 1
    return candidate


def detect_birank11(h: HeckeSymmetry, max_degree: Optional[int] = None) -> BirankVerdict:
    """Fit (1 + a·t)(1 - b·t)^{-1} to the Λ dims and test for a = b = 1"""
    if max_degree is None:
        max_degree = get_settings().POINCARE_MAX_DEGREE
    if max_degree < 3:
        raise InvalidParameterError(f"birank detection needs max_degree >= 3, got {max_degree}")
    table = poincare_table(h, AlgebraKind.ANTISYMMETRIC, max_degree)
    d = table.dims
    if d[1] == 0:
        raise InvalidParameterError("dim V = 0")
    b = Fraction(d[2], d[1])
    a = d[1] - b
    table.fitted_a, table.fitted_b = format_scalar(a), format_scalar(b)
    fits = [Fraction(x) for x in d] == predicted_dims(a, b, max_degree)
    verdict = fits and a == 1 and b == 1 and all(x == 2 for x in d[1:])

    generic = None
    if verdict:
        if h.respecialize is None:
            logger.warning(f"{h}: no family to respecialize, generic-q cross-check skipped")
        else:
            other = h.respecialize(_second_specialization(h.q))
            generic = (ext_dim(other, 2), ext_dim(other, 3))
            if generic != (d[2], d[3]):
                logger.warning(f"{h}: dims at q={other.q} are {generic}, not {(d[2], d[3])}")
                verdict = False
    logger.info(f"{h}: Λ dims {d}, a={a}, b={b}, birank (1,1): {verdict}")
    return BirankVerdict(is_birank11=verdict, table=table, generic_check=generic)


# ---------------------------------------------------------------------- commutants


def _commutator_rows(ops: Sequence[Matrix], size: int) -> List[SparseRow]:
    """Rows of the linear system X·A = A·X for every A in ops, X flattened row-major"""
    rows: List[SparseRow] = []
    for op in ops:
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        by_col: Dict[int, List[Tuple[int, Fraction]]] = {}
        for i, j, v in op.nonzero():
            by_row.setdefault(i, []).append((j, v))
            by_col.setdefault(j, []).append((i, v))
        for i in range(size):
            for j in range(size):
                row: SparseRow = {}
                # (X·A)[i][j] = Σ_k X[i][k] A[k][j]
                for k, v in by_col.get(j, ()):
                    row[i * size + k] = row.get(i * size + k, 0) + v
                # (A·X)[i][j] = Σ_k A[i][k] X[k][j]
                for k, v in by_row.get(i, ()):
                    row[k * size + j] = row.get(k * size + j, 0) - v
                row = {key: value for key, value in row.items() if value}
                if row:
                    rows.append(row)
    return rows


def _centralizer(ops: Sequence[Matrix], size: int) -> List[Matrix]:
    basis = sparse_kernel_basis(_commutator_rows(ops, size), size * size)
    return [Matrix(size, size, v) for v in basis]


def _check_commutant_degree(n: int, cap: Optional[int]):
    if cap is None:
        cap = get_settings().COMMUTANT_MAX_DEGREE
    if n < 1:
        raise InvalidParameterError(f"degree must be >= 1, got {n}")
    if n > cap:
        raise DegreeCapError(f"degree {n} exceeds the commutant cap {cap}")


def centralizer_dim(h: HeckeSymmetry, n: int, cap: Optional[int] = None) -> int:
    """dim {X ∈ End(V^{⊗n}) : X·R_i = R_i·X for all i}"""
    _check_commutant_degree(n, cap)
    size = h.dim ** n
    return len(_centralizer(braid_generators(h, n), size))


def commutant_dim(h: HeckeSymmetry, n: int, cap: Optional[int] = None) -> int:
    """Dimension of the comodule endomorphisms of V^{⊗n}.

    Comodule maps are the operators commuting with everything that commutes
    with the braid generators R_i, so this is the dimension of the centralizer
    of the centralizer. For generic q it equals Σ_k mult(n, k)².
    """
    _check_commutant_degree(n, cap)
    size = h.dim ** n
    first = _centralizer(braid_generators(h, n), size)
    logger.debug(f"{h}: degree {n} centralizer has dimension {len(first)}")
    return len(_centralizer(first, size))


def fusion_multiplicity_square_sum(n: int) -> int:
    """Σ_k C(n-1, k)²"""
    return sum(comb(n - 1, k) ** 2 for k in range(n))
