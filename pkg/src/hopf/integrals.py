"""Integrals on a finite-dimensional Hopf algebra and what they induce.

A left integral λ satisfies a₁·λ(a₂) = λ(a)·1, a right integral
λ(a₁)·a₂ = λ(a)·1. From a left integral we get the bilinear form
b(x, y) = λ(x·S(y)) and the convolution product g*f = f₁·λ(f₂·S(g)).
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence

from loguru import logger

from ..linalg.matrix import ZERO, Matrix, SparseRow, Vector, format_scalar, sparse_kernel_basis
from ..utils.exceptions import AlgebraError, NoIntegralError
from .algebra import HopfAlgebra


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class IntegralFunctional:
    side: Side
    covector: Vector

    def __call__(self, element: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.covector, element)), ZERO)

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.covector) if c]

    def formatted(self) -> List[str]:
        return [format_scalar(c) for c in self.covector]


def _integral_rows(h: HopfAlgebra, side: Side) -> List[SparseRow]:
    """One equation per (basis element e_i, output coordinate t)"""
    n = h.n
    rows: List[SparseRow] = []
    for i in range(n):
        eqs: List[SparseRow] = [{} for _ in range(n)]
        for j, k, c in h.comult[i]:
            # left: c·λ(e_k)·e_j, right: c·λ(e_j)·e_k
            out, var = (j, k) if side == Side.LEFT else (k, j)
            eqs[out][var] = eqs[out].get(var, ZERO) + c
        for t, u in enumerate(h.unit):
            if u:
                eqs[t][i] = eqs[t].get(i, ZERO) - u
        rows.extend({var: v for var, v in eq.items() if v} for eq in eqs)
    return rows


def integral_space(h: HopfAlgebra, side: Side) -> List[Vector]:
    return sparse_kernel_basis(_integral_rows(h, side), h.n)


def is_integral(h: HopfAlgebra, covector: Sequence[Fraction], side: Side) -> bool:
    for row in _integral_rows(h, side):
        if sum((v * covector[var] for var, v in row.items()), ZERO) != 0:
            return False
    return True


def find_integral(h: HopfAlgebra, side: Side) -> Optional[IntegralFunctional]:
    """The integral on the given side, scaled so its first nonzero entry is 1"""
    side = Side(side)
    space = integral_space(h, side)
    if len(space) > 1:
        raise AlgebraError(f"{h}: {side.value} integrals span {len(space)} dimensions, expected at most 1")
    if not space:
        logger.debug(f"{h}: no {side.value} integral")
        return None
    v = space[0]
    lead = next(c for c in v if c)
    covector = tuple(c / lead for c in v)
    logger.debug(f"{h}: {side.value} integral {[format_scalar(c) for c in covector]}")
    return IntegralFunctional(side, covector)


def left_integral(h: HopfAlgebra) -> IntegralFunctional:
    found = find_integral(h, Side.LEFT)
    if found is None:
        raise NoIntegralError(f"{h} has no left integral")
    return found


def right_integral(h: HopfAlgebra) -> IntegralFunctional:
    found = find_integral(h, Side.RIGHT)
    if found is None:
        raise NoIntegralError(f"{h} has no right integral")
    return found


def composed_right_integral(h: HopfAlgebra, lam: IntegralFunctional) -> IntegralFunctional:
    """λ∘S for a left integral λ; this is a right integral"""
    covector = tuple(lam(h.antipode.column(i)) for i in range(h.n))
    return IntegralFunctional(Side.RIGHT, covector)


# ---------------------------------------------------------------------- convolution


def convolution(h: HopfAlgebra, lam: IntegralFunctional, g: Sequence[Fraction], f: Sequence[Fraction]) -> Vector:
    """g*f = f₁·λ(f₂·S(g))"""
    s_g = h.apply_antipode(g)
    out = [ZERO] * h.n
    for (j, k), c in h.comultiply(f).items():
        w = lam(h.multiply(h.basis_vector(k), s_g))
        if w:
            out[j] += c * w
    return tuple(out)


def convolution_is_associative(h: HopfAlgebra, lam: IntegralFunctional) -> bool:
    basis = [h.basis_vector(i) for i in range(h.n)]
    for x, y, z in product(basis, repeat=3):
        lhs = convolution(h, lam, convolution(h, lam, x, y), z)
        rhs = convolution(h, lam, x, convolution(h, lam, y, z))
        if lhs != rhs:
            logger.debug(f"{h}: convolution not associative on {x}, {y}, {z}")
            return False
    return True


def first_identity_holds(h: HopfAlgebra, lam: IntegralFunctional) -> bool:
    """f₁·λ(f₂S(g)) = λ(f·S(g₁))·g₂ on all basis pairs"""
    n = h.n
    for a, b in product(range(n), repeat=2):
        f, g = h.basis_vector(a), h.basis_vector(b)
        rhs = [ZERO] * n
        for (j, k), c in h.comultiply(g).items():
            w = lam(h.multiply(f, h.apply_antipode(h.basis_vector(j))))
            if w:
                rhs[k] += c * w
        if convolution(h, lam, g, f) != tuple(rhs):
            return False
    return True


def second_identity_holds(h: HopfAlgebra, lam_r: IntegralFunctional) -> bool:
    """λ_r(x₁S(g))·x₂ = S²(g₁)·λ_r(x·S(g₂)) on all basis pairs"""
    n = h.n
    for a, b in product(range(n), repeat=2):
        x, g = h.basis_vector(a), h.basis_vector(b)
        s_g = h.apply_antipode(g)
        lhs = [ZERO] * n
        for (j, k), c in h.comultiply(x).items():
            w = lam_r(h.multiply(h.basis_vector(j), s_g))
            if w:
                lhs[k] += c * w
        rhs = [ZERO] * n
        for (j, k), c in h.comultiply(g).items():
            w = lam_r(h.multiply(x, h.apply_antipode(h.basis_vector(k))))
            if w:
                for t, s in enumerate(h.antipode_squared(h.basis_vector(j))):
                    rhs[t] += c * w * s
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------- bilinear forms


def bilinear_form_b(h: HopfAlgebra, lam: Optional[IntegralFunctional] = None) -> Matrix:
    """B[i][j] = λ_l(e_i·S(e_j))"""
    lam = lam or left_integral(h)
    n = h.n
    return Matrix.from_rows(
        [[lam(h.multiply(h.basis_vector(i), h.antipode.column(j))) for j in range(n)] for i in range(n)]
    )


def check_nondegenerate_b(h: HopfAlgebra) -> bool:
    return bilinear_form_b(h).rank() == h.n


def _b(h: HopfAlgebra, lam: IntegralFunctional, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return lam(h.multiply(x, h.apply_antipode(y)))


def balanced_property_holds(h: HopfAlgebra, lam: Optional[IntegralFunctional] = None) -> bool:
    """b(x↼φ, y) = b(x, φ⇀y) for φ running over the dual basis of H*.

    x↼φ = φ(x₁)·x₂ and φ⇀y = y₁·φ(y₂).
    """
    lam = lam or left_integral(h)
    n = h.n
    for t, i, j in product(range(n), repeat=3):
        x_hit = [ZERO] * n
        for a, b, c in h.comult[i]:
            if a == t:
                x_hit[b] += c
        y_hit = [ZERO] * n
        for a, b, c in h.comult[j]:
            if b == t:
                y_hit[a] += c
        if _b(h, lam, x_hit, h.basis_vector(j)) != _b(h, lam, h.basis_vector(i), y_hit):
            return False
    return True


def form_c(h: HopfAlgebra, lam_r: IntegralFunctional, basis: Sequence[Vector]) -> Matrix:
    """C[i][j] = λ_r(f_j·S(f_i)) over the given elements"""
    if not basis:
        return Matrix(0, 0, ())
    return Matrix.from_rows(
        [[lam_r(h.multiply(fj, h.apply_antipode(fi))) for fj in basis] for fi in basis]
    )
