"""Hecke symmetries R : V⊗V -> V⊗V and their half-duals.

Matrix convention: the entry at row index(c, d), column index(a, b) of
``r_matrix`` is the coefficient of e_c⊗e_d in R(e_a⊗e_b), with
index(i, j) = i*dim + j.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel

from ..linalg.matrix import Matrix, format_scalar, is_invertible, kernel_basis, kron, to_scalar
from ..utils.exceptions import InvalidParameterError, ShapeMismatchError, SingularOperatorError


def pair_index(i: int, j: int, dim: int) -> int:
    return i * dim + j


def is_valid_q(q) -> bool:
    q = to_scalar(q)
    return q != 0 and q != -1


@dataclass(frozen=True)
class HeckeSymmetry:
    """Candidate Hecke symmetry with eigenvalue pair (q, lower).

    The Hecke relation reads (R - q)(R - lower) = 0; lower is -1 except after
    a rescaling, and the invariant parameter is q / -lower.
    """

    dim: int
    q: Fraction
    r_matrix: Matrix
    lower: Fraction = Fraction(-1)
    name: str = field(default="R", compare=False)
    # Rebuilds the same family at another q; only builtin families carry one.
    respecialize: Optional[Callable[[Fraction], "HeckeSymmetry"]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        size = self.dim * self.dim
        if self.r_matrix.shape != (size, size):
            raise ShapeMismatchError(f"R for dim {self.dim} must be {size}x{size}, got {self.r_matrix.shape}")
        if self.lower == 0:
            raise InvalidParameterError("second eigenvalue must be nonzero")

    @property
    def identity(self) -> Matrix:
        return Matrix.identity(self.dim * self.dim)

    @property
    def normalized_q(self) -> Fraction:
        """q of the rescaled operator R / -lower, whose second eigenvalue is -1"""
        return self.q / -self.lower

    def __str__(self) -> str:
        if self.lower == -1:
            return f"{self.name}(dim={self.dim}, q={self.q})"
        return f"{self.name}(dim={self.dim}, q={self.q}, lower={self.lower})"


@dataclass(frozen=True)
class HalfDual:
    """P : V*⊗V -> V⊗V*; input basis e^a⊗e_b, output basis e_c⊗e^k"""

    dim: int
    p_matrix: Matrix


class YangBaxterReport(BaseModel):
    holds: bool
    # (row, col, lhs, rhs) of the first differing entry of the d³×d³ matrices
    first_failure: Optional[Tuple[int, int, str, str]] = None


class HeckeReport(BaseModel):
    name: str
    dim: int
    q: str
    q_valid: bool
    ybe: bool
    hecke: bool
    closed: bool
    qrank: Optional[str] = None
    ybe_failure: Optional[Tuple[int, int, str, str]] = None

    @property
    def all_pass(self) -> bool:
        return self.q_valid and self.ybe and self.hecke and self.closed


# ---------------------------------------------------------------------- operators


def local_operator(op: Matrix, position: int, factors: int, dim: int) -> Matrix:
    """id^{⊗position} ⊗ op ⊗ id^{⊗(factors-position-2)} on V^{⊗factors}"""
    if not 0 <= position <= factors - 2:
        raise ShapeMismatchError(f"two-site operator at {position} on {factors} factors")
    left = Matrix.identity(dim ** position)
    right = Matrix.identity(dim ** (factors - position - 2))
    return kron(kron(left, op), right)


def braid_generators(h: HeckeSymmetry, n: int) -> List[Matrix]:
    """R_i = id^{⊗i-1} ⊗ R ⊗ id^{⊗n-i-1} for 1 <= i <= n-1"""
    return [local_operator(h.r_matrix, i, n, h.dim) for i in range(n - 1)]


# ---------------------------------------------------------------------- verifiers


def verify_yang_baxter(h: HeckeSymmetry) -> YangBaxterReport:
    """(R⊗id)(id⊗R)(R⊗id) == (id⊗R)(R⊗id)(id⊗R) exactly"""
    r12, r23 = braid_generators(h, 3)
    lhs = r12 @ r23 @ r12
    rhs = r23 @ r12 @ r23
    for k, (a, b) in enumerate(zip(lhs.entries, rhs.entries)):
        if a != b:
            row, col = divmod(k, lhs.cols)
            logger.debug(f"{h}: YBE fails at ({row}, {col}): {a} != {b}")
            return YangBaxterReport(holds=False, first_failure=(row, col, format_scalar(a), format_scalar(b)))
    return YangBaxterReport(holds=True)


def verify_hecke_relation(h: HeckeSymmetry) -> bool:
    """(R - q·id)(R - lower·id) == 0"""
    ident = h.identity
    product = (h.r_matrix - ident.scale(h.q)) @ (h.r_matrix - ident.scale(h.lower))
    return product.is_zero()


def hecke_relation_text(h: HeckeSymmetry) -> str:
    if h.lower == -1:
        return "(R - q)(R + 1) = 0"
    return f"(R - {format_scalar(h.q)})(R - {format_scalar(h.lower)}) = 0"


def half_dual(h: HeckeSymmetry) -> HalfDual:
    """P[(c,k),(a,b)] = R[(a,c),(b,k)]"""
    d = h.dim
    triples = []
    for row, col, value in h.r_matrix.nonzero():
        a, c = divmod(row, d)
        b, k = divmod(col, d)
        triples.append((pair_index(c, k, d), pair_index(a, b, d), value))
    return HalfDual(dim=d, p_matrix=Matrix.from_entries(d * d, d * d, triples))


def verify_closed(h: HeckeSymmetry) -> bool:
    return is_invertible(half_dual(h).p_matrix)


def q_rank(h: HeckeSymmetry) -> Fraction:
    """ev ∘ P⁻¹ ∘ db applied to 1.

    db(1) = Σ_i e_i⊗e^i has P-output coordinates (i, i); ev pairs the
    V*⊗V coordinates (a, a). The result is Σ_{a,i} P⁻¹[(a,a),(i,i)].
    """
    d = h.dim
    p = half_dual(h).p_matrix
    if not is_invertible(p):
        raise SingularOperatorError(f"{h}: half-dual is not invertible")
    p_inv = p.inverse()
    return sum(
        (p_inv[pair_index(a, a, d), pair_index(i, i, d)] for a in range(d) for i in range(d)),
        Fraction(0),
    )


def verify_all(h: HeckeSymmetry) -> HeckeReport:
    ybe = verify_yang_baxter(h)
    closed = verify_closed(h)
    report = HeckeReport(
        name=h.name,
        dim=h.dim,
        q=format_scalar(h.q),
        q_valid=is_valid_q(h.normalized_q),
        ybe=ybe.holds,
        hecke=verify_hecke_relation(h),
        closed=closed,
        qrank=format_scalar(q_rank(h)) if closed else None,
        ybe_failure=ybe.first_failure,
    )
    logger.debug(f"{h}: {report.model_dump()}")
    return report


# ---------------------------------------------------------------------- spectral data


def eigenspace_dims(h: HeckeSymmetry) -> Tuple[int, int]:
    """(dim E_q, dim E_lower) of R acting on V⊗V"""
    ident = h.identity
    e_q = len(kernel_basis(h.r_matrix - ident.scale(h.q)))
    e_lower = len(kernel_basis(h.r_matrix - ident.scale(h.lower)))
    return e_q, e_lower


class Eigenspace(str, Enum):
    Q = "q"
    # the second eigenvalue, -1 unless rescaled
    MINUS_ONE = "-1"


def projector(h: HeckeSymmetry, kind: Eigenspace) -> Matrix:
    """Projection of V⊗V onto E_q or E_lower along the other; idempotent once the Hecke relation holds"""
    if h.q == h.lower:
        raise InvalidParameterError(f"equal eigenvalues {h.q} have no eigenspace projector")
    if kind == Eigenspace.Q:
        numerator = h.r_matrix - h.identity.scale(h.lower)
    else:
        numerator = h.identity.scale(h.q) - h.r_matrix
    return numerator.scale(1 / (h.q - h.lower))


def scaled(h: HeckeSymmetry, c) -> Tuple[HeckeSymmetry, Tuple[Fraction, Fraction]]:
    """c·R together with its eigenvalue pair (c·q, c·lower)"""
    c = to_scalar(c)
    if c == 0:
        raise InvalidParameterError("rescaling by zero")
    r = HeckeSymmetry(h.dim, c * h.q, h.r_matrix.scale(c), lower=c * h.lower, name=f"{c}*{h.name}")
    return r, (r.q, r.lower)


# ---------------------------------------------------------------------- builtins


def flip(dim: int = 2, q=1) -> HeckeSymmetry:
    """Tensor flip e_a⊗e_b -> e_b⊗e_a (classical symmetry, q = 1)"""
    triples = [(pair_index(b, a, dim), pair_index(a, b, dim), 1) for a in range(dim) for b in range(dim)]
    return HeckeSymmetry(dim, to_scalar(q), Matrix.from_entries(dim * dim, dim * dim, triples), name="flip")


def super_flip(parities: Sequence[int] = (0, 1)) -> HeckeSymmetry:
    """e_a⊗e_b -> (-1)^{|a||b|} e_b⊗e_a for the given basis parities"""
    dim = len(parities)
    triples = [
        (pair_index(b, a, dim), pair_index(a, b, dim), -1 if parities[a] and parities[b] else 1)
        for a in range(dim)
        for b in range(dim)
    ]
    return HeckeSymmetry(
        dim,
        Fraction(1),
        Matrix.from_entries(dim * dim, dim * dim, triples),
        name="super_flip",
        respecialize=manin_standard if tuple(parities) == (0, 1) else None,
    )


def manin_standard(q, p=1) -> HeckeSymmetry:
    """Standard birank (1,1) Hecke symmetry on a two-dimensional space.

    R(e₁⊗e₁) = q·e₁⊗e₁, R(e₁⊗e₂) = p·e₂⊗e₁,
    R(e₂⊗e₁) = (q/p)·e₁⊗e₂ + (q-1)·e₂⊗e₁, R(e₂⊗e₂) = -e₂⊗e₂.
    """
    q, p = to_scalar(q), to_scalar(p)
    if not is_valid_q(q):
        raise InvalidParameterError(f"q must avoid 0 and -1, got {q}")
    if p == 0:
        raise InvalidParameterError("p must be nonzero")
    d = 2
    triples = [
        (pair_index(0, 0, d), pair_index(0, 0, d), q),
        (pair_index(1, 0, d), pair_index(0, 1, d), p),
        (pair_index(0, 1, d), pair_index(1, 0, d), q / p),
        (pair_index(1, 0, d), pair_index(1, 0, d), q - 1),
        (pair_index(1, 1, d), pair_index(1, 1, d), -1),
    ]
    name = "manin_standard" if p == 1 else f"manin_standard[p={p}]"
    return HeckeSymmetry(
        d,
        q,
        Matrix.from_entries(4, 4, triples),
        name=name,
        respecialize=lambda new_q: manin_standard(new_q, p),
    )
