"""Splitting comodules: the integral criterion and a projectivity oracle.

A simple comodule M is splitting iff the form c(x, y) = λ_r(y·S(x)) is not
identically zero on its coefficient space. Independently, M is splitting iff
it is projective as a module over the dual algebra H*, which is decided by
solving for an H*-linear section of the free cover H*⊗M -> M.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel

from ..linalg.matrix import ZERO, Matrix, SparseRow, format_scalar, sparse_solve
from ..utils.exceptions import AlgebraError, InconsistentSystemError
from .algebra import HopfAlgebra, validate
from .comodule import Comodule, action_matrices, coefficient_space, is_simple, require_simple
from .integrals import (
    Side,
    bilinear_form_b,
    composed_right_integral,
    convolution_is_associative,
    find_integral,
    first_identity_holds,
    form_c,
    is_integral,
    right_integral,
    second_identity_holds,
)


@dataclass(frozen=True)
class SplittingResult:
    splitting: bool
    c_matrix: Matrix
    cf_dim: int


def splitting_test(h: HopfAlgebra, m: Comodule) -> SplittingResult:
    """Is c nonzero on Cf(M)? When it is, it must also be non-degenerate there."""
    require_simple(h, m)
    lam_r = right_integral(h)
    cf = coefficient_space(h, m)
    c = form_c(h, lam_r, cf.basis)
    splitting = not c.is_zero()
    if splitting and c.rank() != cf.dim:
        raise AlgebraError(f"{m}: c is nonzero but degenerate on a {cf.dim}-dimensional coefficient space")
    logger.debug(f"{m}: dim Cf = {cf.dim}, splitting = {splitting}")
    return SplittingResult(splitting=splitting, c_matrix=c, cf_dim=cf.dim)


def _dual_structure(h: HopfAlgebra) -> Dict[Tuple[int, int], Dict[int, Fraction]]:
    """e^a·e^b = Σ_h (coefficient of e_a⊗e_b in Δe_h)·e^h"""
    table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for target, triples in enumerate(h.comult):
        for a, b, c in triples:
            entry = table.setdefault((a, b), {})
            entry[target] = entry.get(target, ZERO) + c
    return table


def projectivity_oracle(h: HopfAlgebra, m: Comodule) -> bool:
    """Is M projective over H*?

    F = H*⊗k^d is free with basis e^b⊗u_i (index b·d + i) and π(e^b⊗u_i) = e^b⇀v_i.
    M is projective iff some σ: M -> F satisfies σ(e^a⇀v) = e^a·σ(v) for
    every a and π∘σ = id; both conditions are linear in the entries of σ.
    """
    n, d = h.n, m.dim
    size = n * d
    actions = action_matrices(h, m)
    dual = _dual_structure(h)

    def var(row: int, col: int) -> int:
        return row * d + col

    rows: List[SparseRow] = []
    rhs: List[Fraction] = []

    # σ·A_a = L_a·σ, L_a the left multiplication by e^a on F
    for a in range(n):
        left_mult: Dict[int, List[Tuple[int, Fraction]]] = {}
        for b in range(n):
            for target, c in dual.get((a, b), {}).items():
                for i in range(d):
                    left_mult.setdefault(target * d + i, []).append((b * d + i, c))
        action = actions[a]
        for r in range(size):
            for i in range(d):
                row: SparseRow = {}
                for k in range(d):
                    v = action[k, i]
                    if v:
                        row[var(r, k)] = row.get(var(r, k), ZERO) + v
                for s, c in left_mult.get(r, ()):
                    row[var(s, i)] = row.get(var(s, i), ZERO) - c
                row = {key: value for key, value in row.items() if value}
                if row:
                    rows.append(row)
                    rhs.append(ZERO)

    # π·σ = id
    for j in range(d):
        for i in range(d):
            row = {}
            for b in range(n):
                for k in range(d):
                    v = actions[b][j, k]
                    if v:
                        row[var(b * d + k, i)] = v
            rows.append(row)
            rhs.append(Fraction(int(i == j)))

    try:
        sparse_solve(rows, rhs, size * d)
    except InconsistentSystemError:
        logger.debug(f"{m}: no H*-linear section of the free cover")
        return False
    return True


# ---------------------------------------------------------------------- reports


class ComoduleVerdict(BaseModel):
    name: str
    dim: int
    simple: bool
    cf_dim: Optional[int] = None
    c_matrix: Optional[List[List[str]]] = None
    splitting: Optional[bool] = None
    oracle: Optional[bool] = None

    @property
    def agree(self) -> Optional[bool]:
        if self.splitting is None or self.oracle is None:
            return None
        return self.splitting == self.oracle


class AnalysisReport(BaseModel):
    name: str
    dim: int
    valid: bool
    failed_axiom: Optional[str] = None
    left_integral: Optional[List[str]] = None
    right_integral: Optional[List[str]] = None
    b_rank: Optional[int] = None
    convolution_associative: Optional[bool] = None
    first_identity: Optional[bool] = None
    second_identity: Optional[bool] = None
    composed_is_right_integral: Optional[bool] = None
    comodules: List[ComoduleVerdict] = []

    @property
    def disagreements(self) -> List[str]:
        return [c.name for c in self.comodules if c.agree is False]


def analyze_comodule(h: HopfAlgebra, m: Comodule) -> ComoduleVerdict:
    simple = is_simple(h, m)
    verdict = ComoduleVerdict(name=m.name, dim=m.dim, simple=simple)
    if simple:
        result = splitting_test(h, m)
        verdict.cf_dim = result.cf_dim
        verdict.c_matrix = c_matrix_strings(result)
        verdict.splitting = result.splitting
        verdict.oracle = projectivity_oracle(h, m)
        if not verdict.agree:
            logger.error(f"{m}: splitting test {verdict.splitting} but oracle {verdict.oracle}")
    return verdict


def analyze(h: HopfAlgebra, comodules: Optional[List[Comodule]] = None) -> AnalysisReport:
    check = validate(h)
    report = AnalysisReport(name=h.name, dim=h.n, valid=check.ok, failed_axiom=check.failed_axiom)
    if not check.ok:
        return report
    lam_l = find_integral(h, Side.LEFT)
    lam_r = find_integral(h, Side.RIGHT)
    if lam_l is not None:
        report.left_integral = lam_l.formatted()
        report.b_rank = bilinear_form_b(h, lam_l).rank()
        report.convolution_associative = convolution_is_associative(h, lam_l)
        report.first_identity = first_identity_holds(h, lam_l)
        report.composed_is_right_integral = is_integral(h, composed_right_integral(h, lam_l).covector, Side.RIGHT)
    if lam_r is not None:
        report.right_integral = lam_r.formatted()
        report.second_identity = second_identity_holds(h, lam_r)
    report.comodules = [analyze_comodule(h, m) for m in comodules or []]
    logger.info(
        f"{h}: integrals left={report.left_integral} right={report.right_integral}, rank b={report.b_rank}"
    )
    return report


def format_covector(h: HopfAlgebra, covector: Optional[List[str]]) -> str:
    if covector is None:
        return "none"
    terms = [f"{c}·δ_{name}" for c, name in zip(covector, h.basis_names) if not c.startswith("0/")]
    return " + ".join(terms) or "0"


def c_matrix_strings(result: SplittingResult) -> List[List[str]]:
    return [[format_scalar(v) for v in result.c_matrix.row(i)] for i in range(result.c_matrix.rows)]
