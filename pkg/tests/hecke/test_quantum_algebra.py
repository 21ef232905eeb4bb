from fractions import Fraction

import pytest

from src.hecke.quantum_algebra import (
    AlgebraKind,
    centralizer_dim,
    commutant_dim,
    detect_birank11,
    ext_dim,
    fusion_multiplicity_square_sum,
    poincare_table,
    predicted_dims,
    sym_dim,
)
from src.hecke.symmetry import HeckeSymmetry, eigenspace_dims, flip, manin_standard, scaled, super_flip
from src.linalg.matrix import Matrix
from src.utils.exceptions import AxiomError, DegreeCapError, InvalidParameterError


def test_low_degrees(manin3):
    assert [sym_dim(manin3, n) for n in range(4)] == [1, 2, 2, 2]
    assert [ext_dim(manin3, n) for n in range(4)] == [1, 2, 2, 2]


def test_classical_flip_tables():
    h = flip(2)
    assert poincare_table(h, AlgebraKind.SYMMETRIC, 4).dims == [1, 2, 3, 4, 5]
    assert poincare_table(h, AlgebraKind.ANTISYMMETRIC, 4).dims == [1, 2, 1, 0, 0]
    verdict = detect_birank11(h, 4)
    assert not verdict.is_birank11
    assert verdict.generic_check is None


def test_super_flip_is_birank_11():
    verdict = detect_birank11(super_flip(), 4)
    assert verdict.is_birank11
    assert verdict.table.dims == [1, 2, 2, 2, 2]
    assert verdict.generic_check == (2, 2)


@pytest.mark.slow
def test_manin_poincare_series_to_degree_six(manin3):
    verdict = detect_birank11(manin3, 6)
    assert verdict.is_birank11
    assert verdict.table.dims == [1, 2, 2, 2, 2, 2, 2]
    assert (verdict.table.fitted_a, verdict.table.fitted_b) == ("1/1", "1/1")
    assert poincare_table(manin3, AlgebraKind.SYMMETRIC, 6).dims == [1, 2, 2, 2, 2, 2, 2]


def test_birank_needs_three_degrees(manin3):
    with pytest.raises(InvalidParameterError):
        detect_birank11(manin3, 2)


def test_poincare_cap(manin3):
    with pytest.raises(DegreeCapError):
        poincare_table(manin3, AlgebraKind.SYMMETRIC, 7)
    with pytest.raises(DegreeCapError):
        detect_birank11(manin3, 9)
    with pytest.raises(DegreeCapError):
        poincare_table(flip(2), AlgebraKind.ANTISYMMETRIC, 4, cap=3)
    assert poincare_table(flip(2), AlgebraKind.ANTISYMMETRIC, 3, cap=3).dims == [1, 2, 1, 0]


def test_failing_hecke_relation_is_rejected():
    h = HeckeSymmetry(2, Fraction(3), Matrix.identity(4))
    with pytest.raises(AxiomError):
        sym_dim(h, 2)


def test_predicted_series():
    assert predicted_dims(1, 1, 4) == [1, 2, 2, 2, 2]
    assert predicted_dims(2, 0, 3) == [1, 2, 0, 0]


def test_square_sums():
    assert [fusion_multiplicity_square_sum(n) for n in range(1, 5)] == [1, 2, 6, 20]


def test_commutant_small_degrees(manin3):
    assert commutant_dim(manin3, 1) == 1
    assert commutant_dim(manin3, 2) == 2
    assert commutant_dim(manin3, 3) == 6


def test_centralizer_small_degrees(manin3):
    assert centralizer_dim(manin3, 1) == 4
    assert centralizer_dim(manin3, 2) == 8


@pytest.mark.slow
def test_commutant_degree_four(manin3):
    assert commutant_dim(manin3, 4) == 20


def test_commutant_cap(manin3):
    with pytest.raises(DegreeCapError):
        commutant_dim(manin3, 5, cap=4)
    with pytest.raises(InvalidParameterError):
        commutant_dim(manin3, 0)


@pytest.mark.parametrize("q", [5, Fraction(7, 2)])
def test_other_parameters_share_the_series(q):
    h = manin_standard(q)
    assert [ext_dim(h, n) for n in range(1, 4)] == [2, 2, 2]


BUILTINS = [
    manin_standard(3),
    manin_standard(3, p=2),
    manin_standard("7/2"),
    flip(2),
    flip(3),
    super_flip(),
    super_flip((0, 1, 1)),
]


@pytest.mark.parametrize("h", BUILTINS, ids=str)
def test_degree_two_splits_into_eigenspaces(h):
    assert sym_dim(h, 2) + ext_dim(h, 2) == h.dim ** 2
    assert eigenspace_dims(h) == (sym_dim(h, 2), ext_dim(h, 2))


@pytest.mark.parametrize("c", [2, Fraction(-1, 3), -1])
def test_rescaling_keeps_quantum_dimensions(manin3, c):
    r, _ = scaled(manin3, c)
    assert [sym_dim(r, n) for n in range(4)] == [sym_dim(manin3, n) for n in range(4)]
    assert [ext_dim(r, n) for n in range(4)] == [ext_dim(manin3, n) for n in range(4)]
