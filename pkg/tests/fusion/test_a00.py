import pytest

from src.fusion.a00 import (
    DecompositionKind,
    K0Element,
    SimpleLabel,
    dim,
    dual,
    fundamental,
    fusion_table,
    is_splitting,
    k0_mul,
    superdeterminant_power,
    tensor,
    tensor_power_multiplicities,
    twist,
)
from src.hecke.quantum_algebra import fusion_multiplicity_square_sum
from src.utils.exceptions import InvalidParameterError

L = SimpleLabel


def _random_label(rng, bound=6):
    m, n = rng.integers(-bound, bound + 1, size=2)
    return L(int(m), int(n))


def test_fundamental_square():
    d = tensor(L(1, 0), L(1, 0))
    assert d.kind == DecompositionKind.SEMISIMPLE
    assert str(d) == "(2,0) + (1,1)"


def test_fundamental_times_dual_is_injective():
    d = tensor(L(1, 0), L(-1, 0))
    assert d.kind == DecompositionKind.INDECOMPOSABLE_INJECTIVE
    assert d.socle == L(0, 0)
    assert str(d) == "INDEC-INJ socle (0,0); factors 2·(0,0)+(1,-1)+(-1,1)"
    assert d.dimension() == 4


def test_unit_and_superdeterminant():
    assert str(tensor(L(0, 0), L(5, -3))) == "(5,-3)"
    assert tensor(L(2, -2), L(1, 3)).factors == K0Element.of(L(3, 1))
    assert superdeterminant_power(2) == L(2, -2)
    assert twist(L(3, 1), -1) == L(2, 2)


def test_mixed_sign_products():
    assert tensor(L(3, 0), L(-1, 0)).factors == K0Element.of(L(2, 0), L(3, -1))
    assert tensor(L(-3, 0), L(1, 0)).factors == K0Element.of(L(-2, 0), L(-3, 1))
    assert tensor(L(-1, 0), L(-1, 0)).factors == K0Element.of(L(-2, 0), L(-1, -1))


def test_twisted_injective_socle():
    d = tensor(L(2, 1), L(-1, -2))
    assert d.kind == DecompositionKind.INDECOMPOSABLE_INJECTIVE
    assert d.socle == L(1, -1)
    assert d.factors == 2 * K0Element.of(L(1, -1)) + K0Element.of(L(2, -2), L(0, 0))


def test_three_fold_product_with_dual():
    v = K0Element.of(fundamental())
    vv_star = k0_mul(k0_mul(v, v), v.dual())
    assert vv_star == 2 * v + K0Element.of(L(2, -1), L(0, 1))
    assert vv_star.dimension() == 8


def test_dimension_homomorphism_on_box():
    rows = list(fusion_table(6))
    assert len(rows) == 13 ** 4
    assert all(row.dimension_ok for row in rows)


def test_associativity_random(rng):
    for _ in range(1000):
        x, y, z = (K0Element.of(_random_label(rng)) for _ in range(3))
        assert k0_mul(k0_mul(x, y), z) == k0_mul(x, k0_mul(y, z))


def test_commutativity_random(rng):
    for _ in range(1000):
        x, y = (K0Element.of(_random_label(rng)) for _ in range(2))
        assert x * y == y * x


def test_dual_is_anti_automorphism(rng):
    for _ in range(1000):
        x, y = (K0Element.of(_random_label(rng)) for _ in range(2))
        assert k0_mul(x, y).dual() == k0_mul(y.dual(), x.dual())


def test_superdeterminant_twist_rule(rng):
    for _ in range(1000):
        a = _random_label(rng)
        j = int(rng.integers(-4, 5))
        assert tensor(a, superdeterminant_power(j)).factors == K0Element.of(twist(a, j))


def test_splitting_iff_two_dimensional(rng):
    for _ in range(1000):
        a = _random_label(rng)
        assert is_splitting(a) == (dim(a) == 2)
        assert dual(dual(a)) == a


def test_tensor_powers_match_square_sums():
    for n in range(1, 7):
        multiplicities = tensor_power_multiplicities(n)
        assert sum(c * dim(label) for label, c in multiplicities.items()) == 2 ** n
        assert sum(c * c for c in multiplicities.values()) == fusion_multiplicity_square_sum(n)
    assert tensor_power_multiplicities(3) == {L(3, 0): 1, L(2, 1): 2, L(1, 2): 1}
    with pytest.raises(InvalidParameterError):
        tensor_power_multiplicities(0)


def test_k0_arithmetic():
    x = K0Element.of(L(1, 0), L(1, 0), L(0, 0))
    assert x.multiplicity(L(1, 0)) == 2
    assert x.dimension() == 5
    assert not K0Element()
    assert str(K0Element()) == "0"
    assert (x + (-1) * x) == K0Element()
