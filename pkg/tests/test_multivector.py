import math

import numpy as np
import pytest

from neutrino_sta.algebra import blades
from neutrino_sta.algebra.multivector import (
    G0, G1, G2, G3, G5, GAMMA, ONE, SIGMA, Multivector, contract_left, even, exp_bivector, exp_g5, gp, grade,
    grades_present, hodge, inner, is_pure_grade, lower, norm, odd, reverse, scalar_product, wedge,
)
from neutrino_sta.exceptions import GradeError


def test_metric_signature():
    assert gp(G0, G0).isclose(ONE)
    for g in (G1, G2, G3):
        assert gp(g, g).isclose(-ONE)


def test_lower_index_generators_are_reciprocal():
    for mu in range(4):
        assert scalar_product(GAMMA[mu], lower(mu)) == pytest.approx(1.0)


def test_distinct_generators_anticommute():
    for a in range(4):
        for b in range(a + 1, 4):
            assert (gp(GAMMA[a], GAMMA[b]) + gp(GAMMA[b], GAMMA[a])).isclose(Multivector.zeros())


def test_pseudoscalar_squares_to_minus_one_and_anticommutes_with_vectors():
    assert gp(G5, G5).isclose(-ONE)
    for g in GAMMA:
        assert (gp(G5, g) + gp(g, G5)).isclose(Multivector.zeros())


def test_product_is_associative(random_multivectors):
    a, b, c = random_multivectors[:10], random_multivectors[10:20], random_multivectors[20:30]
    assert gp(gp(a, b), c).isclose(gp(a, gp(b, c)), atol=1e-10)


def test_reverse_of_product(random_multivectors):
    a, b = random_multivectors[:16], random_multivectors[16:]
    assert reverse(gp(a, b)).isclose(gp(reverse(b), reverse(a)), atol=1e-10)


def test_vector_products_split_into_inner_and_wedge(rng):
    a = sum(g * rng.standard_normal(8) for g in GAMMA)
    b = sum(g * rng.standard_normal(8) for g in GAMMA)
    assert gp(a, b).isclose(inner(a, b) + wedge(a, b), atol=1e-12)
    assert contract_left(a, b).isclose(inner(a, b), atol=1e-12)
    assert (a ^ b).isclose(wedge(a, b))


def test_grade_projections_partition(random_multivectors):
    total = sum(grade(random_multivectors, k) for k in range(5))
    assert total.isclose(random_multivectors)
    assert (even(random_multivectors) + odd(random_multivectors)).isclose(random_multivectors)


def test_grade_out_of_range():
    with pytest.raises(GradeError):
        grade(ONE, 5)


def test_hodge_of_scalar_is_pseudoscalar():
    assert hodge(ONE).isclose(G5)
    assert is_pure_grade(hodge(gp(G0, G1)), 2)


def test_exp_g5_quarter_turn():
    assert exp_g5(math.pi / 2.0).isclose(G5)
    assert exp_g5(np.zeros(3)).shape == (3,)


def test_exp_bivector_rotation_and_boost():
    rotation = exp_bivector(Multivector.from_blade('g1g2', 0.7))
    assert rotation.scalar == pytest.approx(math.cos(0.7))
    boost = exp_bivector(Multivector.from_blade('g0g3', 0.4))
    assert boost.scalar == pytest.approx(math.cosh(0.4))
    for rotor in (rotation, boost):
        assert gp(rotor, reverse(rotor)).isclose(ONE)


def test_exp_bivector_of_non_simple_bivector_is_a_rotor():
    b2 = Multivector.from_blade('g0g1', 0.3) + Multivector.from_blade('g2g3', 0.5)
    rotor = exp_bivector(b2)
    assert gp(rotor, reverse(rotor)).isclose(ONE, atol=1e-12)


def test_exp_bivector_rejects_vectors():
    with pytest.raises(GradeError):
        exp_bivector(G1)


def test_batched_scaling_by_array():
    scaled = G1 * np.array([1.0, 2.0, 3.0])
    assert scaled.shape == (3,)
    np.testing.assert_allclose(norm(scaled), [1.0, 2.0, 3.0])


def test_boolean_mask_selection(random_multivectors):
    mask = norm(random_multivectors) > 4.0
    assert random_multivectors[mask].shape == (int(mask.sum()),)


def test_grades_present():
    assert grades_present(ONE + gp(G0, G1)) == frozenset({0, 2})


def test_constructor_rejects_wrong_width():
    with pytest.raises(ValueError):
        Multivector(np.zeros(15))


def test_blade_table_order():
    assert blades.BLADE_NAMES[1] == 'g0'
    assert blades.BLADE_NAMES[15] == 'g0g1g2g3'
    assert G5.pseudoscalar == 1.0


def _sorted_blade_product(a: int, b: int):
    """Sign and mask of a*b found by bubble-sorting the generator word and cancelling squares"""
    word = [mu for mu in range(4) if a >> mu & 1] + [mu for mu in range(4) if b >> mu & 1]
    sign = 1
    for end in range(len(word) - 1, 0, -1):
        for i in range(end):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
    kept = []
    for mu in word:
        if kept and kept[-1] == mu:
            kept.pop()
            sign *= blades.SIGNATURE[mu]
        else:
            kept.append(mu)
    return sign, sum(1 << mu for mu in kept)


def test_blade_products_match_sorted_generator_words():
    for a in blades.BLADES:
        for b in blades.BLADES:
            sign, mask = _sorted_blade_product(a, b)
            assert blades.blade_product(a, b) == (sign, mask)
            product = gp(Multivector.from_blade(blades.blade_name(a)), Multivector.from_blade(blades.blade_name(b)))
            assert product.isclose(Multivector.from_blade(blades.blade_name(mask), float(sign)))


@pytest.mark.parametrize('k', range(5))
def test_double_hodge_sign_by_grade(k):
    for mask in blades.BLADES:
        if bin(mask).count('1') != k:
            continue
        blade = Multivector.from_blade(blades.blade_name(mask))
        assert hodge(hodge(blade)).isclose((-1.0) ** (k + 1) * blade)


def test_pauli_vectors_anticommute_to_kronecker_delta():
    for i in range(3):
        for j in range(3):
            anticommutator = gp(SIGMA[i], SIGMA[j]) + gp(SIGMA[j], SIGMA[i])
            assert anticommutator.isclose(2.0 * float(i == j) * ONE)


def test_metric_contraction_table():
    metric = np.diag([1.0, -1.0, -1.0, -1.0])
    for mu in range(4):
        for nu in range(4):
            assert inner(GAMMA[mu], GAMMA[nu]).isclose(metric[mu, nu] * ONE)
            assert contract_left(GAMMA[mu], GAMMA[nu]).isclose(metric[mu, nu] * ONE)
            assert scalar_product(GAMMA[mu], lower(nu)) == pytest.approx(float(mu == nu))
