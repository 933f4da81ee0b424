import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasisym.errors import AlphabetMismatchError, BadIndexError, BasisMismatchError, DegreeMismatchError
from quasisym.fqsym import (
    HomogeneousElement, NCPolynomial, QSymImage, add, basis_element, commutative_image,
    ncpoly_one, ncpoly_product, negate, one, pairing, product, realize, scale, to_F, to_G,
    to_S, zero
)
from quasisym.permcore import anticonnected_factors, weak_down_set


def permutation_of_size(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


def permutations_between(low, high):
    return st.integers(low, high).flatmap(permutation_of_size)


bases = st.sampled_from(['F', 'G', 'S'])


def test_basis_element_arithmetic():
    x = basis_element('G', (2, 1))
    assert x.coeffs == {(2, 1): 1}
    assert add(x, negate(x)).is_zero()
    assert not (x - x)
    assert scale(2, basis_element('F', (1, 2))).coefficient((1, 2)) == 2
    assert (3 * x).coefficient((2, 1)) == 3
    assert one('S').constant() == 1
    assert zero('F', 3).is_zero()


def test_elements_reject_mixed_or_malformed_input():
    with pytest.raises(BasisMismatchError):
        basis_element('F', (1,)) + basis_element('G', (1,))
    with pytest.raises(DegreeMismatchError):
        basis_element('F', (1,)) + basis_element('F', (1, 2))
    with pytest.raises(BasisMismatchError):
        product(basis_element('F', (1,)), basis_element('S', (1,)))
    with pytest.raises(BasisMismatchError):
        HomogeneousElement('X', 1, {(1,): 1})
    with pytest.raises(DegreeMismatchError):
        HomogeneousElement('G', 2, {(1,): 1})
    for p in ((1, 1), (2, 3), (0, 1)):
        with pytest.raises(BadIndexError):
            basis_element('G', p)
    with pytest.raises(BadIndexError):
        HomogeneousElement.from_json({'basis': 'F', 'degree': 2, 'terms': [{'perm': '2,2', 'coeff': '1'}]})


def test_products(helpers):
    F = lambda p: basis_element('F', p)
    G = lambda p: basis_element('G', p)
    S = lambda p: basis_element('S', p)
    assert F((1,)) * F((1,)) == F((1, 2)) + F((2, 1))
    assert G((1,)) * G((1,)) == G((1, 2)) + G((2, 1))
    assert S((1,)) * S((1,)) == S((2, 1))
    assert F((1, 2)) * F((1,)) == helpers.element('F', {(1, 2, 3): 1, (1, 3, 2): 1, (3, 1, 2): 1})
    assert one('G') * G((2, 1)) == G((2, 1))
    assert (F((1,)) * F((1,))).degree == 2


def test_conversions(helpers):
    assert to_G(basis_element('F', (3, 1, 2))) == basis_element('G', (2, 3, 1))
    assert to_G(basis_element('S', (3, 1, 2))) == helpers.element('G', {(1, 2, 3): 1, (2, 1, 3): 1, (3, 1, 2): 1})
    assert to_S(basis_element('G', (3, 1, 2))) == helpers.element('S', {(3, 1, 2): 1, (2, 1, 3): -1})
    assert to_S(one('G')) == one('S')
    assert to_F(one('S')) == one('F')
    assert to_F(basis_element('G', (2, 3, 1))) == basis_element('F', (3, 1, 2))


def test_conversions_round_trip(helpers):
    for n in range(1, 6):
        for sigma in helpers.permutations(n):
            g = basis_element('G', sigma)
            s = basis_element('S', sigma)
            assert to_G(to_S(g)) == g
            assert to_S(to_G(s)) == s
            assert to_G(to_F(g)) == g


def test_s_basis_is_multiplicative_over_anticonnected_factors(helpers):
    for n in range(1, 7):
        for sigma in helpers.permutations(n):
            expected = one('G')
            for factor in anticonnected_factors(sigma):
                expected = expected * to_G(basis_element('S', factor))
            assert to_G(basis_element('S', sigma)) == expected


@settings(max_examples=40, deadline=None)
@given(permutations_between(0, 3), permutations_between(0, 3))
def test_products_agree_across_bases(a, b):
    f_product = basis_element('F', a) * basis_element('F', b)
    assert to_F(to_G(basis_element('F', a)) * to_G(basis_element('F', b))) == f_product
    s_product = basis_element('S', a) * basis_element('S', b)
    assert to_G(s_product) == to_G(basis_element('S', a)) * to_G(basis_element('S', b))
    assert to_S(to_G(basis_element('S', a)) * to_G(basis_element('S', b))) == s_product


@settings(max_examples=30, deadline=None)
@given(bases, permutations_between(0, 2), permutations_between(0, 2), permutations_between(0, 2))
def test_product_is_associative(basis, a, b, c):
    x, y, z = (basis_element(basis, p) + basis_element(basis, p[::-1]) for p in (a, b, c))
    assert (x * y) * z == x * (y * z)


def test_pairing(helpers):
    assert pairing(basis_element('F', (3, 1, 2)), basis_element('G', (3, 1, 2))) == 1
    assert pairing(basis_element('F', (3, 1, 2)), basis_element('G', (2, 1, 3))) == 0
    assert pairing(basis_element('F', (2, 1, 3)), basis_element('S', (3, 1, 2))) == 1
    a = helpers.element('F', {(1, 2): 2, (2, 1): -1})
    b = helpers.element('G', {(1, 2): 3, (2, 1): 5})
    assert pairing(a, b) == 2 * 3 - 1 * 5
    with pytest.raises(DegreeMismatchError):
        pairing(basis_element('F', (1,)), basis_element('G', (1, 2)))


def test_pairing_duality(helpers):
    for n in range(6):
        perms = helpers.permutations(n)
        for sigma in perms:
            f = basis_element('F', sigma)
            for tau in perms:
                assert pairing(f, basis_element('G', tau)) == (1 if sigma == tau else 0)


def test_realize():
    assert realize(basis_element('G', (1,)), 2) == NCPolynomial(2, {(1,): 1, (2,): 1})
    assert realize(basis_element('G', (1, 2)), 2) == NCPolynomial(2, {(1, 1): 1, (1, 2): 1, (2, 2): 1})
    assert realize(basis_element('G', (2, 1)), 1) == NCPolynomial(1)
    assert realize(basis_element('F', (1,)), 2) == realize(basis_element('G', (1,)), 2)


def test_ncpoly_product():
    g1 = realize(basis_element('G', (1,)), 2)
    assert g1 * g1 == NCPolynomial(2, {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 1})
    assert ncpoly_product(g1, ncpoly_one(2)) == g1
    assert g1 * g1 == realize(basis_element('G', (1, 2)) + basis_element('G', (2, 1)), 2)
    with pytest.raises(AlphabetMismatchError):
        g1 * ncpoly_one(3)
    with pytest.raises(AlphabetMismatchError):
        NCPolynomial(2, {(3,): 1})
    with pytest.raises(AlphabetMismatchError):
        NCPolynomial(0)


def test_realization_matches_products(helpers):
    for basis in ('G', 'F'):
        for i in range(1, 3):
            for j in range(1, 5 - i):
                for a in helpers.permutations(i):
                    for b in helpers.permutations(j):
                        x = basis_element(basis, a)
                        y = basis_element(basis, b)
                        assert realize(x * y, 3) == realize(x, 3) * realize(y, 3)


def test_commutative_image():
    assert commutative_image(basis_element('F', (2, 1, 3))) == QSymImage({(1, 2): 1})
    assert commutative_image(basis_element('F', (1, 2, 3, 4))) == QSymImage({(4,): 1})
    x = basis_element('F', (2, 1, 3)) + basis_element('F', (2, 3, 1))
    assert commutative_image(x) == QSymImage({(1, 2): 1, (2, 1): 1})
    assert commutative_image(basis_element('G', (2, 3, 1))) == QSymImage({(1, 2): 1})


def test_commutative_image_is_multiplicative(helpers):
    for i in range(1, 4):
        for j in range(1, 5 - i):
            for a in helpers.permutations(i):
                for b in helpers.permutations(j):
                    x = basis_element('F', a)
                    y = basis_element('F', b)
                    assert commutative_image(x * y) == commutative_image(x) * commutative_image(y)


def test_qsym_image_arithmetic():
    x = QSymImage({(1, 2): 2, (3,): 1})
    assert (x - x) == QSymImage()
    assert not QSymImage({(1,): 0})
    assert x.scale(-1) == -x
    assert x.homogeneous_part(3) == x
    assert x.homogeneous_part(2) == QSymImage()


def test_element_json():
    x = basis_element('G', (3, 1, 2), -1)
    data = x.to_json()
    assert data == {'basis': 'G', 'degree': 3, 'terms': [{'perm': '3,1,2', 'coeff': '-1'}]}
    assert HomogeneousElement.from_json(data) == x
    y = to_G(basis_element('S', (3, 1, 2)))
    assert [term['perm'] for term in y.to_json()['terms']] == ['1,2,3', '2,1,3', '3,1,2']


def test_s_to_g_uses_down_sets(helpers):
    for sigma in helpers.permutations(4):
        assert sorted(to_G(basis_element('S', sigma)).coeffs) == list(weak_down_set(sigma))
