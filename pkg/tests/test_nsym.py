import pytest

from quasisym.errors import BadIndexError, BasisMismatchError, DegreeMismatchError, EnumerationBoundError
from quasisym.fqsym import basis_element, commutative_image, series_inverse
from quasisym.identities import hook_expansion
from quasisym.nsym import (
    RIBBON, RibbonElement, complete, elementary, embed, embed_series, h_n, h_series,
    lambda1_sigma1, ribbon, ribbon_product, ribbon_series, tanh_inverse_series, tanh_shape
)
from quasisym.permcore import hook


def test_ribbon_product():
    assert ribbon((1,)) * ribbon((1,)) == ribbon((1, 1)) + ribbon((2,))
    assert ribbon_product(ribbon((2,)), ribbon((1,))) == ribbon((2, 1)) + ribbon((3,))
    x = ribbon((1, 2)) + ribbon((3,), 2)
    assert ribbon(()) * x == x
    assert x * ribbon(()) == x


def test_ribbon_elements_are_checked():
    with pytest.raises(BasisMismatchError):
        RibbonElement('F', 1, {(1,): 1})
    with pytest.raises(DegreeMismatchError):
        RibbonElement(RIBBON, 3, {(1, 1): 1})
    with pytest.raises(BadIndexError):
        RibbonElement(RIBBON, 2, {(2, 0): 1})
    with pytest.raises(BasisMismatchError):
        ribbon((1,)) * basis_element('F', (1,))


def test_embed():
    F = lambda p: basis_element('F', p)
    assert embed(ribbon((1, 2))) == F((2, 1, 3)) + F((2, 3, 1))
    assert embed(ribbon((4,))) == F((1, 2, 3, 4))
    assert embed(ribbon((1,)) * ribbon((1,))) == embed(ribbon((1,))) * embed(ribbon((1,)))
    with pytest.raises(EnumerationBoundError):
        embed(ribbon((5,)), bound=4)


def test_embed_is_multiplicative(helpers):
    for i in range(1, 6):
        for j in range(1, 7 - i):
            for I in helpers.compositions(i):
                for J in helpers.compositions(j):
                    assert embed(ribbon(I) * ribbon(J)) == embed(ribbon(I)) * embed(ribbon(J))


def test_complete_and_elementary():
    assert complete(3) == ribbon((3,))
    assert elementary(3) == ribbon((1, 1, 1))
    assert complete(0) == elementary(0) == ribbon(())


def test_h_n():
    assert h_n(0) == ribbon(())
    assert h_n(1) == ribbon((1,))
    assert h_n(2) == ribbon((2,)) + ribbon((1, 1))
    assert h_n(3) == ribbon((3,)) + ribbon((1, 2)) + ribbon((1, 1, 1))
    assert h_series(3)[2] == h_n(2)


def test_lambda1_sigma1():
    series = lambda1_sigma1(3)
    assert series[0] == ribbon(())
    assert series[1] == ribbon((1,), 2)
    assert series[2] == ribbon((2,), 2) + ribbon((1, 1), 2)
    for n in range(1, 4):
        assert series[n] == h_n(n).scale(2)


def test_tanh_inverse_series():
    tanh = tanh_inverse_series(5)
    assert tanh[1] == ribbon((1,), -1)
    assert tanh[2].is_zero()
    assert tanh[3] == ribbon((2, 1))
    assert tanh[4].is_zero()
    assert tanh[5] == ribbon((2, 2, 1), -1)
    assert tanh_shape(3) == (2, 2, 2, 1)


def test_h_series_inverse_low_degrees():
    # H_1 = R_1, H_2 = R_2 + R_11, H_3 = R_3 + R_12 + R_111
    inverse = series_inverse(h_series(3))
    assert inverse[1] == ribbon((1,), -1)
    assert inverse[2].is_zero()
    assert inverse[3] == ribbon((2, 1))
    assert inverse[3] != ribbon((1, 2))


def test_h_series_inverse_is_tanh():
    assert series_inverse(h_series(9)) == tanh_inverse_series(9)


def test_embedded_h_series_inverse():
    assert series_inverse(embed_series(h_series(5))) == embed_series(tanh_inverse_series(5))


def test_hook_expansion(helpers):
    for n in range(1, 7):
        for k in range(n):
            assert commutative_image(embed(ribbon(hook(k, n)))) == hook_expansion(n, k)


def test_ribbon_series_zero_fill():
    series = ribbon_series(3, {1: ribbon((1,))})
    assert series.order == 3
    assert series[2].is_zero()
    assert series[0].is_zero()


def test_ribbon_json():
    x = ribbon((1, 2, 2))
    data = x.to_json()
    assert data == {'basis': 'R', 'degree': 5, 'terms': [{'comp': '[1,2,2]', 'coeff': '1'}]}
    assert RibbonElement.from_json(data) == x
    assert repr(ribbon((2,), -3)) == '-3*R[[2]]'
