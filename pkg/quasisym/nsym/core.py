'''
Noncommutative symmetric functions in the ribbon basis, and their embedding
into FQSym.
'''
import logging
from collections import defaultdict

from quasisym.errors import BasisMismatchError
from quasisym.fqsym import HomogeneousElement, SparseElement, TruncatedSeries
from quasisym.permcore import (
    DEFAULT_ENUMERATION_BOUND, descent_class, format_composition, hook, inverse,
    parse_composition
)

__all__ = [
    'RIBBON',
    'RibbonElement',
    'ribbon',
    'ribbon_product',
    'embed',
    'embed_series',
    'complete',
    'elementary',
    'h_n',
    'ribbon_series',
    'h_series',
    'lambda1_sigma1',
    'TANH_SHAPE_READING',
    'tanh_shape',
    'tanh_inverse_series',
]

logger = logging.getLogger(__name__)

RIBBON = 'R'

# With R_I R_J = R_(I.J) + R_(I|>J) and hooks (1^k, n-k), the odd parts of H^-1
# carry the twos first.
TANH_SHAPE_READING = '(2^p,1)'


class RibbonElement(SparseElement):
    key_field = 'comp'

    def __init__(self, basis, degree, coeffs=None):
        if basis != RIBBON:
            raise BasisMismatchError(f'Unknown basis: {basis}')
        super().__init__(basis, degree, coeffs)

    @staticmethod
    def is_valid_key(key):
        return all(part >= 1 for part in key)

    @staticmethod
    def key_degree(key):
        return sum(key)

    @staticmethod
    def format_key(key):
        return format_composition(key)

    @staticmethod
    def parse_key(text):
        return parse_composition(text)

    def multiply_keys(self, I, J):
        '''R_I R_J = R_(I.J) + R_(I|>J), where I|>J merges the last part of I with the first of J.'''
        if not I:
            return [J]
        if not J:
            return [I]
        return [I + J, I[:-1] + (I[-1] + J[0],) + J[1:]]


def ribbon(I, coeff=1):
    I = tuple(I)
    return RibbonElement(RIBBON, sum(I), {I: coeff})


def ribbon_product(a, b):
    return a.product(b)


def embed(x, bound=DEFAULT_ENUMERATION_BOUND):
    '''
    R_I is the sum of F_s over the s with C(s^-1) = I, that is over the
    inverses of the descent class D_I.
    '''
    acc = defaultdict(int)
    for I, coeff in x.coeffs.items():
        for tau in descent_class(I, bound=bound):
            acc[inverse(tau)] += coeff
    return HomogeneousElement('F', x.degree, acc)


def embed_series(A, bound=DEFAULT_ENUMERATION_BOUND):
    return TruncatedSeries([embed(part, bound=bound) for part in A.parts])


def complete(n):
    '''S_n = R_(n).'''
    return ribbon((n,) if n else ())


def elementary(n):
    '''Lambda_n = R_(1^n).'''
    return ribbon((1,) * n)


def h_n(n):
    '''H_n, the sum of the hook ribbons R_(1^k, n-k) for k < n.'''
    if n == 0:
        return ribbon(())
    return RibbonElement(RIBBON, n, {hook(k, n): 1 for k in range(n)})


def ribbon_series(order, parts):
    return TruncatedSeries.from_degrees(RIBBON, order, parts, element_cls=RibbonElement)


def h_series(order):
    return ribbon_series(order, {n: h_n(n) for n in range(order + 1)})


def lambda1_sigma1(order):
    parts = {}
    for n in range(order + 1):
        total = RibbonElement(RIBBON, n)
        for k in range(n + 1):
            total = total + elementary(k) * complete(n - k)
        parts[n] = total
    return ribbon_series(order, parts)


def tanh_shape(p):
    return (2,) * p + (1,)


def tanh_inverse_series(order):
    '''
    1 - sum over p of (-1)^p R_(2^p,1), zero in positive even degrees.
    '''
    parts = {0: ribbon(())}
    p = 0
    while 2 * p + 1 <= order:
        sign = -1 if p % 2 == 0 else 1
        parts[2 * p + 1] = ribbon(tanh_shape(p), sign)
        p += 1
    return ribbon_series(order, parts)
