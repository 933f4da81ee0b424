'''
Homogeneous elements of FQSym in the F, G and S bases.
'''
import logging
from collections import defaultdict

from quasisym.errors import BadIndexError, BasisMismatchError, DegreeMismatchError
from quasisym.permcore import (
    alpha, coarsenings, compose, convolution, descent_composition, format_permutation,
    inverse, is_permutation, left_shifted_concat, parse_permutation, shifted_shuffle, weak_down_set
)

__all__ = [
    'BASES',
    'SparseElement',
    'HomogeneousElement',
    'basis_element',
    'zero',
    'one',
    'add',
    'negate',
    'scale',
    'product',
    'to_G',
    'to_F',
    'to_S',
    'convert',
    'pairing',
]

logger = logging.getLogger(__name__)

BASES = ('F', 'G', 'S')


class SparseElement(object):
    '''
    A homogeneous element: a basis tag, a degree and a sparse map from basis
    indices of that degree to integers. Zero coefficients are never stored.

    Subclasses fix what an index is (key_degree), how it is written on the
    wire (key_field, format_key, parse_key) and how two basis elements multiply.
    '''
    key_field = 'key'

    def __init__(self, basis, degree, coeffs=None):
        self.basis = basis
        self.degree = degree
        self.coeffs = {}
        for key, coeff in (coeffs or {}).items():
            key = tuple(key)
            if not self.is_valid_key(key):
                raise BadIndexError(f'Bad index: {self.format_key(key)} is not a basis index of {basis}')
            if self.key_degree(key) != degree:
                raise DegreeMismatchError(
                    f'Degree mismatch: index {self.format_key(key)} in an element of degree {degree}')
            if coeff:
                self.coeffs[key] = int(coeff)

    @staticmethod
    def is_valid_key(key):
        return True

    @staticmethod
    def key_degree(key):
        return len(key)

    @staticmethod
    def format_key(key):
        return format_permutation(key)

    @staticmethod
    def parse_key(text):
        return parse_permutation(text)

    def _new(self, coeffs, degree=None):
        return type(self)(self.basis, self.degree if degree is None else degree, coeffs)

    def _check_compatible(self, other):
        if not isinstance(other, SparseElement) or self.basis != other.basis:
            raise BasisMismatchError(
                f'Basis mismatch: {self.basis} and {getattr(other, "basis", type(other).__name__)}')
        if self.degree != other.degree:
            raise DegreeMismatchError(f'Degree mismatch: {self.degree} and {other.degree}')

    def terms(self):
        return sorted(self.coeffs.items())

    def coefficient(self, key):
        return self.coeffs.get(tuple(key), 0)

    def constant(self):
        return self.coeffs.get((), 0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def add(self, other):
        self._check_compatible(other)
        coeffs = dict(self.coeffs)
        for key, coeff in other.coeffs.items():
            coeffs[key] = coeffs.get(key, 0) + coeff
        return self._new(coeffs)

    def negate(self):
        return self._new({key: -coeff for key, coeff in self.coeffs.items()})

    def scale(self, factor):
        return self._new({key: factor * coeff for key, coeff in self.coeffs.items()})

    def multiply_keys(self, a, b):
        '''Returns the product of two basis elements as a list of keys.'''
        raise NotImplementedError

    def product(self, other):
        if not isinstance(other, SparseElement) or self.basis != other.basis:
            raise BasisMismatchError(
                f'Basis mismatch: cannot multiply {self.basis} by {getattr(other, "basis", type(other).__name__)}')
        acc = defaultdict(int)
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                for key in self.multiply_keys(a, b):
                    acc[key] += ca * cb
        return self._new(acc, degree=self.degree + other.degree)

    __add__ = add
    __neg__ = negate

    def __sub__(self, other):
        return self.add(other.negate())

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self.product(other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SparseElement):
            return NotImplemented
        return (type(self) is type(other) and self.basis == other.basis
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.basis, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return '0'
        return ' + '.join(f'{coeff}*{self.basis}[{self.format_key(key)}]' for key, coeff in self.terms())

    def to_json(self):
        return {
            'basis': self.basis,
            'degree': self.degree,
            'terms': [
                {self.key_field: self.format_key(key), 'coeff': str(coeff)}
                for key, coeff in self.terms()
            ]
        }

    @classmethod
    def from_json(cls, data):
        coeffs = {cls.parse_key(term[cls.key_field]): int(term['coeff']) for term in data['terms']}
        return cls(data['basis'], data['degree'], coeffs)


class HomogeneousElement(SparseElement):
    key_field = 'perm'

    def __init__(self, basis, degree, coeffs=None):
        if basis not in BASES:
            raise BasisMismatchError(f'Unknown basis: {basis}')
        super().__init__(basis, degree, coeffs)

    @staticmethod
    def is_valid_key(key):
        return is_permutation(key)

    def multiply_keys(self, a, b):
        if self.basis == 'F':
            return shifted_shuffle(a, b)
        if self.basis == 'G':
            return convolution(a, b)
        return [left_shifted_concat(a, b)]


def basis_element(basis, p, coeff=1):
    p = tuple(p)
    return HomogeneousElement(basis, len(p), {p: coeff})


def zero(basis, degree):
    return HomogeneousElement(basis, degree)


def one(basis):
    return basis_element(basis, ())


def add(a, b):
    return a.add(b)


def negate(a):
    return a.negate()


def scale(factor, a):
    return a.scale(factor)


def product(a, b):
    return a.product(b)


def _relabel(x, basis, relabel):
    acc = defaultdict(int)
    for key, coeff in x.coeffs.items():
        acc[relabel(key)] += coeff
    return HomogeneousElement(basis, x.degree, acc)


def _s_to_g(x):
    acc = defaultdict(int)
    for sigma, coeff in x.coeffs.items():
        for tau in weak_down_set(sigma):
            acc[tau] += coeff
    return HomogeneousElement('G', x.degree, acc)


def _g_to_s(x):
    if x.degree == 0:
        return HomogeneousElement('S', 0, x.coeffs)
    acc = defaultdict(int)
    for sigma, coeff in x.coeffs.items():
        for I in coarsenings(descent_composition(inverse(sigma))):
            sign = -1 if len(I) % 2 == 0 else 1
            acc[compose(alpha(I), sigma)] += sign * coeff
    return HomogeneousElement('S', x.degree, acc)


def to_G(x):
    if x.basis == 'G':
        return x
    if x.basis == 'F':
        return _relabel(x, 'G', inverse)
    return _s_to_g(x)


def to_F(x):
    if x.basis == 'F':
        return x
    return _relabel(to_G(x), 'F', inverse)


def to_S(x):
    if x.basis == 'S':
        return x
    return _g_to_s(to_G(x))


CONVERTERS = {'F': to_F, 'G': to_G, 'S': to_S}


def convert(x, basis):
    return CONVERTERS[basis](x)


def pairing(a, b):
    '''<a, b>, with <F_s, G_t> = 1 if s = t and 0 otherwise.'''
    if a.degree != b.degree:
        raise DegreeMismatchError(f'Degree mismatch: cannot pair degree {a.degree} with degree {b.degree}')
    a_f = to_F(a)
    b_g = to_G(b)
    return sum(coeff * b_g.coefficient(sigma) for sigma, coeff in a_f.coeffs.items())
