'''
Graded series truncated at a fixed order N, stored degreewise.

The coefficient carrier is any SparseElement subclass, so the same Cauchy
product and inversion recurrence serve FQSym and the ribbon basis of NSym.
'''
import logging

from quasisym.errors import BasisMismatchError, DegreeMismatchError, NotInvertibleError

from .elements import HomogeneousElement, convert

logger = logging.getLogger(__name__)


class TruncatedSeries(object):
    def __init__(self, parts):
        parts = list(parts)
        if not parts:
            raise DegreeMismatchError('A truncated series needs at least its degree 0 part')
        first = parts[0]
        for degree, part in enumerate(parts):
            if part.degree != degree:
                raise DegreeMismatchError(f'Degree mismatch: part {degree} has degree {part.degree}')
            if type(part) is not type(first) or part.basis != first.basis:
                raise BasisMismatchError(f'Basis mismatch: series mixes {first.basis} and {part.basis}')
        self.parts = parts

    @classmethod
    def from_degrees(cls, basis, order, parts, element_cls=HomogeneousElement):
        '''
        Builds a series from a {degree: element} map; missing degrees are zero.
        '''
        return cls([parts.get(d, element_cls(basis, d)) for d in range(order + 1)])

    @property
    def order(self):
        return len(self.parts) - 1

    @property
    def basis(self):
        return self.parts[0].basis

    @property
    def element_cls(self):
        return type(self.parts[0])

    def __getitem__(self, degree):
        return self.parts[degree]

    def __iter__(self):
        return iter(self.parts)

    def _check_compatible(self, other):
        if self.element_cls is not other.element_cls or self.basis != other.basis:
            raise BasisMismatchError(f'Basis mismatch: {self.basis} and {other.basis}')
        if self.order != other.order:
            raise DegreeMismatchError(f'Order mismatch: {self.order} and {other.order}')

    def __add__(self, other):
        self._check_compatible(other)
        return TruncatedSeries([a + b for a, b in zip(self.parts, other.parts)])

    def __neg__(self):
        return TruncatedSeries([-a for a in self.parts])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return series_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.element_cls is other.element_cls and self.basis == other.basis
                and self.parts == other.parts)

    def __repr__(self):
        return f'TruncatedSeries(basis={self.basis}, order={self.order}, parts={self.parts})'

    def to_json(self):
        return {
            'basis': self.basis,
            'order': self.order,
            'parts': [part.to_json() for part in self.parts]
        }


def unit_series(basis, order, element_cls=HomogeneousElement):
    return TruncatedSeries.from_degrees(basis, order, {0: element_cls(basis, 0, {(): 1})}, element_cls)


def series_product(A, B):
    '''
    Cauchy product: the degree d part is the sum of A_k B_(d-k); terms above
    the order are dropped.
    '''
    A._check_compatible(B)
    parts = []
    for d in range(A.order + 1):
        total = A.element_cls(A.basis, d)
        for k in range(d + 1):
            if A[k] and B[d - k]:
                total = total + A[k] * B[d - k]
        parts.append(total)
    return TruncatedSeries(parts)


def series_inverse(A):
    '''
    Q_0 = A_0^-1 and Q_d = -A_0^-1 (A_1 Q_(d-1) + ... + A_d Q_0), for A_0 = +1 or -1.
    '''
    constant = A[0].constant()
    if constant not in (1, -1):
        raise NotInvertibleError(f'Constant term {constant} is not invertible over the integers')
    parts = [A[0]]
    for d in range(1, A.order + 1):
        total = A.element_cls(A.basis, d)
        for k in range(1, d + 1):
            if A[k] and parts[d - k]:
                total = total + A[k] * parts[d - k]
        parts.append(total.scale(-constant))
        logger.debug(f'Inverted degree {d}: {len(parts[d])} terms')
    return TruncatedSeries(parts)


def series_convert(A, basis):
    return TruncatedSeries([convert(part, basis) for part in A.parts])


def residuals(A, B):
    '''(degree, A_d - B_d) for every degree.'''
    A._check_compatible(B)
    return [(d, a - b) for d, (a, b) in enumerate(zip(A.parts, B.parts))]
