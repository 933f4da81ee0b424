'''
Commutative image of FQSym in quasi-symmetric functions, on the fundamental
basis: F_s maps to F_C(s).
'''
from collections import defaultdict

from quasisym.permcore import alpha, descent_composition, format_composition

from .elements import basis_element, to_F


class QSymImage(object):
    def __init__(self, coeffs=None):
        self.coeffs = {tuple(I): c for I, c in (coeffs or {}).items() if c}

    def terms(self):
        return sorted(self.coeffs.items(), key=lambda item: (sum(item[0]), item[0]))

    def homogeneous_part(self, degree):
        return QSymImage({I: c for I, c in self.coeffs.items() if sum(I) == degree})

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for I, c in other.coeffs.items():
            coeffs[I] = coeffs.get(I, 0) + c
        return QSymImage(coeffs)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return QSymImage({I: factor * c for I, c in self.coeffs.items()})

    def __mul__(self, other):
        '''
        Pushforward product: F_I F_J is the image of F_alpha(I) F_alpha(J).
        '''
        acc = defaultdict(int)
        for I, c in self.coeffs.items():
            for J, d in other.coeffs.items():
                for K, e in commutative_image(basis_element('F', alpha(I)) * basis_element('F', alpha(J))).coeffs.items():
                    acc[K] += c * d * e
        return QSymImage(acc)

    def __eq__(self, other):
        if not isinstance(other, QSymImage):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return '0'
        return ' + '.join(f'{c}*F{format_composition(I)}' for I, c in self.terms())


def commutative_image(x):
    acc = defaultdict(int)
    for sigma, coeff in to_F(x).coeffs.items():
        acc[descent_composition(sigma)] += coeff
    return QSymImage(acc)
