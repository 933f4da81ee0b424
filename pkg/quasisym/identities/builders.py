'''
The series whose inverses are checked: both sides of the inversion theorem
for a part set E, and Ung's three series with their conjectured inverses.
'''
import logging
from collections import defaultdict

from quasisym.fqsym import HomogeneousElement, TruncatedSeries, series_convert
from quasisym.permcore import (
    DEFAULT_ENUMERATION_BOUND, PartSet, all_permutations, compositions_with_parts,
    descent_class, diam, hat, omega
)
from quasisym.utils import progress

__all__ = [
    'UNG_PART_SETS',
    'H2_SHAPE_READING',
    'alternating_omega_series',
    'theorem_lhs',
    'theorem_rhs',
    'ung_series_f',
    'ung_series',
    'ung_conjectured_inverse',
    'corrupt',
]

logger = logging.getLogger(__name__)

UNG_PART_SETS = {
    'h1': PartSet('all'),
    'h2': PartSet('explicit', frozenset({2})),
    'h3': PartSet('even'),
}

# how "permutations of shape 2^2p" is read for H2: descent composition (2^p)
H2_SHAPE_READING = '(2^p)'


def _check_which(which):
    if which not in UNG_PART_SETS:
        raise ValueError(f'Unknown Ung series {which!r}, expected one of {sorted(UNG_PART_SETS)}')


def alternating_omega_series(basis, E, order):
    '''
    The sum over I in C(E) of (-1)^l(I) B_omega(I), for B the F or G basis.
    '''
    parts = {}
    for n in range(order + 1):
        coeffs = defaultdict(int)
        for I in compositions_with_parts(E, n):
            coeffs[omega(I)] += (-1) ** len(I)
        parts[n] = HomogeneousElement(basis, n, coeffs)
    return TruncatedSeries.from_degrees(basis, order, parts)


def theorem_lhs(E, order):
    return alternating_omega_series('G', E, order)


def theorem_rhs(E, order):
    '''The sum over K in C(E) of S^diam(K).'''
    parts = {}
    for n in range(order + 1):
        coeffs = defaultdict(int)
        for K in compositions_with_parts(E, n):
            coeffs[diam(K)] += 1
        parts[n] = HomogeneousElement('S', n, coeffs)
    return TruncatedSeries.from_degrees('S', order, parts)


def ung_series_f(which, order):
    '''H1, H2 or H3 written in the F basis.'''
    _check_which(which)
    return alternating_omega_series('F', UNG_PART_SETS[which], order)


def ung_series(which, order):
    return series_convert(ung_series_f(which, order), 'G')


def _conjectured_support(which, n, bound):
    if which == 'h1':
        return all_permutations(n, bound=bound)
    if which == 'h2':
        if n % 2:
            return []
        return descent_class((2,) * (n // 2), bound=bound)
    return (
        sigma
        for I in compositions_with_parts(UNG_PART_SETS['h3'], n)
        for sigma in descent_class(I, bound=bound)
    )


def ung_conjectured_inverse(which, order, bound=DEFAULT_ENUMERATION_BOUND):
    '''
    The sum of G_hat(s) over all s (h1), over s of shape (2^p) (h2), or over
    s whose descent composition has only even parts (h3).
    '''
    _check_which(which)
    parts = {}
    for n in progress(range(order + 1), desc=f'conjectured {which}', logger=logger):
        coeffs = defaultdict(int)
        for sigma in _conjectured_support(which, n, bound):
            coeffs[hat(sigma)] += 1
        parts[n] = HomogeneousElement('G', n, coeffs)
    return TruncatedSeries.from_degrees('G', order, parts)


def corrupt(series, degree, key, delta=1):
    '''
    A copy of `series` with the coefficient of `key` in degree `degree`
    shifted by `delta`; used as a negative control.
    '''
    part = series[degree]
    bump = type(part)(part.basis, degree, {tuple(key): delta})
    parts = list(series.parts)
    parts[degree] = part + bump
    return TruncatedSeries(parts)
