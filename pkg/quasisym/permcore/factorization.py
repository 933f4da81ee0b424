'''
Factorization of permutations for the left-shifted concatenation u[|v|].v.
'''
from functools import reduce

from .words import left_shifted_concat, standardize


def split_points(p):
    '''Positions i, 0 < i < n, where p(1..i) are the i largest values.'''
    n = len(p)
    points = []
    smallest = n + 1
    for i in range(1, n):
        smallest = min(smallest, p[i - 1])
        if smallest == n - i + 1:
            points.append(i)
    return points


def anticonnected_factors(p):
    '''
    The maximal factorization p = f1 > f2 > ... > fr into anticonnected
    permutations.

    >>> anticonnected_factors((2, 3, 1))
    [(1, 2), (1,)]
    '''
    if not p:
        return []
    cuts = [0] + split_points(p) + [len(p)]
    return [standardize(p[cuts[i]:cuts[i + 1]]) for i in range(len(cuts) - 1)]


def is_anticonnected(p):
    return len(p) > 0 and not split_points(p)


def left_shifted_product(factors):
    return reduce(left_shifted_concat, factors, ())
