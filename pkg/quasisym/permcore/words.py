'''
Words and permutations in one-line notation.

Words are tuples of positive integers; permutations are words containing
each of 1..n exactly once. The empty tuple is the permutation of degree 0.
'''
from itertools import permutations as _itertools_permutations
from typing import Iterator, NewType

from quasisym.errors import BadIndexError, DegreeMismatchError, EnumerationBoundError

__all__ = [
    'Word',
    'Permutation',
    'DEFAULT_ENUMERATION_BOUND',
    'is_permutation',
    'identity',
    'standardize',
    'inverse',
    'compose',
    'mirror',
    'shift',
    'shifted_concat',
    'left_shifted_concat',
    'shifted_shuffle',
    'convolution',
    'descent_set',
    'descent_composition',
    'inversions',
    'length',
    'all_permutations',
    'all_words',
    'format_permutation',
    'parse_permutation',
]

# a word over the ranks 1, 2, 3, ... of a totally ordered alphabet
Word = NewType('Word', tuple)

# a bijection of {1..n} in one-line notation
Permutation = NewType('Permutation', tuple)

DEFAULT_ENUMERATION_BOUND = 9


def is_permutation(w):
    return sorted(w) == list(range(1, len(w) + 1))


def identity(n):
    return tuple(range(1, n + 1))


def standardize(w):
    '''
    Std(w): number the occurrences of the smallest letter 1, 2, ... from left
    to right, then the occurrences of the next letter, and so on.

    >>> standardize((2, 2, 1, 3, 1, 2))
    (3, 4, 1, 6, 2, 5)
    '''
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    result = [0] * len(w)
    for rank, position in enumerate(order, start=1):
        result[position] = rank
    return tuple(result)


def inverse(p):
    result = [0] * len(p)
    for position, value in enumerate(p, start=1):
        result[value - 1] = position
    return tuple(result)


def compose(s, t):
    '''
    (s o t)(i) = s(t(i)).
    '''
    if len(s) != len(t):
        raise DegreeMismatchError(f'Degree mismatch: cannot compose {format_permutation(s)} with {format_permutation(t)}')
    return tuple(s[v - 1] for v in t)


def mirror(w):
    return tuple(reversed(w))


def shift(w, k):
    return tuple(letter + k for letter in w)


def shifted_concat(u, v):
    '''u . v[|u|]'''
    return tuple(u) + shift(v, len(u))


def left_shifted_concat(u, v):
    '''u[|v|] . v'''
    return shift(u, len(v)) + tuple(v)


def _shuffle_two(a, b):
    if not a:
        yield tuple(b)
    elif not b:
        yield tuple(a)
    else:
        for rest in _shuffle_two(a[1:], b):
            yield (a[0],) + rest
        for rest in _shuffle_two(a, b[1:]):
            yield (b[0],) + rest


def shifted_shuffle(u, v):
    '''
    The interleavings of u with v shifted up by |u|, in lexicographic order.

    >>> shifted_shuffle((1, 2), (1,))
    [(1, 2, 3), (1, 3, 2), (3, 1, 2)]
    '''
    return sorted(_shuffle_two(tuple(u), shift(v, len(u))))


def convolution(a, b):
    '''a * b: the inverses of the shifted shuffle of the inverses.'''
    return sorted(inverse(w) for w in _shuffle_two(inverse(a), shift(inverse(b), len(a))))


def descent_set(p):
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def descent_composition(p):
    '''
    C(p), the composition of n whose partial sums are the descents of p.

    >>> descent_composition((3, 4, 1, 6, 2, 5))
    (2, 2, 2)
    '''
    n = len(p)
    if n == 0:
        return ()
    cuts = (0,) + descent_set(p) + (n,)
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def inversions(p):
    '''Position pairs (i, j), i < j, with p(i) > p(j).'''
    n = len(p)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if p[i] > p[j]
    )


def length(p):
    return len(inversions(p))


def all_permutations(n, bound=DEFAULT_ENUMERATION_BOUND) -> Iterator[tuple]:
    '''S_n in lexicographic order.'''
    if n > bound:
        raise EnumerationBoundError(f'Enumeration bound exceeded: S_{n} with bound {bound}')
    return _itertools_permutations(range(1, n + 1))


def all_words(length_, alphabet_size):
    '''Words of the given length over 1..alphabet_size, in lexicographic order.'''
    if length_ == 0:
        yield ()
        return
    for head in range(1, alphabet_size + 1):
        for tail in all_words(length_ - 1, alphabet_size):
            yield (head,) + tail


def format_permutation(p):
    return ','.join(str(v) for v in p)


def parse_permutation(text):
    text = text.strip()
    if not text:
        return ()
    try:
        p = tuple(int(v) for v in text.split(','))
    except ValueError:
        raise BadIndexError(f'Not a permutation: {text}')
    if not is_permutation(p):
        raise BadIndexError(f'Not a permutation: {text}')
    return p
