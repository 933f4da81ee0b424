'''
Compositions, part sets and descent classes.
'''
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import NewType

from quasisym.errors import BadIndexError, DegreeMismatchError, EnumerationBoundError, PartSetError

from .words import (
    DEFAULT_ENUMERATION_BOUND, compose, descent_composition, inverse
)

__all__ = [
    'Composition',
    'PART_SET_KINDS',
    'PartSet',
    'weight',
    'descents_of',
    'composition_from_descents',
    'compositions_with_parts',
    'coarser',
    'coarsenings',
    'is_hook',
    'hook',
    'alpha',
    'omega',
    'diam',
    'hat',
    'descent_class',
    'format_composition',
    'parse_composition',
]

# a sequence of positive parts
Composition = NewType('Composition', tuple)

PART_SET_KINDS = ('all', 'even', 'odd', 'explicit')


@dataclass(frozen=True)
class PartSet:
    '''
    The allowed parts E of the compositions in C(E).
    '''
    kind: str
    parts: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in PART_SET_KINDS:
            raise PartSetError(f'Bad part set: unknown kind {self.kind!r}')
        if self.kind == 'explicit':
            if not self.parts:
                raise PartSetError('Bad part set: explicit part set is empty')
            if any(not isinstance(part, int) or part < 1 for part in self.parts):
                raise PartSetError(f'Bad part set: parts must be positive integers, got {sorted(self.parts)}')
        elif self.parts:
            raise PartSetError(f'Bad part set: {self.kind} takes no explicit parts')

    @classmethod
    def from_spec(cls, spec):
        '''
        Parses "all", "even", "odd" or "set:a,b,c".
        '''
        spec = spec.strip()
        if spec in ('all', 'even', 'odd'):
            return cls(spec)
        if spec.startswith('set:'):
            try:
                parts = frozenset(int(part) for part in spec[len('set:'):].split(','))
            except ValueError:
                raise PartSetError(f'Bad part set: malformed spec {spec!r}')
            return cls('explicit', parts)
        raise PartSetError(f'Bad part set: malformed spec {spec!r}')

    def spec(self):
        if self.kind == 'explicit':
            return 'set:' + ','.join(str(part) for part in sorted(self.parts))
        return self.kind

    def contains(self, part):
        if part < 1:
            return False
        if self.kind == 'all':
            return True
        if self.kind == 'even':
            return part % 2 == 0
        if self.kind == 'odd':
            return part % 2 == 1
        return part in self.parts

    def __str__(self):
        return self.spec()


def weight(I):
    return sum(I)


def descents_of(I):
    '''The partial sums of all but the last part.'''
    total = 0
    result = []
    for part in I[:-1]:
        total += part
        result.append(total)
    return tuple(result)


def composition_from_descents(descents, n):
    if n == 0:
        return ()
    cuts = (0,) + tuple(sorted(descents)) + (n,)
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


@lru_cache(maxsize=None)
def compositions_with_parts(E, n):
    '''
    All compositions of n with every part in E, in lexicographic order.
    '''
    if n == 0:
        return ((),)
    result = []
    for first in range(1, n + 1):
        if not E.contains(first):
            continue
        for rest in compositions_with_parts(E, n - first):
            result.append((first,) + rest)
    return tuple(result)


def coarser(J, I):
    '''
    J is coarser than I: Des(J) is a subset of Des(I).
    '''
    if weight(J) != weight(I):
        raise DegreeMismatchError(f'Weight mismatch: {format_composition(J)} and {format_composition(I)}')
    return set(descents_of(J)) <= set(descents_of(I))


@lru_cache(maxsize=None)
def coarsenings(I):
    '''
    All J with coarser(J, I), in lexicographic order.
    '''
    descents = descents_of(I)
    n = weight(I)
    result = []
    for size in range(len(descents) + 1):
        for subset in combinations(descents, size):
            result.append(composition_from_descents(subset, n))
    return tuple(sorted(result))


def is_hook(I):
    '''I = (1^k, n-k).'''
    return len(I) > 0 and all(part == 1 for part in I[:-1])


def hook(k, n):
    return (1,) * k + (n - k,)


@lru_cache(maxsize=None)
def alpha(I):
    '''
    The minimal-length permutation with descent composition I: the identity
    with every maximal run of consecutive descent positions reversed.
    '''
    n = weight(I)
    descents = set(descents_of(I))
    values = []
    start = 1
    for position in range(1, n + 1):
        if position in descents:
            continue
        values.extend(range(position, start - 1, -1))
        start = position + 1
    return tuple(values)


@lru_cache(maxsize=None)
def omega(I):
    '''
    The maximal-length permutation with descent composition I: increasing
    blocks of sizes I filled with decreasing ranges of values.
    '''
    high = weight(I)
    values = []
    for part in I:
        values.extend(range(high - part + 1, high + 1))
        high -= part
    return tuple(values)


@lru_cache(maxsize=None)
def diam(I):
    '''diam(I) = alpha(I) omega(I)^-1'''
    return compose(alpha(I), inverse(omega(I)))


def hat(p):
    '''p omega(C(p))^-1'''
    return compose(p, inverse(omega(descent_composition(p))))


def _fill_blocks(values, I):
    if not I:
        yield ()
        return
    for chosen in combinations(values, I[0]):
        remaining = tuple(v for v in values if v not in chosen)
        for rest in _fill_blocks(remaining, I[1:]):
            yield chosen + rest


def descent_class(I, bound=DEFAULT_ENUMERATION_BOUND):
    '''
    D_I, built by filling the blocks of I with increasing runs and keeping the
    fillings that descend at every block boundary.
    '''
    n = weight(I)
    if n > bound:
        raise EnumerationBoundError(f'Enumeration bound exceeded: descent class of weight {n} with bound {bound}')
    boundaries = descents_of(I)
    result = [
        p for p in _fill_blocks(tuple(range(1, n + 1)), I)
        if all(p[d - 1] > p[d] for d in boundaries)
    ]
    return sorted(result)


def format_composition(I):
    return '[' + ','.join(str(part) for part in I) + ']'


def parse_composition(text):
    text = text.strip()
    if not (text.startswith('[') and text.endswith(']')):
        raise BadIndexError(f'Not a composition: {text}')
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        I = tuple(int(part) for part in body.split(','))
    except ValueError:
        raise BadIndexError(f'Not a composition: {text}')
    if any(part < 1 for part in I):
        raise BadIndexError(f'Not a composition: {text}')
    return I
