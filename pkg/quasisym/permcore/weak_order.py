'''
The weak order on S_n, as inclusion of position-inversion sets.

A cover t < s exchanges the values v and v+1 of s when v+1 stands to the
left of v, which removes exactly one inversion.
'''
from collections import deque
from functools import lru_cache

from quasisym.errors import DegreeMismatchError

from .words import format_permutation, inverse, inversions


def _check_degrees(t, s):
    if len(t) != len(s):
        raise DegreeMismatchError(
            f'Degree mismatch: {format_permutation(t)} and {format_permutation(s)}')


def weak_le(t, s):
    _check_degrees(t, s)
    return inversions(t) <= inversions(s)


def lower_covers(s):
    positions = inverse(s)
    covers = []
    for v in range(1, len(s)):
        if positions[v] < positions[v - 1]:
            swapped = list(s)
            swapped[positions[v] - 1], swapped[positions[v - 1] - 1] = v, v + 1
            covers.append(tuple(swapped))
    return covers


@lru_cache(maxsize=4096)
def weak_down_set(s):
    '''
    {t : t <= s}, by breadth-first traversal of lower covers, sorted.
    '''
    seen = {tuple(s)}
    queue = deque([tuple(s)])
    while queue:
        current = queue.popleft()
        for cover in lower_covers(current):
            if cover not in seen:
                seen.add(cover)
                queue.append(cover)
    return tuple(sorted(seen))


def weak_interval(a, b):
    _check_degrees(a, b)
    if not weak_le(a, b):
        return []
    lower = inversions(a)
    return [t for t in weak_down_set(tuple(b)) if lower <= inversions(t)]
