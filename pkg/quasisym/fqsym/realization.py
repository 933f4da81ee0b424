'''
Realization of G-basis elements as noncommutative polynomials over a finite
alphabet {1..m}: G_s(A) is the sum of the words w with Std(w) = s.
'''
from collections import defaultdict

from quasisym.errors import AlphabetMismatchError
from quasisym.permcore import all_words, format_permutation, standardize

from .elements import to_G

DEFAULT_ALPHABET_SIZE = 3


class NCPolynomial(object):
    def __init__(self, alphabet_size, coeffs=None):
        if alphabet_size < 1:
            raise AlphabetMismatchError(f'Bad alphabet: size must be positive, got {alphabet_size}')
        self.alphabet_size = alphabet_size
        self.coeffs = {}
        for word, coeff in (coeffs or {}).items():
            word = tuple(word)
            if any(letter < 1 or letter > alphabet_size for letter in word):
                raise AlphabetMismatchError(f'Bad alphabet: word {format_permutation(word)} is not over 1..{alphabet_size}')
            if coeff:
                self.coeffs[word] = coeff

    def terms(self):
        return sorted(self.coeffs.items())

    def _check_alphabet(self, other):
        if self.alphabet_size != other.alphabet_size:
            raise AlphabetMismatchError(
                f'Alphabet mismatch: {self.alphabet_size} and {other.alphabet_size}')

    def __add__(self, other):
        self._check_alphabet(other)
        coeffs = dict(self.coeffs)
        for word, coeff in other.coeffs.items():
            coeffs[word] = coeffs.get(word, 0) + coeff
        return NCPolynomial(self.alphabet_size, coeffs)

    def __mul__(self, other):
        return ncpoly_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.alphabet_size == other.alphabet_size and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return '0'
        return ' + '.join(f'{coeff}*w[{format_permutation(word)}]' for word, coeff in self.terms())


def ncpoly_one(alphabet_size):
    return NCPolynomial(alphabet_size, {(): 1})


def ncpoly_product(p, q):
    '''Concatenation product, extended bilinearly.'''
    p._check_alphabet(q)
    acc = defaultdict(int)
    for u, cu in p.coeffs.items():
        for v, cv in q.coeffs.items():
            acc[u + v] += cu * cv
    return NCPolynomial(p.alphabet_size, acc)


def realize(x, alphabet_size=DEFAULT_ALPHABET_SIZE):
    x = to_G(x)
    acc = {}
    for word in all_words(x.degree, alphabet_size):
        coeff = x.coefficient(standardize(word))
        if coeff:
            acc[word] = coeff
    return NCPolynomial(alphabet_size, acc)
