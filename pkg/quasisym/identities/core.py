'''
Verifiers for the inversion theorem, Ung's conjectures and the quasi-symmetric
Schur and Littlewood analogs. Each returns a VerificationReport.
'''
import logging
import multiprocessing
from collections import defaultdict

from quasisym.errors import EnumerationBoundError
from quasisym.fqsym import (
    QSymImage, basis_element, commutative_image, realize,
    series_convert, series_inverse, series_product, to_G, to_S, unit_series
)
from quasisym.nsym import (
    TANH_SHAPE_READING, embed, embed_series, h_n, h_series, lambda1_sigma1, ribbon, tanh_inverse_series,
    tanh_shape
)
from quasisym.permcore import (
    DEFAULT_ENUMERATION_BOUND, PartSet, all_permutations, alpha, anticonnected_factors,
    coarsenings, compose, compositions_with_parts, descent_class, descent_composition,
    format_composition, format_permutation, hook, inverse, is_anticonnected, is_hook,
    left_shifted_concat, mirror, omega, split_points, standardize, weak_interval
)
from quasisym.utils import progress

from .builders import (
    H2_SHAPE_READING, UNG_PART_SETS, theorem_lhs, theorem_rhs, ung_conjectured_inverse,
    ung_series
)
from .report import VerificationReport, element_residual, failure_residual, timed

__all__ = [
    'DEFAULT_VERIFY_BOUND',
    'DEFAULT_ODD_VERIFY_BOUND',
    'STRUCTURE_BOUND',
    'compare_series',
    'check_inverse_pair',
    'verify_theorem',
    'verify_ung',
    'verify_hook_bijection',
    'hook_expansion',
    'verify_hook_expansion',
    'littlewood_coefficients',
    'verify_qlit',
    'verify_ncschur',
    'verify_oracle',
    'verify_structure',
    'CHECKS',
    'run_checks',
    'default_tasks',
    'verify_all',
]

logger = logging.getLogger(__name__)

DEFAULT_VERIFY_BOUND = 8
DEFAULT_ODD_VERIFY_BOUND = 9
STRUCTURE_BOUND = 7
ALL_COMPOSITIONS = PartSet('all')


def _check_bound(order, bound, what):
    if order < 0:
        raise ValueError(f'Truncation order must be non-negative, got {order}')
    if order > bound:
        raise EnumerationBoundError(f'Enumeration bound exceeded: {what} at order {order} with bound {bound}')


def compare_series(report, actual, expected, check=None):
    '''Adds one residual entry per degree of actual - expected.'''
    for degree, (a, b) in enumerate(zip(actual.parts, expected.parts)):
        report.add(element_residual(degree, a - b, check=check))
    return report


def check_inverse_pair(report, A, B):
    '''Checks A*B = 1 and B*A = 1 degreewise.'''
    unit = unit_series(A.basis, A.order, A.element_cls)
    compare_series(report, series_product(A, B), unit, check='lhs*rhs')
    compare_series(report, series_product(B, A), unit, check='rhs*lhs')
    return report


def verify_theorem(E, order, bound=DEFAULT_VERIFY_BOUND):
    '''
    (sum over I in C(E) of (-1)^l(I) G_omega(I))^-1 = sum over K in C(E) of S^diam(K).
    '''
    _check_bound(order, bound, 'theorem')
    report = VerificationReport('theorem', {'parts': E.spec(), 'max_degree': order})
    with timed(report):
        lhs = theorem_lhs(E, order)
        rhs = series_convert(theorem_rhs(E, order), 'G')
        check_inverse_pair(report, lhs, rhs)
    logger.info(f'theorem E={E.spec()} N={order}: ok={report.ok}')
    return report


def verify_ung(which, order, bound=DEFAULT_VERIFY_BOUND):
    '''
    Compares the inverse of Ung's series with the conjectured sum of G_hat(s),
    and both with the right-hand side of the theorem for the matching part set.
    '''
    _check_bound(order, bound, f'ung {which}')
    if which not in UNG_PART_SETS:
        raise ValueError(f'Unknown Ung series {which!r}, expected one of {sorted(UNG_PART_SETS)}')
    E = UNG_PART_SETS[which]
    report = VerificationReport('ung', {'which': which, 'parts': E.spec(), 'max_degree': order})
    if which == 'h2':
        report.notes['shape_reading'] = H2_SHAPE_READING
    with timed(report):
        series = ung_series(which, order)
        conjectured = ung_conjectured_inverse(which, order, bound=max(bound, DEFAULT_ENUMERATION_BOUND))
        compare_series(report, series, theorem_lhs(E, order), check='series=theorem-lhs')
        compare_series(report, series_inverse(series), conjectured, check='inverse=conjectured')
        compare_series(report, conjectured, series_convert(theorem_rhs(E, order), 'G'), check='conjectured=theorem-rhs')
    logger.info(f'ung {which} N={order}: ok={report.ok}')
    return report


def verify_hook_bijection(order, bound=DEFAULT_VERIFY_BOUND):
    '''Every descent class holds exactly one s whose inverse has a hook shape.'''
    _check_bound(order, bound, 'hook bijection')
    report = VerificationReport('hooks', {'max_degree': order})
    with timed(report):
        for n in progress(range(1, order + 1), desc='hooks', logger=logger):
            failures = []
            for I in compositions_with_parts(ALL_COMPOSITIONS, n):
                count = sum(1 for sigma in descent_class(I, bound=bound)
                            if is_hook(descent_composition(inverse(sigma))))
                if count != 1:
                    failures.append((format_composition(I), count))
            report.add(failure_residual(n, failures, key_field='comp'))
    return report


def hook_expansion(n, k):
    '''The sum of F_I over the compositions I of n with k + 1 parts.'''
    return QSymImage({I: 1 for I in compositions_with_parts(ALL_COMPOSITIONS, n) if len(I) == k + 1})


def verify_hook_expansion(order, bound=DEFAULT_VERIFY_BOUND):
    '''The commutative image of R_(1^k, n-k) is the sum of F_I with l(I) = k + 1.'''
    _check_bound(order, bound, 'hook expansion')
    report = VerificationReport('hook-expansion', {'max_degree': order})
    with timed(report):
        for n in range(1, order + 1):
            failures = []
            for k in range(n):
                difference = commutative_image(embed(ribbon(hook(k, n)), bound=bound)) - hook_expansion(n, k)
                if difference:
                    failures.append((format_composition(hook(k, n)), len(difference.coeffs)))
            report.add(failure_residual(n, failures, key_field='comp'))
    return report


def littlewood_coefficients(n, bound=DEFAULT_ODD_VERIFY_BOUND):
    '''
    c_I for odd n = 2p + 1: the number of s of shape I whose inverse has
    shape (2^p, 1), found by running over S_n.
    '''
    target = tanh_shape((n - 1) // 2)
    counts = defaultdict(int)
    for sigma in all_permutations(n, bound=bound):
        if descent_composition(inverse(sigma)) == target:
            counts[descent_composition(sigma)] += 1
    return dict(counts)


def verify_qlit(order, bound=DEFAULT_ODD_VERIFY_BOUND):
    '''
    (sum of F_I)^-1 = 1 + sum over I of 2p+1 of (-1)^(p+1) c_I F_I, through the
    noncommutative hyperbolic tangent H^-1 = 1 - sum of (-1)^p R_(2^p,1).
    '''
    _check_bound(order, bound, 'qlit')
    report = VerificationReport('qlit', {'max_degree': order})
    report.notes['shape_reading'] = TANH_SHAPE_READING
    with timed(report):
        tanh = tanh_inverse_series(order)
        compare_series(report, series_inverse(h_series(order)), tanh, check='ribbon')
        embedded_tanh = embed_series(tanh, bound=bound)
        compare_series(report, series_inverse(embed_series(h_series(order), bound=bound)), embedded_tanh, check='fqsym')
        for n in progress(range(order + 1), desc='qlit', logger=logger):
            image = commutative_image(embedded_tanh[n])
            if n == 0:
                expected = QSymImage({(): 1})
            elif n % 2:
                sign = (-1) ** ((n - 1) // 2 + 1)
                expected = QSymImage({I: sign * c for I, c in littlewood_coefficients(n, bound=bound).items()})
            else:
                expected = QSymImage()
            difference = image - expected
            report.add(failure_residual(n, [(format_composition(I), c) for I, c in difference.terms()],
                                        check='qsym', key_field='comp'))
    return report


def verify_ncschur(order, bound=DEFAULT_VERIFY_BOUND):
    '''lambda_1 sigma_1 = 1 + 2 (H_1 + H_2 + ...), degreewise.'''
    _check_bound(order, bound, 'ncschur')
    report = VerificationReport('ncschur', {'max_degree': order})
    with timed(report):
        actual = lambda1_sigma1(order)
        for n in range(order + 1):
            expected = h_n(0) if n == 0 else h_n(n).scale(2)
            report.add(element_residual(n, actual[n] - expected))
    return report


def verify_oracle(alphabet_size=3, order=5, bases=('G', 'F')):
    '''
    Checks the F and G products against concatenation of realizations over
    the alphabet 1..alphabet_size, for every pair of basis elements.
    '''
    report = VerificationReport('oracle', {'alphabet': alphabet_size, 'max_degree': order})
    with timed(report):
        realized = {}
        for basis in bases:
            for total in range(2, order + 1):
                failures = []
                for i in range(1, total):
                    for a in all_permutations(i, bound=order):
                        for b in all_permutations(total - i, bound=order):
                            x = basis_element(basis, a)
                            y = basis_element(basis, b)
                            for z in (x, y):
                                if z not in realized:
                                    realized[z] = realize(z, alphabet_size)
                            if realize(x * y, alphabet_size) != realized[x] * realized[y]:
                                failures.append((f'{format_permutation(a)}|{format_permutation(b)}', 1))
                report.add(failure_residual(total, failures, check=basis))
    return report


def _interval_failures(n, bound):
    failures = []
    for I in compositions_with_parts(ALL_COMPOSITIONS, n):
        if sorted(weak_interval(alpha(I), omega(I))) != descent_class(I, bound=bound):
            failures.append((format_composition(I), 1))
    return failures


def _multiplicative_failures(n, bound):
    failures = []
    for sigma in all_permutations(n, bound=bound):
        expected = basis_element('G', ())
        for factor in anticonnected_factors(sigma):
            expected = expected * to_G(basis_element('S', factor))
        if to_G(basis_element('S', sigma)) != expected:
            failures.append((format_permutation(sigma), 1))
    return failures


def _roundtrip_failures(n, bound):
    failures = []
    for sigma in all_permutations(n, bound=bound):
        g = basis_element('G', sigma)
        s = basis_element('S', sigma)
        if to_G(to_S(g)) != g or to_S(to_G(s)) != s:
            failures.append((format_permutation(sigma), 1))
    return failures


def _omega_mirror_failures(n, bound):
    return [(format_composition(I), 1) for I in compositions_with_parts(ALL_COMPOSITIONS, n)
            if inverse(omega(I)) != omega(mirror(I))]


def _anticonnected_failures(n, bound):
    failures = []
    for I in compositions_with_parts(ALL_COMPOSITIONS, n):
        for J in coarsenings(mirror(I)):
            if is_anticonnected(compose(alpha(J), omega(I))) != (J == mirror(I)):
                failures.append((f'{format_composition(I)}/{format_composition(J)}', 1))
    return failures


def _alpha_omega_products(n):
    '''All a(J) w(I) with I a composition of n and J coarser than the mirror of I.'''
    return {compose(alpha(J), omega(I))
            for I in compositions_with_parts(ALL_COMPOSITIONS, n)
            for J in coarsenings(mirror(I))}


def _merge(K, J):
    if not K:
        return J
    if not J:
        return K
    return K[:-1] + (K[-1] + J[0],) + J[1:]


def _cancellation_failures(n, bound):
    '''
    a(J)w(I) > a(K)w(K~) = a(K|>J) w(I.K~), and every nonempty a(J)w(I) splits
    in exactly two ways as such a product (K empty, or K the last
    anticonnected factor).
    '''
    failures = []
    for i in range(n + 1):
        for I in compositions_with_parts(ALL_COMPOSITIONS, i):
            for J in coarsenings(mirror(I)):
                for K in compositions_with_parts(ALL_COMPOSITIONS, n - i):
                    left = left_shifted_concat(compose(alpha(J), omega(I)), compose(alpha(K), omega(mirror(K))))
                    right = compose(alpha(_merge(K, J)), omega(I + mirror(K)))
                    if left != right:
                        failures.append((f'{format_composition(I)}/{format_composition(J)}/{format_composition(K)}', 1))
    prefixes = {p: _alpha_omega_products(p) for p in range(n + 1)}
    suffixes = {p: {compose(alpha(K), omega(mirror(K))) for K in compositions_with_parts(ALL_COMPOSITIONS, p)}
                for p in range(n + 1)}
    for sigma in sorted(prefixes[n]):
        decompositions = 0
        for p in [0] + split_points(sigma) + [n]:
            head, tail = standardize(sigma[:p]), standardize(sigma[p:])
            if head in prefixes[p] and tail in suffixes[n - p]:
                decompositions += 1
        if decompositions != 2:
            failures.append((format_permutation(sigma), decompositions))
    return failures


STRUCTURE_CHECKS = (
    ('interval', 6, _interval_failures),
    ('multS', 6, _multiplicative_failures),
    ('g2s-roundtrip', 5, _roundtrip_failures),
    ('omega-mirror', 8, _omega_mirror_failures),
    ('anticonnected', 6, _anticonnected_failures),
    ('cancellation', 6, _cancellation_failures),
)


def verify_structure(order, bound=STRUCTURE_BOUND):
    '''
    Descent classes are weak-order intervals, S is multiplicative over
    anticonnected factors, G->S->G and S->G->S are identities, w(I)^-1 = w(I~),
    a(J)w(I) is anticonnected iff J = I~, and the cancellation step of the
    inversion proof.
    '''
    _check_bound(order, bound, 'structure')
    report = VerificationReport('structure', {'max_degree': order})
    with timed(report):
        for name, limit, failures_at in STRUCTURE_CHECKS:
            for n in range(1, min(order, limit) + 1):
                report.add(failure_residual(n, failures_at(n, bound=DEFAULT_ENUMERATION_BOUND), check=name))
    return report


def _run_check(task):
    name, kwargs = task
    return CHECKS[name](**kwargs)


CHECKS = {
    'theorem': verify_theorem,
    'ung': verify_ung,
    'hooks': verify_hook_bijection,
    'hook-expansion': verify_hook_expansion,
    'qlit': verify_qlit,
    'ncschur': verify_ncschur,
    'structure': verify_structure,
    'oracle': verify_oracle,
}


def run_checks(tasks, workers=1):
    '''
    Runs (check name, kwargs) tasks, in a process pool when workers > 1.
    Reports come back in task order.
    '''
    tasks = list(tasks)
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            return pool.map(_run_check, tasks)
    return [_run_check(task) for task in tasks]


def default_tasks(order):
    '''The full suite at truncation order `order`, capped per check.'''
    tasks = [('theorem', {'E': PartSet.from_spec(spec), 'order': order})
             for spec in ('all', 'even', 'set:2', 'set:1,3', 'set:3')]
    tasks += [('ung', {'which': which, 'order': order}) for which in ('h1', 'h2', 'h3')]
    tasks += [
        ('hooks', {'order': order}),
        ('hook-expansion', {'order': min(order, 7)}),
        ('ncschur', {'order': order}),
        ('qlit', {'order': min(order + 1, DEFAULT_ODD_VERIFY_BOUND)}),
        ('structure', {'order': min(order, STRUCTURE_BOUND)}),
        ('oracle', {'alphabet_size': 3, 'order': min(order, 5)}),
    ]
    return tasks


def verify_all(order, workers=1):
    return run_checks(default_tasks(order), workers=workers)
