import logging

from .config import DEFAULT_CONFIG, VerifierConfig
from .errors import ConfigError
from .fqsym import convert, series_convert, series_inverse
from .identities import (
    run_checks, theorem_lhs, theorem_rhs, ung_series_f, default_tasks
)
from .nsym import embed_series, h_series

logger = logging.getLogger(__name__)

SERIES_NAMES = ['theorem-lhs', 'theorem-rhs', 'h1', 'h2', 'h3', 'schur-h']
EXTRAS = {
    'hooks': 'hooks',
    'hook-expansion': 'hook-expansion',
    'qlit': 'qlit',
    'ncschur': 'ncschur',
    'structure': 'structure',
}


def build_series(name, E, order, bound):
    '''The named series truncated at `order`, in the basis it is written in.'''
    if name == 'theorem-lhs':
        return theorem_lhs(E, order)
    if name == 'theorem-rhs':
        return theorem_rhs(E, order)
    if name in ('h1', 'h2', 'h3'):
        return ung_series_f(name, order)
    if name == 'schur-h':
        return embed_series(h_series(order), bound=bound)
    raise ConfigError(f'Bad config: unknown series {name!r}, expected one of {SERIES_NAMES}')


def _reject(config, keys, command):
    for key in keys:
        if config.get(key) is not None:
            raise ConfigError(f'Conflicting flags: --{key.replace("_", "-")} is not used by {command}')


def _reject_parts(config, command):
    if config['parts'] != DEFAULT_CONFIG['parts']:
        raise ConfigError(f'Conflicting flags: --parts {config["parts"]} is not used by {command}')


def verify_tasks(config):
    target = config['target']
    order = config['max_degree']
    bound = config['enumeration_bound']
    which = config.get('which')
    if target == 'theorem':
        _reject(config, ['which'], 'verify theorem')
        return [('theorem', {'E': config.part_set, 'order': order, 'bound': bound})]
    if target == 'ung':
        _reject_parts(config, 'verify ung')
        if which not in ('h1', 'h2', 'h3'):
            raise ConfigError(f'Bad config: verify ung needs --which h1|h2|h3, got {which!r}')
        return [('ung', {'which': which, 'order': order, 'bound': bound})]
    if target == 'extras':
        _reject_parts(config, 'verify extras')
        if which not in EXTRAS:
            raise ConfigError(f'Bad config: verify extras needs --which one of {sorted(EXTRAS)}, got {which!r}')
        return [(EXTRAS[which], {'order': order, 'bound': bound})]
    if target == 'all':
        _reject(config, ['which'], 'verify all')
        _reject_parts(config, 'verify all')
        return default_tasks(order)
    raise ConfigError(f'Bad config: unknown verify target {target!r}')


def execute_command(config):
    '''
    Runs one CLI command. Returns (payload, ok): a list of reports for verify
    and oracle, or a HomogeneousElement / TruncatedSeries for expand and invert.
    '''
    if not isinstance(config, VerifierConfig):
        config = VerifierConfig(config_dict=config, use_env=False)
    config.validate()
    command = config['command']
    bound = config['enumeration_bound']

    if command == 'verify':
        _reject(config, ['series', 'degree'], 'verify')
        reports = run_checks(verify_tasks(config), workers=config['workers'])
        return reports, all(report.ok for report in reports)

    if command == 'oracle':
        _reject(config, ['series', 'degree', 'which'], 'oracle')
        _reject_parts(config, 'oracle')
        reports = run_checks([('oracle', {'alphabet_size': config['alphabet'], 'order': config['max_degree']})])
        return reports, all(report.ok for report in reports)

    if command == 'expand':
        _reject(config, ['which'], 'expand')
        degree = config['degree'] if config['degree'] is not None else config['max_degree']
        series = build_series(config['series'], config.part_set, degree, bound)
        logger.info(f'Expanding {config["series"]} at degree {degree} in basis {config["basis"]}')
        return convert(series[degree], config['basis']), True

    if command == 'invert':
        _reject(config, ['which', 'degree'], 'invert')
        series = build_series(config['series'], config.part_set, config['max_degree'], bound)
        return series_convert(series_inverse(series), config['basis']), True

    raise ConfigError(f'Bad config: unknown command {command!r}')
