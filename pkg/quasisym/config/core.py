from collections import UserDict
import json
import os
from pathlib import Path

from dotenv import load_dotenv

from quasisym.errors import ConfigError, PartSetError
from quasisym.permcore import DEFAULT_ENUMERATION_BOUND, PartSet
from quasisym.utils import dump_json

__all__ = [
    'ENUMERATION_BOUND_ENV',
    'COMMANDS',
    'VERIFY_TARGETS',
    'DEFAULT_CONFIG',
    'VerifierConfig',
]

ENUMERATION_BOUND_ENV = 'FQSYM_MAX_ENUM'

COMMANDS = ['verify', 'expand', 'invert', 'oracle']
VERIFY_TARGETS = ['theorem', 'ung', 'extras', 'all']

DEFAULT_CONFIG = {
    'command': 'verify',
    'target': 'theorem',
    'parts': 'all',
    'max_degree': 6,
    'degree': None,
    'basis': 'G',
    'series': None,
    'which': None,
    'output': 'text',
    'enumeration_bound': DEFAULT_ENUMERATION_BOUND,
    'alphabet': 3,
    'workers': 1,
    'timing': True,
    'log_level': 'WARNING'
}


class VerifierConfig(UserDict):
    '''
    Settings for one invocation: the defaults, then a JSON file or dict, then
    keyword updates, with FQSYM_MAX_ENUM overriding the enumeration bound.
    '''
    def __init__(self, **kwargs):
        super(UserDict, self).__init__()
        self.data = dict(DEFAULT_CONFIG)
        if kwargs.get('config_file_path'):
            config_file_path = Path(kwargs['config_file_path'])
            with open(config_file_path) as file_handle:
                self.data.update(json.load(file_handle))
        elif kwargs.get('config_dict'):
            self.data.update(kwargs['config_dict'])
        if kwargs.get('use_env', True):
            self.apply_env()

    def __repr__(self):
        return json.dumps(self.data, indent=4)

    def update(self, **kwargs):
        self.data = {**self.data, **kwargs}

    def save(self, outfile):
        dump_json(outfile, self.data)

    def update_from_file(self, file):
        config_path = Path(file).resolve()

        with open(config_path) as file_handle:
            data = json.load(file_handle)

        self.update(**data)

    def apply_env(self):
        load_dotenv()
        value = os.getenv(ENUMERATION_BOUND_ENV)
        if value is None:
            return
        try:
            bound = int(value)
        except ValueError:
            raise ConfigError(f'Bad config: {ENUMERATION_BOUND_ENV}={value!r} is not an integer')
        if bound < 1:
            raise ConfigError(f'Bad config: {ENUMERATION_BOUND_ENV} must be positive, got {bound}')
        self.data['enumeration_bound'] = bound

    @property
    def part_set(self):
        return PartSet.from_spec(self.data['parts'])

    def validate(self):
        if self.data['command'] not in COMMANDS:
            raise ConfigError(f'Bad config: unknown command {self.data["command"]!r}')
        if self.data['basis'] not in ('F', 'G', 'S'):
            raise ConfigError(f'Bad config: basis must be F, G or S, got {self.data["basis"]!r}')
        if self.data['output'] not in ('text', 'json'):
            raise ConfigError(f'Bad config: output must be text or json, got {self.data["output"]!r}')
        for key in ('max_degree', 'enumeration_bound', 'alphabet', 'workers'):
            if not isinstance(self.data[key], int) or self.data[key] < 0:
                raise ConfigError(f'Bad config: {key} must be a non-negative integer, got {self.data[key]!r}')
        if self.data['alphabet'] < 1:
            raise ConfigError(f'Bad config: alphabet must be at least 1, got {self.data["alphabet"]}')
        if self.data['max_degree'] > self.data['enumeration_bound']:
            raise ConfigError(
                f'Bad config: max_degree {self.data["max_degree"]} exceeds enumeration_bound {self.data["enumeration_bound"]}')
        degree = self.data.get('degree')
        if degree is not None and (degree < 0 or degree > self.data['enumeration_bound']):
            raise ConfigError(f'Bad config: degree {degree} outside 0..{self.data["enumeration_bound"]}')
        try:
            self.part_set
        except PartSetError as error:
            raise ConfigError(f'Bad config: {error}')
        return self
