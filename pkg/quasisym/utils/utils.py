import json
import logging
import sys

from tqdm import tqdm

__all__ = [
    'progress',
    'dump_json',
    'dumps_jsonl',
]


def progress(iterable, desc=None, logger=None, total=None):
    '''
    Wraps `iterable` in a tqdm bar on stderr, shown only when `logger` logs INFO.
    '''
    enabled = logger is not None and logger.isEnabledFor(logging.INFO)
    return tqdm(iterable, desc=desc, total=total, disable=not enabled, file=sys.stderr)


def dump_json(filepath, data_dict):
    with open(filepath, 'w') as f:
        json.dump(data_dict, f, indent=4, separators=(',', ': '))


def dumps_jsonl(records):
    '''One compact JSON object per line, keys in insertion order.'''
    return ''.join(json.dumps(record, separators=(',', ':')) + '\n' for record in records)
