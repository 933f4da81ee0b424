'''
Command-line front end.

    python -m quasisym verify theorem --parts even --max-degree 6 --output json
    python -m quasisym verify ung --which h2 --max-degree 8
    python -m quasisym verify extras --which qlit --max-degree 9
    python -m quasisym expand --series theorem-rhs --parts set:2 --degree 4 --basis G
    python -m quasisym invert --series h1 --max-degree 5
    python -m quasisym oracle --alphabet 3 --max-degree 5
'''
import argparse
import json
import logging
import sys

from .config import COMMANDS, VERIFY_TARGETS, VerifierConfig
from .errors import QuasisymError
from .execute import SERIES_NAMES, execute_command
from .fqsym import TruncatedSeries
from .permcore import PartSet
from .utils import dumps_jsonl

logger = logging.getLogger('quasisym')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def configure_logger(level='WARNING'):
    '''
    Sends quasisym logs to stderr; stdout carries only reports.
    '''
    formatter = logging.Formatter(
        '%(asctime)s %(levelname)s: [in %(pathname)s:%(lineno)d] %(threadName)s %(message)s')

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.addHandler(stream_handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def parse_parts(spec):
    return PartSet.from_spec(spec)


def build_parser():
    parser = argparse.ArgumentParser(prog='quasisym', description='Exact inversion identities in FQSym and NSym')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('target', nargs='?', choices=VERIFY_TARGETS, help='what to verify (verify only)')
    parser.add_argument('--config', help='a JSON file with default settings')
    parser.add_argument('--parts', help='all, even, odd or set:a,b,c')
    parser.add_argument('--max-degree', type=int, dest='max_degree')
    parser.add_argument('--degree', type=int)
    parser.add_argument('--basis', choices=['F', 'G', 'S'])
    parser.add_argument('--series', choices=SERIES_NAMES)
    parser.add_argument('--which', help='h1|h2|h3 for ung; hooks|hook-expansion|qlit|ncschur|structure for extras')
    parser.add_argument('--output', choices=['text', 'json'])
    parser.add_argument('--enumeration-bound', type=int, dest='enumeration_bound')
    parser.add_argument('--alphabet', type=int)
    parser.add_argument('--workers', type=int)
    parser.add_argument('--no-timing', action='store_false', dest='timing', default=None,
                        help='omit elapsed times so output is byte-stable')
    parser.add_argument('--verbose', '-v', action='store_true')
    return parser


def config_from_args(args):
    config = VerifierConfig(config_file_path=args.config)
    overrides = {
        key: value for key, value in vars(args).items()
        if key not in ('config', 'verbose') and value is not None
    }
    if args.parts is not None:
        overrides['parts'] = parse_parts(args.parts).spec()
    config.update(**overrides)
    if args.verbose:
        config.update(log_level='DEBUG')
    if config['command'] == 'verify' and not config.get('target'):
        config.update(target='theorem')
    return config


def render(payload, config):
    if isinstance(payload, list):
        if config['output'] == 'json':
            return dumps_jsonl(report.to_json(timing=config['timing']) for report in payload)
        return ''.join(report.to_text(timing=config['timing']) + '\n' for report in payload)
    if config['output'] == 'json':
        return json.dumps(payload.to_json(), separators=(',', ':')) + '\n'
    if isinstance(payload, TruncatedSeries):
        return ''.join(f'degree {part.degree}: {part!r}\n' for part in payload)
    return ''.join(f'{coeff}*{payload.basis}[{payload.format_key(key)}]\n' for key, coeff in payload.terms()) or '0\n'


def run(config):
    '''
    Executes one configured invocation, writes its output to stdout and
    returns the exit status: 0 if every check passed, 1 otherwise.
    '''
    if not isinstance(config, VerifierConfig):
        config = VerifierConfig(config_dict=config, use_env=False)
    configure_logger(config['log_level'])
    logger.debug(f'Config: {config!r}')
    payload, ok = execute_command(config)
    sys.stdout.write(render(payload, config))
    return EXIT_OK if ok else EXIT_FAILED


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(config_from_args(args))
    except QuasisymError as error:
        print(f'quasisym: {error}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
