"""
Reports emitted by every command: a json document checked against
schemas/report.schema.json, or tables for reading.
"""
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import jsonschema
from tabulate import tabulate

from kernel import format_scalar, is_param
from utils import dump_json, read_json, write_json

__all__ = ['Report', 'Stopwatch', 'SCHEMA_PATH', 'SCHEMA_VERSION', 'exact', 'validate', 'render_text', 'emit',
           'EXIT_OK', 'EXIT_FALSE', 'EXIT_USAGE']

SCHEMA_PATH = Path(__file__).parent.parent / 'schemas' / 'report.schema.json'
SCHEMA_VERSION = '1'

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def exact(value):
    """
    Json-ready copy of ``value``: numbers become exact rational strings,
    containers are copied, booleans and None are kept.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, float):
        raise TypeError('floating point value {!r} in a report'.format(value))
    if isinstance(value, dict):
        return {str(key): exact(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(item) for item in value]
    if is_param(value):
        return format_scalar(value)
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    return str(value)


class Stopwatch:

    def __init__(self):
        self._start = time.perf_counter_ns()

    def elapsed_ms(self):
        return str((time.perf_counter_ns() - self._start) // 1000000)


@dataclass
class Report:
    command: str
    args: dict = field(default_factory=dict)
    status: bool = True
    verdicts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    normal_forms: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)
    error: str = None
    elapsed_ms: str = '0'

    @property
    def exit_code(self):
        if self.error is not None:
            return EXIT_USAGE
        return EXIT_OK if self.status else EXIT_FALSE

    def verdict(self, name, value, witnesses=()):
        """Record a named verdict; any false verdict makes the report false."""
        self.verdicts[name] = bool(value)
        self.witnesses.extend([name] + [str(part) for part in w] for w in witnesses)
        self.status = self.status and bool(value)

    def fail(self, error):
        self.error = '{}: {}'.format(type(error).__name__, error)
        self.status = False

    def to_dict(self):
        return {
            'schema_version': SCHEMA_VERSION,
            'command': {'name': self.command, 'args': {key: exact(value) for key, value in self.args.items()}},
            'status': self.status,
            'error': self.error,
            'verdicts': dict(self.verdicts),
            'witnesses': [[str(part) for part in w] for w in self.witnesses],
            'normal_forms': {key: str(value) for key, value in self.normal_forms.items()},
            'data': exact(self.data),
            'timing': {'elapsed_ms': self.elapsed_ms},
        }


def validate(document, schema_path=SCHEMA_PATH):
    """
    :raises jsonschema.ValidationError: if ``document`` does not match the schema
    """
    jsonschema.validate(instance=document, schema=read_json(schema_path))
    return document


def _flatten(value, prefix=''):
    if isinstance(value, dict):
        rows = []
        for key, item in value.items():
            rows.extend(_flatten(item, '{}.{}'.format(prefix, key) if prefix else str(key)))
        return rows
    if isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        rows = []
        for index, item in enumerate(value):
            rows.extend(_flatten(item, '{}[{}]'.format(prefix, index)))
        return rows
    if isinstance(value, list):
        value = ', '.join('-' if item is None else str(item) for item in value)
    return [(prefix, '-' if value is None else value)]


def render_text(document):
    blocks = [tabulate([('command', document['command']['name']),
                        ('status', str(document['status']).lower()),
                        ('elapsed_ms', document['timing']['elapsed_ms'])], tablefmt='plain')]
    if document.get('error'):
        blocks.append('error: ' + document['error'])
    if document['verdicts']:
        blocks.append(tabulate(sorted((k, str(v).lower()) for k, v in document['verdicts'].items()),
                               headers=['verdict', 'value'], tablefmt='simple'))
    if document['normal_forms']:
        blocks.append(tabulate(document['normal_forms'].items(), headers=['name', 'normal form'], tablefmt='simple'))
    if document['witnesses']:
        width = max(len(w) for w in document['witnesses'])
        rows = [w + [''] * (width - len(w)) for w in document['witnesses']]
        blocks.append(tabulate(rows, headers=['witness'] + [''] * (width - 1), tablefmt='simple'))
    if document['data']:
        blocks.append(tabulate(_flatten(document['data']), headers=['data', 'value'], tablefmt='simple'))
    return '\n\n'.join(blocks) + '\n'


def emit(report, fmt='json', out=None, stream=None):
    """
    Validate and write a report to ``out`` or ``stream``.

    :return: the json document
    """
    document = validate(report.to_dict())
    if fmt == 'text':
        text = render_text(document)
        if out is not None:
            Path(out).write_text(text)
        else:
            stream.write(text)
    elif out is not None:
        write_json(document, out)
    else:
        stream.write(dump_json(document) + '\n')
    return document
