import collections
import collections.abc
import json
import os
from enum import Enum
from pathlib import Path


class OutputFormat(Enum):
    JSON = "json"
    TEXT = "text"

    def __str__(self):
        return self.value


FORMAT_ENV = 'QES_FORMAT'


def read_json(fname):
    fname = Path(fname)
    with fname.open('rt') as handle:
        return json.load(handle, object_hook=collections.OrderedDict)


def write_json(content, fname):
    fname = Path(fname)
    with fname.open('wt') as handle:
        json.dump(content, handle, indent=4, sort_keys=False)


def dump_json(content):
    return json.dumps(content, indent=4, sort_keys=False)


def namedtuple_with_defaults(typename, field_names, default_values=()):
    T = collections.namedtuple(typename, field_names)
    T.__new__.__defaults__ = (None,) * len(T._fields)
    if isinstance(default_values, collections.abc.Mapping):
        prototype = T(**default_values)
    else:
        prototype = T(*default_values)
    T.__new__.__defaults__ = tuple(prototype)
    return T


def format_name(value):
    """Validated name of an output format, usable as an argparse type."""
    return OutputFormat(value.strip().lower()).value


def default_format(fallback=OutputFormat.JSON.value):
    """Output format from the environment, ``fallback`` when unset or invalid."""
    value = os.environ.get(FORMAT_ENV)
    if value is None:
        return fallback
    try:
        return format_name(value)
    except ValueError:
        return fallback
