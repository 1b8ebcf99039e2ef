"""
Machine-readable reports.  Exact values are serialised as fraction strings;
decimal renderings are display-only and prefixed with "~".
"""
import collections
import json

import yaml
from jsonschema import ValidationError, validate

from .errors import ReportError
from .expressions import format_decimal, format_fraction
from .graph6 import emit_graph6
from .polytope import format_triple

FRACTION_PATTERN = r"^-?[0-9]+(/[0-9]+)?$"

BOUND_REPORT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["graph", "bound", "nu", "rhs", "slack", "tight"],
    "properties": {
        "graph": {"type": "string"},
        "bound": {"type": "string"},
        "triple": {"type": "string"},
        "nu": {"type": "integer", "minimum": 0},
        "rhs": {"type": "string", "pattern": FRACTION_PATTERN},
        "slack": {"type": "string", "pattern": FRACTION_PATTERN},
        "slack_display": {"type": "string"},
        "tight": {"type": "boolean"}
    }
}

GE_REPORT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["graph", "a", "b", "c", "a_hypomatchable", "c_perfect",
                 "b_surplus", "all_true"],
    "properties": {
        "graph": {"type": "string"},
        "a": {"type": "integer", "minimum": 0},
        "b": {"type": "integer", "minimum": 0},
        "c": {"type": "integer", "minimum": 0},
        "a_hypomatchable": {"type": "boolean"},
        "c_perfect": {"type": "boolean"},
        "b_surplus": {"type": "boolean"},
        "identity_holds": {"type": "boolean"},
        "all_true": {"type": "boolean"}
    }
}

MANIFEST_SCHEMA = {
    "type": "object",
    "required": ["command", "config", "source", "counts", "wall_time",
                 "partial"],
    "properties": {
        "command": {"type": "string"},
        "config": {"type": "object"},
        "source": {"type": "string"},
        "counts": {
            "type": "object",
            "additionalProperties": {"type": "integer", "minimum": 0}
        },
        "wall_time": {"type": "number", "minimum": 0},
        "partial": {"type": "boolean"}
    }
}


class NoAliasDumper(yaml.SafeDumper):
    def ignore_aliases(self, data):
        return True


def validate_report(data, schema):
    try:
        validate(data, schema)
    except ValidationError as e:
        raise ReportError("Report does not conform to schema: %s" %
                          e.message)
    return data


def bound_report_dict(g, spec, report):
    """
    JSON-ready dictionary for one BoundReport of spec on g.
    """
    data = collections.OrderedDict()
    data["graph"] = emit_graph6(g).decode("ascii")
    data["bound"] = spec.name
    data["triple"] = format_triple(spec.triple)
    data["nu"] = report.lhs
    data["rhs"] = format_fraction(report.rhs)
    data["slack"] = format_fraction(report.slack)
    data["slack_display"] = format_decimal(report.slack)
    data["tight"] = report.tight
    return validate_report(data, BOUND_REPORT_SCHEMA)


def ge_report_dict(g, decomposition, report, all_true):
    data = collections.OrderedDict()
    data["graph"] = emit_graph6(g).decode("ascii")
    data["a"], data["b"], data["c"] = decomposition.sizes()
    data["a_hypomatchable"] = report.a_hypomatchable
    data["c_perfect"] = report.c_perfect
    data["b_surplus"] = report.b_surplus
    data["identity_holds"] = report.identity_holds
    data["all_true"] = all_true
    return validate_report(data, GE_REPORT_SCHEMA)


def to_json_line(data):
    return json.dumps(data, separators=(",", ":"))


class RunManifest(object):
    """
    Summary of one command run: what was asked, where the graphs came from,
    how many were checked and how long it took.
    """
    def __init__(self, command, config=None, source=""):
        self.command = command
        self.config = dict(config or dict())
        self.source = source
        self.counts = collections.OrderedDict()
        for name in ("graphs_checked", "violations", "tight", "invalid"):
            self.counts[name] = 0
        self.wall_time = 0.0
        self.partial = False

    def count(self, name, amount=1):
        self.counts[name] = self.counts.get(name, 0) + amount

    @property
    def violations(self):
        return self.counts["violations"]

    def as_dict(self):
        data = collections.OrderedDict()
        data["command"] = self.command
        data["config"] = dict(self.config)
        data["source"] = self.source
        data["counts"] = dict(self.counts)
        data["wall_time"] = round(self.wall_time, 3)
        data["partial"] = self.partial
        return validate_report(data, MANIFEST_SCHEMA)

    def to_yaml(self):
        return yaml.dump(_plain(self.as_dict()), Dumper=NoAliasDumper,
                         default_flow_style=False, sort_keys=False)

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2)


#
# Private functions to do the work
#

def _plain(data):
    if isinstance(data, dict):
        return dict((key, _plain(value)) for key, value in data.items())
    if isinstance(data, (list, tuple)):
        return [_plain(value) for value in data]
    return data
