import os

import yaml
from jsonschema import ValidationError, validate

from .bounds import BoundSpec, bound_names
from .errors import ExpressionError, PolytopeError, UserBoundsParseError
from .expressions import parse_fraction
from .logger import Logger
from .polytope import (BUILTIN_POLYHEDRA, Polyhedron, halfspace_from_text,
                       triple_from_text)

BOUND_FILE_EXTENSIONS = (".yml", ".yaml", ".json")

BOUND_FILE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "bounds": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name", "triple", "k"],
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "triple": {"type": "string"},
                    "k": {"type": ["string", "integer"]},
                    "per_component": {"type": "boolean"},
                    "description": {"type": "string"}
                }
            }
        },
        "polyhedra": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name", "halfspaces"],
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "halfspaces": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "string"}
                    },
                    "description": {"type": "string"}
                }
            }
        }
    }
}


class BoundFileParser(object):
    """
    Parses Yaml or JSON files declaring named bounds and polyhedra
    """
    def __init__(self):
        self.bounds = dict()
        self.polyhedra = dict()
        self.log = Logger()

    def set_logger(self, logger):
        """
        Set a custom logger.  This should be based on the logging Python
        library.
        """
        self.log = logger

    def read_data(self, path_or_file_name):
        """
        Reads and parses declarations from either all files in a directory
        path, or a single file specified by filename.  Both yaml (.yml,
        .yaml) and JSON (.json) files are supported.
        """
        if os.path.isdir(path_or_file_name):
            for file_name in sorted(os.listdir(path_or_file_name)):
                if file_name.endswith(BOUND_FILE_EXTENSIONS):
                    full_path = os.path.join(path_or_file_name, file_name)
                    data_string = self._read_data(full_path)
                    self._parse_data_string(data_string, full_path)
        elif os.path.isfile(path_or_file_name):
            data_string = self._read_data(path_or_file_name)
            self._parse_data_string(data_string, path_or_file_name)
        else:
            raise UserBoundsParseError("File or path not found: " +
                                       path_or_file_name)

    def add_data(self, data_string):
        """
        Parses the specified string as declarations in Yaml or JSON format.
        """
        self._parse_data_string(data_string)

    def get_bounds(self):
        return [self.bounds[name] for name in sorted(self.bounds)]

    def get_bound(self, name):
        if name not in self.bounds:
            raise UserBoundsParseError("Bound %s not defined" % name)
        return self.bounds[name]

    def get_polyhedron(self, name):
        if name not in self.polyhedra:
            raise UserBoundsParseError("Polyhedron %s not defined" % name)
        return self.polyhedra[name]

    #
    # Private functions to do the work
    #

    def _read_data(self, filename):
        try:
            with open(filename, 'r') as file:
                return file.read()
        except Exception as e:
            raise UserBoundsParseError("Error reading bound file: " + str(e))

    def _parse_data_string(self, data_string, filename="(internal)"):
        data_dict = self._decode_to_dict(data_string, filename)
        if data_dict is None:
            return

        try:
            validate(data_dict, BOUND_FILE_SCHEMA)
        except ValidationError as e:
            path = "/".join(str(x) for x in e.absolute_path)
            raise UserBoundsParseError("%s: Invalid entry %s: %s" %
                                       (filename, path or "(top)",
                                        e.message))

        for entry in data_dict.get("bounds", list()):
            self._add_bound(entry, filename)
        for entry in data_dict.get("polyhedra", list()):
            self._add_polyhedron(entry, filename)

        self.log.debug("Read %s: %d bounds, %d polyhedra in total" %
                       (filename, len(self.bounds), len(self.polyhedra)))

    def _decode_to_dict(self, data_string, filename):
        try:
            data_dict = yaml.safe_load(data_string)
        except yaml.YAMLError as e:
            if hasattr(e, 'problem_mark'):
                lineno = str(e.problem_mark.line)
            else:
                lineno = '?'
            raise UserBoundsParseError("Syntax error in %s:%s: %s" %
                                       (filename, lineno, str(e)))
        return data_dict

    def _check_name(self, name, store, filename):
        if name in store:
            raise UserBoundsParseError("%s: Duplicate name %s" %
                                       (filename, name))

    def _add_bound(self, entry, filename):
        name = entry["name"]
        self._check_name(name, self.bounds, filename)
        if name.lower() in bound_names():
            raise UserBoundsParseError("%s: Name %s is reserved for a "
                                       "built-in bound" % (filename, name))
        try:
            spec = BoundSpec(triple_from_text(entry["triple"]),
                             parse_fraction(str(entry["k"])),
                             per_component=entry.get("per_component", True),
                             name=name)
        except ExpressionError as e:
            raise UserBoundsParseError("%s: Bound %s: %s" %
                                       (filename, name, str(e)))
        self.bounds[name] = spec

    def _add_polyhedron(self, entry, filename):
        name = entry["name"]
        self._check_name(name, self.polyhedra, filename)
        if name in BUILTIN_POLYHEDRA:
            raise UserBoundsParseError("%s: Name %s is reserved for a "
                                       "built-in polyhedron" %
                                       (filename, name))
        try:
            halfspaces = [halfspace_from_text(text)
                          for text in entry["halfspaces"]]
        except (ExpressionError, PolytopeError) as e:
            raise UserBoundsParseError("%s: Polyhedron %s: %s" %
                                       (filename, name, str(e)))
        self.polyhedra[name] = Polyhedron(halfspaces, name=name)
