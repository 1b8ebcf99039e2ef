#!/usr/bin/env python

import argparse
import json
import logging
import os
import sys
import time

from subcubic_matching.bounds import (biedl_bound, bound_by_name,
                                      bound_names, counterexample,
                                      is_violation, theorem3_bounds,
                                      theorem1_check, BoundSpec)
from subcubic_matching.enumeration import (EnumerationConfig,
                                           GraphEnumerator, random_subcubic,
                                           read_corpus)
from subcubic_matching.errors import (MatchingBoundsError, NotConnectedError,
                                      NotSubcubicError)
from subcubic_matching.expressions import (format_decimal, format_fraction,
                                           parse_fraction)
from subcubic_matching.families import (FamilySpec, HALFSPACE_FAMILIES,
                                        closed_nu, closed_profile,
                                        closed_vertex_count, generate)
from subcubic_matching.graph import (check_subcubic, degree_profile,
                                     is_connected)
from subcubic_matching.graph6 import emit_graph6, iter_graph6_lines
from subcubic_matching.matching import matching_number
from subcubic_matching.polytope import (BUILTIN_POLYHEDRA, CoefficientTriple,
                                        contains, describe_verdict,
                                        format_triple, maximal_vertices,
                                        polyhedron_P, project_to_Pplus,
                                        shift_transform, vertices)
from subcubic_matching.report_templates import (BOUND_REPORT_TEXT,
                                                COUNTEREXAMPLE_TEXT,
                                                FAMILY_STATS_TEXT,
                                                GE_REPORT_TEXT,
                                                HALFSPACE_LIST_TEXT,
                                                MEMBERSHIP_TEXT,
                                                POINT_IN_P_TEXT,
                                                POINT_LIST_TEXT,
                                                THEOREM1_TEXT, render_text)
from subcubic_matching.reports import (RunManifest, bound_report_dict,
                                       ge_report_dict, to_json_line)
from subcubic_matching.sweep import BoundSweep, StructureSweep
from subcubic_matching.user_bounds import BoundFileParser

ENGINE_VERSION = "1.0.0"

PROG_NAME = "subcubic-verify"
DEFAULT_LOG_LEVEL = 'INFO'
DEFAULT_RANDOM_ORDER = 16
DEFAULT_SEED = 0
ENV_LOG_LEVEL = 'SUBCUBIC_LOG_LEVEL'
ENV_LOG_FILE = 'SUBCUBIC_LOG_FILE'
ENV_JOBS = 'SUBCUBIC_JOBS'
ENV_MANIFEST = 'SUBCUBIC_MANIFEST'
ENV_BOUNDS_PATH = 'SUBCUBIC_BOUNDS_PATH'
POLYTOPE_ACTION = 'polytope'
VERTICES_ACTION = 'vertices'
CONTAINS_ACTION = 'contains'
PROJECT_ACTION = 'project'
SHIFT_ACTION = 'shift'
HALFSPACES_ACTION = 'halfspaces'
VERIFY_ACTION = 'verify'
FAMILY_ACTION = 'family'
COUNTEREXAMPLE_ACTION = 'counterexample'
GE_ACTION = 'ge'
THEOREM1_ACTION = 'theorem1'
ENUMERATE_ACTION = 'enumerate'
VERSION_ACTION = 'version'
HELP_ACTION = 'help'
SOURCE_ACTIONS = [VERIFY_ACTION, GE_ACTION, THEOREM1_ACTION]
LOG_LEVEL_STRS = ["OUTPUT", "ERROR", "INFO", "DEBUG"]
EMIT_GRAPH6 = 'graph6'
EMIT_STATS = 'stats'

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERNAL_ERROR = 3

VERSION_OUTPUT = "Subcubic matching bounds verifier version %s" % \
    ENGINE_VERSION

SOURCE_REQUIRED_ERROR = """No graph source given.
Please specify graphs using --enumerate N, --file PATH, --graph6 LINE or
--random COUNT"""


def main():
    parser = get_parser()
    args = parser.parse_args()

    if args.action is None or args.action == HELP_ACTION:
        parser.print_help()
        sys.exit(EXIT_SUCCESS)
    elif args.action == VERSION_ACTION:
        print(VERSION_OUTPUT)
        sys.exit(EXIT_SUCCESS)
    elif args.action == POLYTOPE_ACTION and args.polytopeAction is None:
        print("Please specify a polytope action: %s" %
              ", ".join([VERTICES_ACTION, CONTAINS_ACTION, PROJECT_ACTION,
                         SHIFT_ACTION, HALFSPACES_ACTION]))
        sys.exit(EXIT_USAGE)
    elif args.action in SOURCE_ACTIONS:
        if (args.enumerate is None and not args.file and not args.graph6 and
                not args.random):
            print(SOURCE_REQUIRED_ERROR)
            sys.exit(EXIT_USAGE)

    subcubic_verify = SubcubicVerify(args, args.action)
    subcubic_verify.run()


def fraction_argument(text):
    try:
        return parse_fraction(text)
    except MatchingBoundsError as e:
        raise argparse.ArgumentTypeError(e.get_display_string())


def get_parser():
    parser = argparse.ArgumentParser(prog=PROG_NAME)

    sub_parser = parser.add_subparsers(dest='action')

    polytope_parser = sub_parser.add_parser(POLYTOPE_ACTION)
    polytope_sub_parser = polytope_parser.add_subparsers(
        dest='polytopeAction')

    vertices_parser = polytope_sub_parser.add_parser(VERTICES_ACTION)
    add_polyhedron_argument(vertices_parser, "P+")
    vertices_parser.add_argument('--maximal', dest='maximal',
                                 action='store_true', required=False,
                                 help='Only print vertices not dominated '
                                      'by another vertex')
    add_common_arguments(vertices_parser)

    contains_parser = polytope_sub_parser.add_parser(CONTAINS_ACTION)
    add_triple_argument(contains_parser)
    add_polyhedron_argument(contains_parser, "P")

    project_parser = polytope_sub_parser.add_parser(PROJECT_ACTION)
    add_triple_argument(project_parser)

    shift_parser = polytope_sub_parser.add_parser(SHIFT_ACTION)
    add_triple_argument(shift_parser)
    shift_parser.add_argument('--lambda', dest='shift_amount',
                              action='store', required=True,
                              type=fraction_argument,
                              help='Nonnegative amount moved from x3 to x1')

    halfspaces_parser = polytope_sub_parser.add_parser(HALFSPACES_ACTION)
    add_common_arguments(halfspaces_parser)

    verify_parser = sub_parser.add_parser(VERIFY_ACTION)
    add_source_arguments(verify_parser)
    add_bound_arguments(verify_parser)
    verify_parser.add_argument('--tight-only', dest='tight_only',
                               action='store_true', required=False,
                               help='Only report tight instances')
    verify_parser.add_argument('--violations-only', dest='violations_only',
                               action='store_true', required=False,
                               help='Only report violated instances')

    family_parser = sub_parser.add_parser(FAMILY_ACTION)
    family_parser.add_argument('family_id', help='Family G1..G6')
    family_parser.add_argument('t', type=int, help='Family parameter')
    family_parser.add_argument('--emit', dest='emit', action='store',
                               choices=[EMIT_GRAPH6, EMIT_STATS],
                               default=EMIT_GRAPH6, required=False,
                               help='Output the graph6 line or statistics')
    family_parser.add_argument('--stats', dest='emit', action='store_const',
                               const=EMIT_STATS,
                               help='Same as --emit stats')
    add_common_arguments(family_parser)

    counterexample_parser = sub_parser.add_parser(COUNTEREXAMPLE_ACTION)
    add_triple_argument(counterexample_parser)
    counterexample_parser.add_argument('--k', dest='k', action='store',
                                       type=fraction_argument,
                                       default=parse_fraction("0"),
                                       required=False,
                                       help='Constant K of the bound')

    ge_parser = sub_parser.add_parser(GE_ACTION)
    add_source_arguments(ge_parser)

    theorem1_parser = sub_parser.add_parser(THEOREM1_ACTION)
    add_source_arguments(theorem1_parser)

    enumerate_parser = sub_parser.add_parser(ENUMERATE_ACTION)
    enumerate_parser.add_argument('max_n', type=int,
                                  help='Maximum number of vertices')
    enumerate_parser.add_argument('--all', dest='all_graphs',
                                  action='store_true', required=False,
                                  help='Include disconnected graphs')
    enumerate_parser.add_argument('--count', dest='count',
                                  action='store_true', required=False,
                                  help='Print counts per order instead of '
                                       'graph6 lines')
    add_common_arguments(enumerate_parser)

    sub_parser.add_parser(VERSION_ACTION)

    sub_parser.add_parser(HELP_ACTION)

    return parser


def add_common_arguments(parser):
    parser.add_argument('--json', dest='json', action='store_true',
                        required=False,
                        help='Write JSON instead of text')
    parser.add_argument('--debug', dest='debug',
                        action='store_true', required=False,
                        help='Output in debug mode')
    parser.add_argument('-lf', '--log-file', dest='log_file',
                        action='store', required=False,
                        default=os.getenv(ENV_LOG_FILE, ""),
                        help='Write logs to specified file. Can also set using environment variable %s' % (ENV_LOG_FILE))
    parser.add_argument('-ll', '--log-level', dest='log_level',
                        action='store', required=False,
                        default=os.getenv(ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL),
                        help='Specify log level (%s) Can also set using environment variable %s' % (", ".join(LOG_LEVEL_STRS), ENV_LOG_LEVEL))


def add_triple_argument(parser):
    parser.add_argument('triple', nargs=3, type=fraction_argument,
                        metavar=('X3', 'X2', 'X1'),
                        help='Coefficients of n3, n2 and n1 as p/q')
    add_common_arguments(parser)


def add_polyhedron_argument(parser, default):
    parser.add_argument('--polyhedron', dest='polyhedron', action='store',
                        default=default, required=False,
                        help='P, P+, cube or a polyhedron name from the '
                             'bounds file')
    parser.add_argument('--bounds-file', dest='bounds_file', action='store',
                        default=os.getenv(ENV_BOUNDS_PATH, None),
                        required=False,
                        help='Yaml or JSON file or directory declaring bounds and polyhedra. Can also set using environment variable %s' % (ENV_BOUNDS_PATH))


def add_source_arguments(parser):
    parser.add_argument('--enumerate', dest='enumerate', action='store',
                        type=int, default=None, required=False,
                        help='Check every connected subcubic graph up to this many vertices')
    parser.add_argument('--file', dest='file', action='append',
                        default=None, required=False,
                        help='graph6 file to read, may be repeated')
    parser.add_argument('--graph6', dest='graph6', action='append',
                        default=None, required=False,
                        help='A single graph6 line, may be repeated')
    parser.add_argument('--random', dest='random', action='store',
                        type=int, default=0, required=False,
                        help='Number of random connected subcubic graphs')
    parser.add_argument('--order', dest='order', action='store', type=int,
                        default=DEFAULT_RANDOM_ORDER, required=False,
                        help='Vertex count of the random graphs')
    parser.add_argument('--seed', dest='seed', action='store', type=int,
                        default=DEFAULT_SEED, required=False,
                        help='Seed of the first random graph')
    parser.add_argument('--skip-invalid', dest='skip_invalid',
                        action='store_true', required=False,
                        help='Skip undecodable or non-subcubic graphs without failing')
    parser.add_argument('--jobs', dest='jobs', action='store', type=int,
                        default=int(os.getenv(ENV_JOBS, "1")),
                        required=False,
                        help='Number of worker processes. Can also set using environment variable %s' % (ENV_JOBS))
    parser.add_argument('--manifest', dest='manifest', action='store',
                        default=os.getenv(ENV_MANIFEST, None),
                        required=False,
                        help='Write the run manifest to this file instead of stderr. Can also set using environment variable %s' % (ENV_MANIFEST))
    add_common_arguments(parser)


def add_bound_arguments(parser):
    parser.add_argument('--bounds', dest='bounds', action='store',
                        default=None, required=False,
                        help='all, a comma separated list of %s, or bound names from the bounds file' % ",".join(bound_names()))
    parser.add_argument('--bounds-file', dest='bounds_file', action='store',
                        default=os.getenv(ENV_BOUNDS_PATH, None),
                        required=False,
                        help='Yaml or JSON file or directory declaring bounds and polyhedra. Can also set using environment variable %s' % (ENV_BOUNDS_PATH))
    parser.add_argument('--triple', dest='triple', nargs=3,
                        type=fraction_argument, default=None,
                        metavar=('X3', 'X2', 'X1'), required=False,
                        help='Custom coefficients of n3, n2 and n1')
    parser.add_argument('--k', dest='k', action='store',
                        type=fraction_argument, default=parse_fraction("0"),
                        required=False,
                        help='Constant K of the custom bound, charged per component')
    parser.add_argument('--biedl', dest='biedl', action='store_true',
                        required=False,
                        help='Also check nu >= (3n + n2)/9')


class CustomLogHandler(logging.StreamHandler):

    def __init__(self, stream=None):
        if stream is not None:
            super(CustomLogHandler, self).__init__(stream)
        else:
            super(CustomLogHandler, self).__init__()

    def emit(self, record):
        saved_message = record.msg
        messages = str(record.msg).split('\n')
        for message in messages:
            record.msg = message
            super(CustomLogHandler, self).emit(record)
        record.msg = saved_message


class SubcubicVerify(object):

    def __init__(self, args, action):
        self.args = args
        self.action = action
        self.logger = None
        self.manifest = None
        self.bound_file_parser = None
        self.log_file = None
        self.start_time = None

    def setup_logging(self):
        OUTPUT_LEVEL_NUM = logging.ERROR + 5
        logging.addLevelName(OUTPUT_LEVEL_NUM, "OUTPUT")

        def output(self, msg, *args, **kwargs):
            if self.isEnabledFor(OUTPUT_LEVEL_NUM):
                self._log(OUTPUT_LEVEL_NUM, msg, args, **kwargs)

        logging.Logger.output = output

        self.logger = logging.getLogger("subcubic_matching")
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
        self.logger.propagate = False

        log_level = getattr(self.args, "log_level", DEFAULT_LOG_LEVEL).upper()
        if log_level not in LOG_LEVEL_STRS:
            print("Invalid log level: " + str(log_level))
            sys.exit(EXIT_USAGE)

        self.logger.setLevel(logging.getLevelName(log_level))

        log_formatter = logging.Formatter("%(levelname)-6s: %(message)s")

        if getattr(self.args, "log_file", ""):
            self.log_file = open(self.args.log_file, "w")
            file_handler = CustomLogHandler(self.log_file)
            file_handler.setFormatter(log_formatter)
            self.logger.addHandler(file_handler)

        if getattr(self.args, "debug", False):
            debug_handler = CustomLogHandler(sys.stderr)
            debug_handler.setFormatter(log_formatter)
            self.logger.addHandler(debug_handler)
        else:
            output_handler = logging.StreamHandler(sys.stderr)
            output_handler.setLevel(OUTPUT_LEVEL_NUM)
            self.logger.addHandler(output_handler)

    def run(self):
        self.setup_logging()

        exit_code = EXIT_SUCCESS
        had_error = False
        error_output = ""
        try:
            if self.action == POLYTOPE_ACTION:
                exit_code = self.run_polytope()
            elif self.action == VERIFY_ACTION:
                exit_code = self.run_verify()
            elif self.action == FAMILY_ACTION:
                exit_code = self.run_family()
            elif self.action == COUNTEREXAMPLE_ACTION:
                exit_code = self.run_counterexample()
            elif self.action == GE_ACTION:
                exit_code = self.run_ge()
            elif self.action == THEOREM1_ACTION:
                exit_code = self.run_theorem1()
            elif self.action == ENUMERATE_ACTION:
                exit_code = self.run_enumerate()
        except MatchingBoundsError as e:
            error_output = e.get_display_string()
            self.logger.error(error_output)
            self.logger.debug("Stack trace", exc_info=True)
            had_error = True
            exit_code = EXIT_USAGE
        except Exception as e:
            error_output = str(e)
            self.logger.exception(error_output)
            had_error = True
            exit_code = EXIT_INTERNAL_ERROR
        finally:
            if self.log_file is not None:
                self.log_file.close()

        if had_error:
            print("")
            print("Error")
            print("-----")
            print(error_output)

        sys.exit(exit_code)

    #
    # Polytope commands
    #

    def run_polytope(self):
        action = self.args.polytopeAction
        if action == VERTICES_ACTION:
            p = self.get_polyhedron(self.args.polyhedron)
            points = vertices(p)
            if self.args.maximal:
                points = maximal_vertices(points)
            ordered = sorted(points)
            if self.args.json:
                print(json.dumps([format_triple(x) for x in ordered]))
            else:
                print(render_text(POINT_LIST_TEXT,
                                  points=[format_triple(x)
                                          for x in ordered]))
            self.logger.info("%d vertices of %s" % (len(ordered), p.name))

        elif action == CONTAINS_ACTION:
            p = self.get_polyhedron(self.args.polyhedron)
            x = CoefficientTriple(*self.args.triple)
            verdict = contains(p, x)
            if self.args.json:
                print(json.dumps({
                    "triple": format_triple(x),
                    "inside": verdict.inside,
                    "violated": [p.halfspace(i).label
                                 for i in verdict.violated],
                    "margins": [format_fraction(m)
                                for m in verdict.margins]}))
            else:
                print(render_text(MEMBERSHIP_TEXT,
                                  verdict=describe_verdict(p, verdict)))

        elif action == PROJECT_ACTION:
            projected = project_to_Pplus(CoefficientTriple(*self.args.triple))
            print(format_triple(projected))

        elif action == SHIFT_ACTION:
            shifted = shift_transform(CoefficientTriple(*self.args.triple),
                                      self.args.shift_amount)
            inside = contains(polyhedron_P(), shifted).inside
            if self.args.json:
                print(json.dumps({"triple": format_triple(shifted),
                                  "in_p": inside}))
            else:
                print(render_text(POINT_IN_P_TEXT,
                                  point=format_triple(shifted),
                                  inside=inside))

        elif action == HALFSPACES_ACTION:
            rows = [{"index": index, "label": h.label,
                     "family": HALFSPACE_FAMILIES[index]}
                    for index, h in enumerate(polyhedron_P(), start=1)]
            if self.args.json:
                print(json.dumps(rows))
            else:
                print(render_text(HALFSPACE_LIST_TEXT, rows=rows))

        return EXIT_SUCCESS

    def get_polyhedron(self, name):
        if name in BUILTIN_POLYHEDRA:
            return BUILTIN_POLYHEDRA[name]()
        return self.get_bound_file_parser().get_polyhedron(name)

    def get_bound_file_parser(self):
        if self.bound_file_parser is None:
            self.bound_file_parser = BoundFileParser()
            self.bound_file_parser.set_logger(self.logger)
            if self.args.bounds_file is not None:
                self.bound_file_parser.read_data(self.args.bounds_file)
        return self.bound_file_parser

    #
    # Sweep commands
    #

    def get_bounds(self):
        bounds = list()
        selection = self.args.bounds
        if selection is None and self.args.triple is None and \
                not self.args.biedl:
            selection = "all"

        if selection is not None:
            for name in selection.split(","):
                name = name.strip()
                if name.lower() == "all":
                    bounds.extend(theorem3_bounds())
                elif name.lower() in bound_names():
                    bounds.append(bound_by_name(name))
                else:
                    bounds.append(
                        self.get_bound_file_parser().get_bound(name))

        if self.args.triple is not None:
            bounds.append(BoundSpec(self.args.triple, self.args.k,
                                    per_component=True, name="custom"))
        if self.args.biedl:
            bounds.append(biedl_bound())
        return bounds

    def run_verify(self):
        bounds = self.get_bounds()
        self.start_manifest({"bounds": [spec.name for spec in bounds]})

        sweep = BoundSweep(bounds, jobs=self.args.jobs)
        sweep.set_logger(self.logger)

        def handle(result):
            for spec, report in result.reports:
                violation = is_violation(report)
                if self.args.tight_only and not report.tight:
                    continue
                if self.args.violations_only and not violation:
                    continue
                self.print_bound_report(result.graph, spec, report)

        self.run_sweep(sweep, self.iter_source_graphs(), handle)
        return self.finish_manifest(sweep)

    def print_bound_report(self, g, spec, report):
        data = bound_report_dict(g, spec, report)
        if self.args.json:
            print(to_json_line(data))
        else:
            print(render_text(BOUND_REPORT_TEXT,
                              violation=is_violation(report), **data))

    def run_ge(self):
        self.start_manifest()
        sweep = StructureSweep(jobs=self.args.jobs)
        sweep.set_logger(self.logger)

        def handle(result):
            data = ge_report_dict(result.graph, result.decomposition,
                                  result.report, result.all_true)
            if self.args.json:
                print(to_json_line(data))
            else:
                print(render_text(GE_REPORT_TEXT, **data))

        self.run_sweep(sweep, self.iter_source_graphs(), handle)
        return self.finish_manifest(sweep)

    def run_theorem1(self):
        self.start_manifest()
        failures = 0
        try:
            for g in self.iter_source_graphs(require_connected=True):
                report = theorem1_check(g)
                self.manifest.count("graphs_checked")
                checked = [r for r in (report.cubic_report,
                                       report.general_report)
                           if r is not None]
                if any(is_violation(r) for r in checked):
                    failures += 1
                    self.manifest.count("violations")
                if any(r.tight for r in checked):
                    self.manifest.count("tight")
                self.print_theorem1_report(g, report)
        except KeyboardInterrupt:
            self.manifest.partial = True
            self.logger.error("Interrupted, manifest is partial")
        return self.finish_manifest(None)

    def print_theorem1_report(self, g, report):
        graph6 = emit_graph6(g).decode("ascii")
        if self.args.json:
            data = {"graph": graph6, "nu": report.nu,
                    "vertex_count": report.vertex_count,
                    "cubic": report.cubic}
            for name in ("cubic_report", "general_report",
                         "combined_report"):
                r = getattr(report, name)
                data[name] = None if r is None else {
                    "rhs": format_fraction(r.rhs),
                    "slack": format_fraction(r.slack),
                    "tight": r.tight}
            print(to_json_line(data))
        else:
            print(render_text(THEOREM1_TEXT, graph=graph6,
                              **report._asdict()))

    def run_sweep(self, sweep, graphs, handle):
        try:
            for result in sweep.run(graphs):
                handle(result)
        except KeyboardInterrupt:
            self.manifest.partial = True
            self.logger.error("Interrupted, manifest is partial")

    def iter_source_graphs(self, require_connected=False):
        args = self.args
        if args.enumerate is not None:
            enumerator = GraphEnumerator()
            enumerator.set_logger(self.logger)
            for g in enumerator.enumerate(EnumerationConfig(args.enumerate)):
                yield g

        for path in args.file or list():
            for entry in read_corpus(path):
                g = self.check_entry(entry, require_connected)
                if g is not None:
                    yield g

        for index, line in enumerate(args.graph6 or list(), start=1):
            source = "--graph6 argument %d" % index
            for entry in iter_graph6_lines([line], source=source):
                g = self.check_entry(entry, require_connected)
                if g is not None:
                    yield g

        for index in range(args.random):
            yield random_subcubic(args.order, args.seed + index)

    def check_entry(self, entry, require_connected):
        error = entry.error
        if error is None:
            location = "In %s line %d" % (entry.source, entry.line_number)
            try:
                check_subcubic(entry.graph)
                if require_connected and not is_connected(entry.graph):
                    raise NotConnectedError("Graph is not connected")
            except (NotSubcubicError, NotConnectedError) as e:
                e.add_location(location)
                error = e

        if error is None:
            return entry.graph

        self.manifest.count("invalid")
        message = "Invalid graph %s\n%s" % (
            entry.line.decode("ascii", "replace"),
            error.get_display_string())
        if self.args.skip_invalid:
            self.logger.warning(message)
        else:
            self.logger.error(message)
            sys.stderr.write(message + "\n")
        return None

    def start_manifest(self, extra_config=None):
        args = self.args
        config = {"jobs": args.jobs, "skip_invalid": args.skip_invalid,
                  "json": args.json}
        if extra_config is not None:
            config.update(extra_config)

        sources = list()
        if args.enumerate is not None:
            sources.append("enumerate:%d" % args.enumerate)
        for path in args.file or list():
            sources.append("file:%s" % path)
        if args.graph6:
            sources.append("graph6:%d" % len(args.graph6))
        if args.random:
            sources.append("random:%d@%d,seed=%d" % (args.random, args.order,
                                                      args.seed))

        self.manifest = RunManifest(self.action, config, ", ".join(sources))
        self.start_time = time.time()

    def finish_manifest(self, sweep):
        if sweep is not None:
            for name, amount in sweep.counts.items():
                self.manifest.count(name, amount)
        self.manifest.wall_time = time.time() - self.start_time

        text = (self.manifest.to_json() if self.args.json else
                self.manifest.to_yaml())
        if self.args.manifest:
            with open(self.args.manifest, "w") as f:
                f.write(text)
        else:
            sys.stderr.write(text)

        self.logger.info("Checked %d graphs, %d violations" %
                         (self.manifest.counts["graphs_checked"],
                          self.manifest.violations))

        if self.manifest.counts["invalid"] > 0 and \
                not self.args.skip_invalid:
            return EXIT_USAGE
        if self.manifest.violations > 0 or self.manifest.partial:
            return EXIT_FAILURE
        return EXIT_SUCCESS

    #
    # Family and counterexample commands
    #

    def run_family(self):
        spec = FamilySpec(self.args.family_id, self.args.t)
        if self.args.emit == EMIT_GRAPH6:
            print(emit_graph6(generate(spec)).decode("ascii"))
            return EXIT_SUCCESS

        certify_limit = 60
        certified_nu = None
        profile = closed_profile(spec)
        nu = closed_nu(spec)
        exit_code = EXIT_SUCCESS
        if closed_vertex_count(spec) <= certify_limit:
            g = generate(spec)
            certified_nu = matching_number(g)
            if certified_nu != nu or degree_profile(g) != profile:
                exit_code = EXIT_FAILURE

        if self.args.json:
            data = {"family": spec.family_id, "t": spec.t,
                    "vertices": closed_vertex_count(spec),
                    "profile": dict(profile._asdict()),
                    "nu": nu, "certified_nu": certified_nu}
            print(json.dumps(data))
        else:
            print(render_text(FAMILY_STATS_TEXT, spec=str(spec),
                              vertex_count=closed_vertex_count(spec),
                              profile=profile, nu=nu,
                              certified_nu=certified_nu,
                              certify_limit=certify_limit))
        return exit_code

    def run_counterexample(self):
        triple = CoefficientTriple(*self.args.triple)
        result = counterexample(triple, self.args.k)
        halfspace = polyhedron_P().halfspace(result.halfspace)
        graph6 = ("" if result.graph is None else
                  emit_graph6(result.graph).decode("ascii"))
        data = {"triple": format_triple(triple),
                "k": format_fraction(self.args.k),
                "halfspace_index": result.halfspace,
                "halfspace": halfspace.label,
                "spec": str(result.spec),
                "vertex_count": closed_vertex_count(result.spec),
                "graph6": graph6,
                "nu": result.report.lhs,
                "rhs": format_fraction(result.report.rhs),
                "slack": format_fraction(result.report.slack),
                "slack_display": format_decimal(result.report.slack),
                "certified": result.certified}
        if self.args.json:
            print(json.dumps(data, sort_keys=True))
        else:
            print(render_text(COUNTEREXAMPLE_TEXT, **data))
        return EXIT_SUCCESS

    def run_enumerate(self):
        cfg = EnumerationConfig(self.args.max_n,
                                connected_only=not self.args.all_graphs)
        enumerator = GraphEnumerator()
        enumerator.set_logger(self.logger)
        if self.args.count:
            counts = enumerator.count_by_order(cfg)
            if self.args.json:
                print(json.dumps(dict((str(n), c)
                                      for n, c in counts.items())))
            else:
                for n, c in counts.items():
                    print("n=%d: %d" % (n, c))
        else:
            for g in enumerator.enumerate(cfg):
                print(emit_graph6(g).decode("ascii"))
        return EXIT_SUCCESS


if __name__ == "__main__":
    main()
