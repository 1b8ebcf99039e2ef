"""
graph6 reading and writing.

A line holds N(n) followed by the upper triangle of the adjacency matrix,
column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six bits per
printable byte (value + 63) and padded with zero bits.
"""
import collections
import os

from .errors import MalformedGraph6Error, MatchingBoundsError
from .graph import Graph

GRAPH6_HEADER = b">>graph6<<"
BIAS = 63
MAX_SMALL_ORDER = 62
MAX_MEDIUM_ORDER = 258047
LARGE_ORDER_PREFIX = b"~~"
MEDIUM_ORDER_PREFIX = b"~"

Graph6Entry = collections.namedtuple("Graph6Entry",
                                     ["source", "line_number", "line",
                                      "graph", "error"])


def emit_graph6(g):
    """
    Returns the graph6 encoding of g as a byte string (no newline).
    """
    n = g.vertex_count
    data = bytearray(_encode_order(n))

    value = 0
    bits = 0
    for j in range(1, n):
        for i in range(j):
            value = (value << 1) | (1 if g.has_edge(i, j) else 0)
            bits += 1
            if bits == 6:
                data.append(value + BIAS)
                value = 0
                bits = 0
    if bits > 0:
        data.append((value << (6 - bits)) + BIAS)

    return bytes(data)


def parse_graph6(line):
    """
    Decodes a single graph6 line (bytes or str).  A leading ">>graph6<<"
    header and trailing whitespace are ignored.
    """
    if isinstance(line, str):
        try:
            line = line.encode("ascii")
        except UnicodeEncodeError as e:
            raise MalformedGraph6Error("Non-ASCII character", offset=e.start)

    offset = 0
    if line.startswith(GRAPH6_HEADER):
        offset = len(GRAPH6_HEADER)
    data = line.rstrip()

    for position in range(offset, len(data)):
        if not (BIAS <= data[position] <= 126):
            raise MalformedGraph6Error("Invalid graph6 byte %r" %
                                       chr(data[position]),
                                       offset=position)

    n, offset = _decode_order(data, offset)

    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    found = len(data) - offset
    if found != expected:
        raise MalformedGraph6Error(
            "Expected %d adjacency bytes for %d vertices, found %d" %
            (expected, n, found), offset=min(len(data), offset + expected))

    edges = list()
    index = 0
    j = 1
    i = 0
    for position in range(offset, offset + expected):
        value = data[position] - BIAS
        for shift in range(5, -1, -1):
            if index >= pair_count:
                break
            if (value >> shift) & 1:
                edges.append((i, j))
            index += 1
            i += 1
            if i == j:
                j += 1
                i = 0

    return Graph(n, edges)


def iter_graph6_lines(lines, source="(internal)"):
    """
    Yields a Graph6Entry per nonblank line.  Undecodable lines are yielded
    with graph None and the error set, so callers decide whether to stop.
    Header-only lines are skipped.
    """
    for line_number, line in enumerate(lines, start=1):
        if isinstance(line, str):
            line = line.strip()
            try:
                line = line.encode("ascii")
            except UnicodeEncodeError as e:
                error = MalformedGraph6Error("Non-ASCII character",
                                             offset=e.start)
                error.add_location("In %s line %d" % (source, line_number))
                yield Graph6Entry(source, line_number,
                                  line.encode("ascii", "replace"), None,
                                  error)
                continue
        stripped = line.strip()
        if len(stripped) == 0 or stripped == GRAPH6_HEADER:
            continue
        try:
            graph = parse_graph6(stripped)
            error = None
        except MalformedGraph6Error as e:
            e.add_location("In %s line %d" % (source, line_number))
            graph = None
            error = e
        yield Graph6Entry(source, line_number, stripped, graph, error)


def read_graph6_file(path):
    """
    Streams Graph6Entry records from a graph6 file, one line at a time.
    """
    if not os.path.isfile(path):
        raise MatchingBoundsError("File not found: " + path)

    with open(path, "rb") as f:
        for entry in iter_graph6_lines(f, source=path):
            yield entry


def write_graph6_lines(graphs, stream, header=False):
    """
    Writes one graph6 line per graph to a text stream.
    """
    if header:
        stream.write(GRAPH6_HEADER.decode("ascii"))
    for g in graphs:
        stream.write(emit_graph6(g).decode("ascii") + "\n")


#
# Private functions to do the work
#

def _encode_order(n):
    if n <= MAX_SMALL_ORDER:
        return bytes([n + BIAS])
    if n <= MAX_MEDIUM_ORDER:
        return MEDIUM_ORDER_PREFIX + _pack_bits(n, 3)
    return LARGE_ORDER_PREFIX + _pack_bits(n, 6)


def _pack_bits(value, byte_count):
    return bytes([((value >> (6 * (byte_count - 1 - k))) & 0x3f) + BIAS
                  for k in range(byte_count)])


def _decode_order(data, offset):
    if offset >= len(data):
        raise MalformedGraph6Error("Missing vertex count", offset=offset)

    if data[offset:offset + 2] == LARGE_ORDER_PREFIX:
        width = 6
        start = offset + 2
    elif data[offset:offset + 1] == MEDIUM_ORDER_PREFIX:
        width = 3
        start = offset + 1
    else:
        return data[offset] - BIAS, offset + 1

    if start + width > len(data):
        raise MalformedGraph6Error("Truncated vertex count",
                                   offset=len(data))
    n = 0
    for position in range(start, start + width):
        n = (n << 6) | (data[position] - BIAS)

    return n, start + width
