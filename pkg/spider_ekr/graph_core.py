"""
Trees, spiders and vertex sets.

Vertices are the integers 0..n-1. A spider S(L) numbers its head 0 and then
the vertices of each leg in height order, leg after leg, in the order the
leg lengths are given.
"""
import functools
import logging
import os

import networkx as nx

from .exceptions import CoordinateRangeError, InvalidDescriptor, NotATree

logger = logging.getLogger(__name__)

HEAD = 'head'


@functools.total_ordering
class VertexSet:
    """
    Canonical fixed-width bit-vector over the vertex ids 0..n-1.

    Two sets are ordered by their sorted member tuples, so for a fixed size
    the order is the lexicographic order of the members.
    """
    __slots__ = ('n', 'bits')

    def __init__(self, n, bits=0):
        if bits < 0 or bits >> n:
            raise CoordinateRangeError(
                'bits {0:b} do not fit in width {1}'.format(bits, n)
            )
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'bits', bits)

    def __setattr__(self, name, value):
        raise AttributeError('VertexSet is immutable')

    @classmethod
    def from_ids(cls, n, ids):
        bits = 0
        for vertex in ids:
            if not 0 <= vertex < n:
                raise CoordinateRangeError(
                    'vertex {0} out of range 0..{1}'.format(vertex, n - 1)
                )
            bits |= 1 << vertex
        return cls(n, bits)

    @property
    def members(self):
        bits = self.bits
        result = []
        while bits:
            low = bits & -bits
            result.append(low.bit_length() - 1)
            bits ^= low
        return tuple(result)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return bin(self.bits).count('1')

    def __contains__(self, vertex):
        return 0 <= vertex < self.n and bool(self.bits >> vertex & 1)

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __lt__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return (self.members, self.n) < (other.members, other.n)

    def __hash__(self):
        return hash((self.n, self.bits))

    def __repr__(self):
        return 'VertexSet({0}, {1})'.format(self.n, list(self.members))

    def intersects(self, other):
        return bool(self.bits & other.bits)

    def union(self, *others):
        bits = self.bits
        for other in others:
            bits |= other.bits
        return VertexSet(self.n, bits)

    def difference(self, other):
        return VertexSet(self.n, self.bits & ~other.bits)

    def intersection(self, other):
        return VertexSet(self.n, self.bits & other.bits)

    def with_ids(self, *ids):
        return self.union(VertexSet.from_ids(self.n, ids))

    def without_ids(self, *ids):
        return self.difference(VertexSet.from_ids(self.n, ids))


class Tree:
    """
    Finite connected acyclic graph on the vertices 0..n-1.

    The adjacency is held in a networkx graph; the neighbour bitmasks are
    precomputed for the independence tests of the enumeration.
    """

    def __init__(self, n, edges):
        if n < 1:
            raise InvalidDescriptor('A tree needs at least one vertex.')

        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidDescriptor(
                    'Edge {0}-{1} leaves the vertex range.'.format(u, v)
                )
            if u == v:
                raise InvalidDescriptor(
                    'Self-loop on vertex {0}.'.format(u)
                )
            if graph.has_edge(u, v):
                raise InvalidDescriptor(
                    'Duplicate edge {0}-{1}.'.format(u, v)
                )
            graph.add_edge(u, v)

        if not nx.is_tree(graph):
            raise NotATree(
                'The graph on {0} vertices with {1} edges is not a tree.'
                .format(n, graph.number_of_edges())
            )

        self.n = n
        self.graph = nx.freeze(graph)
        self.neighbor_masks = tuple(
            sum(1 << w for w in graph.neighbors(v)) for v in range(n)
        )

    @classmethod
    def from_graph(cls, graph):
        """Build a tree from a networkx graph whose nodes are 0..n-1."""
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            raise InvalidDescriptor('Vertices must be numbered 0..n-1.')
        return cls(n, graph.edges)

    def neighbors(self, vertex):
        self._check_vertex(vertex)
        return sorted(self.graph.neighbors(vertex))

    def degree(self, vertex):
        self._check_vertex(vertex)
        return self.graph.degree(vertex)

    @property
    def edges(self):
        return sorted(tuple(sorted(edge)) for edge in self.graph.edges)

    def leaves(self):
        return [v for v in range(self.n) if self.graph.degree(v) == 1]

    def is_leaf(self, vertex):
        return self.degree(vertex) == 1

    def label(self, vertex):
        """Human readable name of a vertex."""
        return str(vertex)

    def empty_set(self):
        return VertexSet(self.n)

    def vertex_set(self, ids):
        return VertexSet.from_ids(self.n, ids)

    def _check_vertex(self, vertex):
        if not 0 <= vertex < self.n:
            raise CoordinateRangeError(
                'vertex {0} out of range 0..{1}'.format(vertex, self.n - 1)
            )

    def __repr__(self):
        return 'Tree(n={0}, edges={1})'.format(self.n, self.edges)


class Spider(Tree):
    """
    The spider S(L): a head v0 with a path (leg) of length l_i hanging
    from it for every entry of L.

    Legs are numbered from 1 and heights from 1, so v_{i,j} is
    the coordinate (i, j); the head is the coordinate HEAD.
    """

    def __init__(self, legs):
        legs = validate_legs(legs)

        edges = []
        offsets = []
        next_id = 1
        for length in legs:
            offsets.append(next_id)
            previous = 0
            for _height in range(length):
                edges.append((previous, next_id))
                previous = next_id
                next_id += 1

        super(Spider, self).__init__(next_id, edges)
        self.legs = legs
        self.k = len(legs)
        self._offsets = tuple(offsets)

    @property
    def head(self):
        return 0

    def leg_length(self, leg):
        self._check_leg(leg)
        return self.legs[leg - 1]

    def vertex_id(self, coordinate):
        if coordinate == HEAD:
            return 0
        try:
            leg, height = coordinate
        except (TypeError, ValueError):
            raise CoordinateRangeError(
                'malformed coordinate {0!r}'.format(coordinate)
            )
        self._check_leg(leg)
        if not 1 <= height <= self.legs[leg - 1]:
            raise CoordinateRangeError(
                'height {0} out of range on leg {1} of length {2}'.format(
                    height, leg, self.legs[leg - 1]
                )
            )
        return self._offsets[leg - 1] + height - 1

    def coordinate_of(self, vertex):
        self._check_vertex(vertex)
        if vertex == 0:
            return HEAD
        for index, offset in enumerate(self._offsets):
            if offset <= vertex < offset + self.legs[index]:
                return index + 1, vertex - offset + 1

    def v(self, leg, height):
        """Vertex id of v_{leg,height}; height 0 is the head."""
        if height == 0:
            self._check_leg(leg)
            return 0
        return self.vertex_id((leg, height))

    def leaf(self, leg):
        return self.v(leg, self.leg_length(leg))

    def leg_path(self, leg):
        """The leg S_i as the id list v0, v_{i,1}, ..., v_{i,l_i}."""
        return [self.v(leg, height)
                for height in range(self.leg_length(leg) + 1)]

    def leg_leaves(self):
        return [self.leaf(leg) for leg in range(1, self.k + 1)]

    def label(self, vertex):
        coordinate = self.coordinate_of(vertex)
        if coordinate == HEAD:
            return 'v0'
        return 'v{0},{1}'.format(*coordinate)

    def descriptor(self):
        return format_descriptor(self.legs)

    def is_spider_ordered(self):
        return tuple(spider_order(self.legs)) == self.legs

    def _check_leg(self, leg):
        if not 1 <= leg <= self.k:
            raise CoordinateRangeError(
                'leg {0} out of range 1..{1}'.format(leg, self.k)
            )

    def __repr__(self):
        return 'Spider({0})'.format(self.descriptor())


def validate_legs(legs):
    try:
        legs = tuple(legs)
    except TypeError:
        raise InvalidDescriptor('Leg lengths must be a sequence.')
    if not legs:
        raise InvalidDescriptor('A spider needs at least one leg.')
    for length in legs:
        if isinstance(length, bool) or not isinstance(length, int):
            raise InvalidDescriptor(
                'Leg length {0!r} is not an integer.'.format(length)
            )
        if length <= 0:
            raise InvalidDescriptor(
                'Leg length {0} is not positive.'.format(length)
            )
    return legs


def make_spider(legs):
    return Spider(legs)


def spider_order(legs):
    """
    Reorder leg lengths into spider order: odd lengths ascending, then even
    lengths descending. The sort is stable among equal lengths.
    """
    legs = validate_legs(legs)
    return tuple(sorted(
        legs,
        key=lambda length: (0, length) if length % 2 else (1, -length),
    ))


def parse_descriptor(text):
    """Parse a spider descriptor such as "3,1,2,4"."""
    parts = [part.strip() for part in str(text).split(',')]
    try:
        legs = [int(part) for part in parts]
    except ValueError:
        raise InvalidDescriptor(
            '"{0}" is not a comma-separated list of positive integers.'
            .format(text)
        )
    return validate_legs(legs)


def format_descriptor(legs):
    return ','.join(str(length) for length in legs)


def vertex_id(spider, coordinate):
    return spider.vertex_id(coordinate)


def coordinate_of(spider, vertex):
    return spider.coordinate_of(vertex)


def is_independent(tree, vertex_set):
    """True iff no edge of the tree has both endpoints in the set."""
    if vertex_set.n != tree.n:
        raise CoordinateRangeError(
            'set of width {0} on a tree with {1} vertices'.format(
                vertex_set.n, tree.n
            )
        )
    bits = vertex_set.bits
    for vertex in vertex_set:
        if tree.neighbor_masks[vertex] & bits:
            return False
    return True


def parse_tree(text, source='<string>'):
    """
    Read the edge-list format: a first line "n <count>", then one "u v"
    line per edge with 0-based ids. Blank lines and "#" comments are
    skipped.
    """
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append((number, line.split()))

    if not lines or len(lines[0][1]) != 2 or lines[0][1][0] != 'n':
        raise InvalidDescriptor(
            '{0}: the first line must read "n <count>".'.format(source)
        )

    try:
        n = int(lines[0][1][1])
        edges = []
        for number, fields in lines[1:]:
            if len(fields) != 2:
                raise ValueError(number)
            edges.append((int(fields[0]), int(fields[1])))
    except ValueError:
        raise InvalidDescriptor(
            '{0}: malformed line in edge list.'.format(source)
        )

    try:
        return Tree(n, edges)
    except NotATree as err:
        raise InvalidDescriptor('{0}: {1}'.format(source, err))


def load_tree(path):
    try:
        with open(path, encoding='utf-8') as handle:
            text = handle.read()
    except OSError as err:
        raise InvalidDescriptor(
            'Cannot read tree file {0}: {1}'.format(path, err.strerror)
        )
    except UnicodeDecodeError:
        raise InvalidDescriptor(
            '{0}: not a text file.'.format(os.path.basename(path))
        )
    logger.debug('loaded tree file %s', path)
    return parse_tree(text, source=os.path.basename(path))


def dump_tree(tree):
    lines = ['n {0}'.format(tree.n)]
    lines.extend('{0} {1}'.format(u, v) for u, v in tree.edges)
    return '\n'.join(lines) + '\n'


def _partitions(total, largest):
    # Non-increasing tuples, yielded in ascending lexicographic order.
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, largest) + 1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def spider_catalog(max_n, min_n=2):
    """
    Every spider with min_n <= 1 + sum(L) <= max_n, once per leg multiset,
    as leg tuples in spider order.
    """
    for n in range(max(min_n, 2), max_n + 1):
        for multiset in _partitions(n - 1, n - 1):
            yield spider_order(multiset)
