"""
Exact enumeration and counting of size-t independent sets.
"""
import logging
from dataclasses import dataclass

import networkx as nx
from django.conf import settings

from .exceptions import ContractError, CountOverflow, NotATree
from .graph_core import Tree, VertexSet

logger = logging.getLogger(__name__)


def _check_size(t):
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise ContractError('set size t must be a positive integer, got '
                            '{0!r}'.format(t))


def _adjacency(graph):
    """Node count and neighbour bitmasks of a Tree or a networkx graph."""
    if isinstance(graph, Tree):
        return graph.n, graph.neighbor_masks
    n = graph.number_of_nodes()
    if set(graph.nodes) != set(range(n)):
        raise ContractError('graph vertices must be numbered 0..n-1')
    masks = tuple(
        sum(1 << w for w in graph.neighbors(v) if w != v) for v in range(n)
    )
    return n, masks


def _tree_graph(tree):
    if isinstance(tree, Tree):
        return tree.graph
    if not nx.is_tree(tree):
        raise NotATree('tree dynamic programs refuse cyclic or disconnected '
                       'input')
    return tree


def iter_indep_sets(graph, t):
    """
    Yield the independent sets of size t in lexicographic order of their
    members. Works on any graph; the tree DPs use it as their oracle.
    """
    _check_size(t)
    n, masks = _adjacency(graph)
    chosen = []

    def extend(start, bits, blocked):
        if len(chosen) == t:
            yield VertexSet(n, bits)
            return
        for vertex in range(start, n - (t - len(chosen)) + 1):
            if blocked >> vertex & 1:
                continue
            chosen.append(vertex)
            yield from extend(
                vertex + 1,
                bits | 1 << vertex,
                blocked | masks[vertex],
            )
            chosen.pop()

    yield from extend(0, 0, 0)


def enum_indep_sets(graph, t):
    return list(iter_indep_sets(graph, t))


@dataclass(frozen=True)
class StarTable:
    """
    Star sizes |I^t_x(G)| for every vertex x, with the family size
    |I^t(G)|.
    """
    tree: object
    t: int
    counts: tuple
    total: int

    def __post_init__(self):
        # Each t-set is counted once at each of its t members.
        if sum(self.counts) != self.t * self.total:
            raise AssertionError(
                'star counts {0} do not add up to t * total = {1} * {2}'
                .format(sum(self.counts), self.t, self.total)
            )

    def count(self, vertex):
        return self.counts[vertex]

    @property
    def max_count(self):
        return max(self.counts) if self.counts else 0

    def argmax(self):
        best = self.max_count
        return [v for v, count in enumerate(self.counts) if count == best]

    def rows(self):
        for vertex, count in enumerate(self.counts):
            yield vertex, self.tree.label(vertex), count


def _count_limit(count_bits):
    if count_bits is None:
        count_bits = settings.SPIDER_EKR['COUNT_BITS']
    return (1 << count_bits) - 1


def _convolve(left, right, t, limit):
    # Size-indexed product of two count polynomials, truncated at degree t.
    result = [0] * min(len(left) + len(right) - 1, t + 1)
    for i, a in enumerate(left):
        if not a:
            continue
        for j, b in enumerate(right):
            if i + j > t:
                break
            value = result[i + j] + a * b
            if value > limit:
                raise CountOverflow(
                    'independent set count exceeds {0}'.format(limit)
                )
            result[i + j] = value
    return result


def _add(left, right, limit):
    size = max(len(left), len(right))
    result = []
    for index in range(size):
        value = (left[index] if index < len(left) else 0) + \
                (right[index] if index < len(right) else 0)
        if value > limit:
            raise CountOverflow(
                'independent set count exceeds {0}'.format(limit)
            )
        result.append(value)
    return result


def _rooted_counts(graph, root, t, limit):
    """
    Count polynomials at the root: index s holds the number of independent
    sets of size s of the whole tree with the root in (first list) or out
    (second list).
    """
    parents = nx.dfs_predecessors(graph, source=root)
    inside = {}
    outside = {}
    for vertex in nx.dfs_postorder_nodes(graph, source=root):
        with_vertex = [0, 1]
        without_vertex = [1]
        for child in graph.neighbors(vertex):
            if parents.get(vertex) == child:
                continue
            with_vertex = _convolve(with_vertex, outside[child], t, limit)
            without_vertex = _convolve(
                without_vertex,
                _add(inside[child], outside[child], limit),
                t,
                limit,
            )
            del inside[child], outside[child]
        inside[vertex] = with_vertex[:t + 1]
        outside[vertex] = without_vertex
    return inside[root], outside[root]


def _coefficient(polynomial, t):
    return polynomial[t] if t < len(polynomial) else 0


def star_sizes(tree, t, count_bits=None):
    """
    Star table of size-t independent sets, by a size-indexed tree DP
    rooted at each vertex in turn with the root forced in.
    """
    _check_size(t)
    graph = _tree_graph(tree)
    if not isinstance(tree, Tree):
        tree = Tree.from_graph(graph)
    limit = _count_limit(count_bits)

    counts = []
    total = None
    for root in range(tree.n):
        inside, outside = _rooted_counts(graph, root, t, limit)
        counts.append(_coefficient(inside, t))
        if total is None:
            total = _coefficient(_add(inside, outside, limit), t)

    logger.debug('star table n=%d t=%d total=%d', tree.n, t, total)
    return StarTable(tree=tree, t=t, counts=tuple(counts), total=total)


def alpha(tree):
    """Size of a maximum independent set, by the two-state tree DP."""
    graph = _tree_graph(tree)
    root = min(graph.nodes)
    parents = nx.dfs_predecessors(graph, source=root)
    take = {}
    skip = {}
    for vertex in nx.dfs_postorder_nodes(graph, source=root):
        children = [w for w in graph.neighbors(vertex)
                    if parents.get(vertex) != w]
        take[vertex] = 1 + sum(skip[c] for c in children)
        skip[vertex] = sum(max(take[c], skip[c]) for c in children)
    return max(take[root], skip[root])


def _dominates(n, masks, vertex_set):
    covered = vertex_set.bits
    for vertex in vertex_set:
        covered |= masks[vertex]
    return covered == (1 << n) - 1


def is_maximal(graph, vertex_set):
    """An independent set is maximal iff it dominates every vertex."""
    n, masks = _adjacency(graph)
    return _dominates(n, masks, vertex_set)


def mu(tree):
    """
    Size of a smallest inclusion-maximal independent set, found by
    exhaustive search in increasing size.
    """
    _tree_graph(tree)
    n, masks = _adjacency(tree)
    for t in range(1, alpha(tree) + 1):
        for vertex_set in iter_indep_sets(tree, t):
            if _dominates(n, masks, vertex_set):
                return t
    # A maximum independent set is always maximal.
    raise AssertionError('no maximal independent set found')
