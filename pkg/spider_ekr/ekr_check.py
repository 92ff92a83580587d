"""
Brute-force ground truth for EKR statements on small trees.

The largest intersecting subfamily of I^t(G) is a maximum clique of the
intersection graph of the family. It is found exactly by a colour-bounded
branch and bound over bitsets, or refused with BudgetExceeded.
"""
import logging
from dataclasses import dataclass, field

from django.conf import settings

from .enumeration import alpha, enum_indep_sets, mu, star_sizes
from .exceptions import BudgetExceeded, ContractError

logger = logging.getLogger(__name__)

OK = 'ok'
OVER_BUDGET = 'budget-exceeded'


def _budgets(budget_family, budget_nodes):
    if budget_family is None:
        budget_family = settings.SPIDER_EKR['BUDGET_FAMILY']
    if budget_nodes is None:
        budget_nodes = settings.SPIDER_EKR['BUDGET_NODES']
    return budget_family, budget_nodes


def _popcount(bits):
    return bin(bits).count('1')


def _lowest(bits):
    return (bits & -bits).bit_length() - 1


class _NodeCounter:

    def __init__(self, limit):
        self.limit = limit
        self.expanded = 0

    def tick(self):
        self.expanded += 1
        if self.expanded > self.limit:
            raise BudgetExceeded(
                'clique search passed {0} node expansions'.format(self.limit),
                kind='nodes',
                limit=self.limit,
            )


def _intersection_graph(family):
    """Bitmask adjacency of the family: i ~ j iff the sets meet."""
    stars = {}
    for index, member in enumerate(family):
        for vertex in member:
            stars[vertex] = stars.get(vertex, 0) | 1 << index
    adjacency = []
    for index, member in enumerate(family):
        bits = 0
        for vertex in member:
            bits |= stars[vertex]
        adjacency.append(bits & ~(1 << index))
    return adjacency


def _colour_sort(adjacency, candidates):
    """
    Greedy sequential colouring of the candidates. Returns the vertices in
    colour order with, for each, the number of colours used so far, which
    bounds any clique among the vertices up to it.
    """
    order = []
    bounds = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            vertex = low.bit_length() - 1
            available &= ~adjacency[vertex]
            available ^= low
            uncoloured ^= low
            order.append(vertex)
            bounds.append(colour)
    return order, bounds


def _relabel(adjacency):
    """Renumber vertices by descending degree, ties by index."""
    size = len(adjacency)
    order = sorted(range(size),
                   key=lambda vertex: (-_popcount(adjacency[vertex]), vertex))
    position = {vertex: index for index, vertex in enumerate(order)}
    relabelled = []
    for vertex in order:
        bits = 0
        rest = adjacency[vertex]
        while rest:
            low = rest & -rest
            bits |= 1 << position[low.bit_length() - 1]
            rest ^= low
        relabelled.append(bits)
    return relabelled


def _greedy_clique_size(adjacency):
    candidates = (1 << len(adjacency)) - 1
    size = 0
    while candidates:
        vertex = _lowest(candidates)
        size += 1
        candidates &= adjacency[vertex]
    return size


def _clique_number(adjacency, lower, counter):
    """Exact clique number, starting from a known lower bound."""
    best = lower
    everything = (1 << len(adjacency)) - 1
    order, bounds = _colour_sort(adjacency, everything)
    stack = [[0, everything, order, bounds, len(order) - 1]]
    while stack:
        frame = stack[-1]
        size, candidates, order, bounds, index = frame
        if index < 0 or size + bounds[index] <= best:
            stack.pop()
            continue

        counter.tick()
        vertex = order[index]
        frame[4] = index - 1
        frame[1] = candidates & ~(1 << vertex)
        grown = candidates & adjacency[vertex]
        if not grown:
            best = max(best, size + 1)
            continue
        child_order, child_bounds = _colour_sort(adjacency, grown)
        stack.append([size + 1, grown, child_order, child_bounds,
                      len(child_order) - 1])
    return best


def _first_clique(adjacency, target, counter):
    """
    The lexicographically least clique of the given size, scanning
    vertices in index order and including before excluding.
    """
    if target == 0:
        return []
    stack = [([], (1 << len(adjacency)) - 1)]
    while stack:
        clique, candidates = stack[-1]
        if len(clique) == target:
            return clique
        if len(clique) + _popcount(candidates) < target:
            stack.pop()
            continue

        counter.tick()
        vertex = _lowest(candidates)
        stack[-1] = (clique, candidates & ~(1 << vertex))
        grown = candidates & adjacency[vertex]
        need = target - len(clique) - 1
        if need and _popcount(grown) < need:
            continue
        if need and _colour_sort(adjacency, grown)[1][-1] < need:
            continue
        stack.append((clique + [vertex], grown))
    raise AssertionError('no clique of size {0}'.format(target))


def max_intersecting_family(family, budget_family=None, budget_nodes=None):
    """
    Size of a largest pairwise-intersecting subfamily, with the
    lexicographically least such subfamily as witness.
    """
    budget_family, budget_nodes = _budgets(budget_family, budget_nodes)
    family = sorted(family)
    if len(family) > budget_family:
        raise BudgetExceeded(
            'family of {0} sets exceeds the budget of {1}'.format(
                len(family), budget_family
            ),
            kind='family',
            limit=budget_family,
        )
    if not family:
        return 0, []

    adjacency = _intersection_graph(family)
    counter = _NodeCounter(budget_nodes)
    relabelled = _relabel(adjacency)
    size = _clique_number(
        relabelled, _greedy_clique_size(relabelled), counter
    )
    witness = [family[index]
               for index in _first_clique(adjacency, size, counter)]

    for position, first in enumerate(witness):
        for second in witness[position + 1:]:
            if not first.intersects(second):
                raise AssertionError(
                    'witness sets {0!r} and {1!r} are disjoint'.format(
                        first, second
                    )
                )
    logger.debug('clique search: %d sets, omega=%d, %d nodes',
                 len(family), size, counter.expanded)
    return size, witness


@dataclass
class EkrVerdict:
    tree_source: str
    t: int
    mu: int
    alpha: int
    max_star: int
    argmax_vertices: list
    in_conjecture_range: bool
    max_intersecting: object = None
    witness: list = field(default_factory=list)
    status: str = OK
    detail: str = ''

    @property
    def is_t_ekr(self):
        if self.max_intersecting is None:
            return None
        return self.max_intersecting <= self.max_star

    @property
    def reportable(self):
        """A verdict against the Holroyd-Talbot conjecture."""
        return self.in_conjecture_range and self.is_t_ekr is False


def _verdict(tree, t, mu_value, alpha_value, source, budget_family,
             budget_nodes, count_bits, record_budget=True):
    table = star_sizes(tree, t, count_bits=count_bits)
    verdict = EkrVerdict(
        tree_source=source,
        t=t,
        mu=mu_value,
        alpha=alpha_value,
        max_star=table.max_count,
        argmax_vertices=table.argmax(),
        in_conjecture_range=2 * t <= mu_value,
    )
    try:
        size, witness = max_intersecting_family(
            enum_indep_sets(tree, t), budget_family, budget_nodes
        )
    except BudgetExceeded as err:
        if not record_budget:
            raise
        verdict.status = OVER_BUDGET
        verdict.detail = str(err)
        logger.warning('%s t=%d: %s', source, t, err)
        return verdict

    verdict.max_intersecting = size
    verdict.witness = [list(member) for member in witness]
    if verdict.reportable:
        logger.warning('REPORTABLE: %s is not %d-EKR inside the conjecture '
                       'range (mu=%d)', source, t, mu_value)
    return verdict


def _source(tree, source):
    if source is not None:
        return source
    if hasattr(tree, 'descriptor'):
        return 'spider:' + tree.descriptor()
    return 'tree:n={0}'.format(tree.n)


def is_t_ekr(tree, t, budget_family=None, budget_nodes=None, source=None,
             count_bits=None, record_budget=False):
    """
    Verdict on whether every intersecting subfamily of I^t(tree) is at
    most as large as the largest star. A budget overrun raises
    BudgetExceeded unless record_budget is set, in which case it is noted
    in the verdict.
    """
    budget_family, budget_nodes = _budgets(budget_family, budget_nodes)
    alpha_value = alpha(tree)
    if not 1 <= t <= alpha_value:
        raise ContractError(
            't={0} outside 1..alpha={1}'.format(t, alpha_value)
        )
    return _verdict(tree, t, mu(tree), alpha_value, _source(tree, source),
                    budget_family, budget_nodes, count_bits,
                    record_budget=record_budget)


def holroyd_talbot_scan(tree, budget_family=None, budget_nodes=None,
                        source=None, count_bits=None):
    """
    One verdict for every 1 <= t <= mu/2. A budget overrun is recorded
    in the verdict of that t and the scan goes on.
    """
    budget_family, budget_nodes = _budgets(budget_family, budget_nodes)
    mu_value = mu(tree)
    alpha_value = alpha(tree)
    source = _source(tree, source)
    return [
        _verdict(tree, t, mu_value, alpha_value, source, budget_family,
                 budget_nodes, count_bits)
        for t in range(1, mu_value // 2 + 1)
    ]


@dataclass
class CenterReport:
    t: int
    max_star: int
    argmax_vertices: list
    any_leaf: bool


def best_center_report(tree, t, count_bits=None):
    alpha_value = alpha(tree)
    if not 1 <= t <= alpha_value:
        raise ContractError(
            't={0} outside 1..alpha={1}'.format(t, alpha_value)
        )
    table = star_sizes(tree, t, count_bits=count_bits)
    argmax = table.argmax()
    return CenterReport(
        t=t,
        max_star=table.max_count,
        argmax_vertices=argmax,
        any_leaf=any(tree.is_leaf(vertex) for vertex in argmax),
    )


@dataclass
class LeafProfile:
    t: int
    legs: tuple
    counts: list
    weakly_decreasing: bool


def leaf_star_profile(spider, t, count_bits=None):
    """
    Star sizes at the leaves v_{i,l_i} in leg order. For a spider in
    spider order they never increase from one leg to the next.
    """
    table = star_sizes(spider, t, count_bits=count_bits)
    counts = [table.count(leaf) for leaf in spider.leg_leaves()]
    return LeafProfile(
        t=t,
        legs=spider.legs,
        counts=counts,
        weakly_decreasing=all(
            first >= second for first, second in zip(counts, counts[1:])
        ),
    )
