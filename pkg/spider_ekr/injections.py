"""
Flip, slide and shift maps between stars of a spider, and the verifiers
that check they are injections into the claimed star.

The maps take a VertexSet A and return f(A). Each public map checks its
precondition (ContractError) and its postcondition: the image is
independent, has the size of A and contains the target vertex
(InjectionAssertion).
"""
import logging
from collections import Counter
from dataclasses import dataclass, field

from .enumeration import enum_indep_sets, star_sizes
from .exceptions import ContractError, ImpossibleCase, InjectionAssertion
from .graph_core import VertexSet, is_independent

logger = logging.getLogger(__name__)

EVEN = 'even'
ODD = 'odd'

IDENTITY = 'identity'
FLIP = 'flip'
PARTIAL_LADDER = 'partial-ladder'
FULL_LADDER = 'full-ladder'

NOT_INDEPENDENT = 'not-independent'
WRONG_SIZE = 'wrong-size'
MISSING_TARGET = 'missing-target-vertex'
COLLISION = 'collision'
CASE_ASSERTION = 'case-assertion'


@dataclass(frozen=True)
class Rung:
    height: int
    pair: tuple
    full: bool


@dataclass(frozen=True)
class Ladder:
    """
    The rungs of one parity between two legs: even rungs when the head
    is in the set, odd rungs otherwise.
    """
    parity: str
    rungs: tuple
    first_nonfull: object
    partial: tuple

    @property
    def is_full(self):
        return self.first_nonfull is None

    def vertices(self, n):
        """The vertices of the partial ladder as a set."""
        return VertexSet.from_ids(
            n, [vertex for rung in self.partial for vertex in rung.pair]
        )


@dataclass
class Violation:
    input_set: VertexSet
    kind: str
    detail: str = ''


@dataclass
class InjectionReport:
    theorem: int
    spider: str
    t: int
    i: int
    j: object
    domain_size: int = 0
    image_size: int = 0
    target_size: int = 0
    violations: list = field(default_factory=list)
    cases: dict = field(default_factory=dict)

    @property
    def verified(self):
        return not self.violations and self.image_size == self.domain_size

    def summary(self):
        return '{0} theorem={1} spider={2} t={3} i={4} j={5} ' \
               'domain={6} image={7} target={8}'.format(
                   'PASS' if self.verified else 'FAIL',
                   self.theorem,
                   self.spider,
                   self.t,
                   self.i,
                   '-' if self.j is None else self.j,
                   self.domain_size,
                   self.image_size,
                   self.target_size,
               )


def _require_independent(spider, vertex_set):
    if vertex_set.n != spider.n or not is_independent(spider, vertex_set):
        raise ContractError(
            '{0!r} is not an independent set of {1!r}'.format(
                vertex_set, spider
            )
        )


def _mask(n, path):
    return VertexSet.from_ids(n, path)


def _flip(vertex_set, path):
    """Mirror the trace of the set on the path; keep the rest."""
    last = len(path) - 1
    mirrored = [path[last - index] for index, vertex in enumerate(path)
                if vertex in vertex_set]
    rest = vertex_set.difference(_mask(vertex_set.n, path))
    return rest.with_ids(*mirrored)


def _slide(vertex_set, path, distance):
    """Translate the trace of the set on the path by distance steps."""
    positions = [index for index, vertex in enumerate(path)
                 if vertex in vertex_set]
    if positions and positions[-1] + distance >= len(path):
        raise InjectionAssertion(
            'cannot move {0!r} {1} steps along a path of {2} vertices'.format(
                vertex_set, distance, len(path)
            )
        )
    rest = vertex_set.difference(_mask(vertex_set.n, path))
    return rest.with_ids(*[path[index + distance] for index in positions])


def _check_image(spider, source, image, target):
    problems = []
    if not is_independent(spider, image):
        problems.append(NOT_INDEPENDENT)
    if len(image) != len(source):
        problems.append(WRONG_SIZE)
    if target not in image:
        problems.append(MISSING_TARGET)
    return problems


def _assert_image(spider, source, image, target):
    problems = _check_image(spider, source, image, target)
    if problems:
        raise InjectionAssertion(
            '{0!r} -> {1!r}: {2}'.format(source, image, ', '.join(problems))
        )


def _flip_on_path(vertex_set, spider, leg, start):
    path = [spider.v(leg, height)
            for height in range(start, spider.leg_length(leg) + 1)]
    return _flip(vertex_set, path)


def _flip_on_leg(vertex_set, spider, leg):
    if spider.leaf(leg) in vertex_set:
        return vertex_set, IDENTITY
    return _flip(vertex_set, spider.leg_path(leg)), FLIP


def flip_on_path(vertex_set, spider, leg, start):
    """
    Flip of A on the path v_{i,j}, ..., v_{i,l_i}: an injection of the star
    at v_{i,j} into the star at the leaf v_{i,l_i}.
    """
    length = spider.leg_length(leg)
    if not 1 <= start < length:
        raise ContractError(
            'start height {0} not in 1..{1}'.format(start, length - 1)
        )
    _require_independent(spider, vertex_set)
    if spider.v(leg, start) not in vertex_set:
        raise ContractError(
            '{0!r} does not contain {1}'.format(
                vertex_set, spider.label(spider.v(leg, start))
            )
        )

    image = _flip_on_path(vertex_set, spider, leg, start)
    _assert_image(spider, vertex_set, image, spider.leaf(leg))
    return image


def flip_on_leg(vertex_set, spider, leg):
    """
    Injection of the head star into the star at the leaf of a leg: the
    identity on sets already holding the leaf, otherwise the flip on the
    whole leg v0, v_{i,1}, ..., v_{i,l_i}.
    """
    _require_independent(spider, vertex_set)
    if spider.head not in vertex_set:
        raise ContractError(
            '{0!r} does not contain the head'.format(vertex_set)
        )

    image, case = _flip_on_leg(vertex_set, spider, leg)
    if case != IDENTITY:
        _assert_image(spider, vertex_set, image, spider.leaf(leg))
    return image


def ladder_of(vertex_set, spider, i, j):
    if i == j:
        raise ContractError('a ladder needs two distinct legs')
    _require_independent(spider, vertex_set)

    parity = EVEN if spider.head in vertex_set else ODD
    top = min(spider.leg_length(i), spider.leg_length(j))
    rungs = []
    for height in range(2 if parity == EVEN else 1, top + 1, 2):
        pair = (spider.v(i, height), spider.v(j, height))
        full = pair[0] in vertex_set and pair[1] in vertex_set
        rungs.append(Rung(height=height, pair=pair, full=full))

    first_nonfull = next((rung for rung in rungs if not rung.full), None)
    if first_nonfull is None:
        partial = tuple(rungs)
    else:
        partial = tuple(rung for rung in rungs
                        if rung.height < first_nonfull.height)

    return Ladder(
        parity=parity,
        rungs=tuple(rungs),
        first_nonfull=first_nonfull,
        partial=partial,
    )


def _legs_mask(spider, i, j):
    return _mask(spider.n, spider.leg_path(i) + spider.leg_path(j))


def _slide_case(vertex_set, spider, i, j, ladder):
    rung = ladder.first_nonfull
    height = rung.height
    path = [spider.v(j, h) for h in range(spider.leg_length(j), height - 1,
                                          -1)]
    path += [spider.v(i, h) for h in range(height,
                                           spider.leg_length(i) + 1)]

    partial = ladder.vertices(spider.n)
    head = vertex_set.intersection(_mask(spider.n, [spider.head]))
    on_path = vertex_set.intersection(_mask(spider.n, path))
    rest = vertex_set.difference(_legs_mask(spider, i, j))

    # A splits into the partial ladder, its trace on P, T and the head.
    pieces = (partial, on_path, rest, head)
    if sum(len(piece) for piece in pieces) != len(vertex_set) or \
            partial.union(on_path, rest, head) != vertex_set:
        raise InjectionAssertion(
            '{0!r} is not partitioned by its partial ladder at height '
            '{1}'.format(vertex_set, height)
        )

    positions = [index for index, vertex in enumerate(path)
                 if vertex in on_path]
    distance = len(path) - 1 - positions[-1]
    slid = _slide(on_path, path, distance)
    return partial.union(slid, rest, head)


def _shift_flip_case(vertex_set, spider, i, j):
    length_i = spider.leg_length(i)
    length_j = spider.leg_length(j)
    if spider.head not in vertex_set:
        raise InjectionAssertion(
            '{0!r} has a full ladder but misses the head'.format(vertex_set)
        )
    if length_i == length_j:
        raise ImpossibleCase(
            '{0!r} has a full ladder between legs of equal length {1}'.format(
                vertex_set, length_i
            )
        )

    # The v_{j,l_j} v_{i,l_i}-path through the head.
    route = [spider.v(j, h) for h in range(length_j, 0, -1)]
    route += [spider.head]
    route += [spider.v(i, h) for h in range(1, length_i + 1)]

    if length_j < length_i:
        shift_path = route[:2 * length_j]
    else:
        shift_path = route[length_j - length_i + 1:]
    flip_path = [vertex for vertex in route if vertex not in shift_path]

    rest = vertex_set.difference(_legs_mask(spider, i, j))
    shifted = _slide(
        vertex_set.intersection(_mask(spider.n, shift_path)), shift_path, 1
    )
    flipped = _flip(
        vertex_set.intersection(_mask(spider.n, flip_path)), flip_path
    )
    return shifted.union(flipped, rest)


def _best_leaf_image(vertex_set, spider, i, j):
    """The image of A and the case of the map that produced it."""
    if spider.leaf(i) in vertex_set:
        return vertex_set, IDENTITY

    ladder = ladder_of(vertex_set, spider, i, j)
    if not ladder.is_full:
        return _slide_case(vertex_set, spider, i, j, ladder), PARTIAL_LADDER
    return _shift_flip_case(vertex_set, spider, i, j), FULL_LADDER


def _require_best_leaf_domain(vertex_set, spider, i, j):
    if not spider.is_spider_ordered():
        raise ContractError(
            'legs {0} are not in spider order'.format(spider.descriptor())
        )
    if not 1 <= i < j <= spider.k:
        raise ContractError(
            'legs must satisfy 1 <= i < j <= {0}, got i={1} j={2}'.format(
                spider.k, i, j
            )
        )
    _require_independent(spider, vertex_set)
    if spider.leaf(j) not in vertex_set:
        raise ContractError(
            '{0!r} does not contain the leaf of leg {1}'.format(vertex_set, j)
        )


def classify_best_leaf(vertex_set, spider, i, j):
    """Which of identity / partial ladder / full ladder applies to A."""
    _require_best_leaf_domain(vertex_set, spider, i, j)
    if spider.leaf(i) in vertex_set:
        return IDENTITY
    if ladder_of(vertex_set, spider, i, j).is_full:
        return FULL_LADDER
    return PARTIAL_LADDER


def _head_parity_problem(spider, source, image, case):
    had_head = spider.head in source
    has_head = spider.head in image
    if case == FULL_LADDER and has_head:
        return 'the shift left the head in the image'
    if case != FULL_LADDER and had_head != has_head:
        return 'head membership changed in the {0} case'.format(case)
    return None


def map_best_leaf(vertex_set, spider, i, j):
    """
    Injection of the star at the leaf of leg j into the star at the leaf
    of leg i, for legs i < j of a spider in spider order.
    """
    _require_best_leaf_domain(vertex_set, spider, i, j)
    image, case = _best_leaf_image(vertex_set, spider, i, j)
    _assert_image(spider, vertex_set, image, spider.leaf(i))
    problem = _head_parity_problem(spider, vertex_set, image, case)
    if problem:
        raise InjectionAssertion(
            '{0!r} -> {1!r}: {2}'.format(vertex_set, image, problem)
        )
    return image


def _run(report, spider, domain, target, apply, head_parity=False):
    """
    Apply a map to every set of the domain star and record what breaks.
    `apply` returns the image and the case name.
    """
    images = {}
    cases = Counter()
    for source in domain:
        try:
            image, case = apply(source)
        except (InjectionAssertion, ImpossibleCase) as err:
            report.violations.append(
                Violation(source, CASE_ASSERTION, str(err))
            )
            continue

        cases[case] += 1
        for problem in _check_image(spider, source, image, target):
            report.violations.append(Violation(source, problem, repr(image)))
        parity_problem = head_parity and _head_parity_problem(
            spider, source, image, case
        )
        if parity_problem:
            report.violations.append(
                Violation(source, CASE_ASSERTION, parity_problem)
            )
        if image in images:
            report.violations.append(
                Violation(source, COLLISION, repr(images[image]))
            )
        else:
            images[image] = source

    report.domain_size = len(domain)
    report.image_size = len(images)
    report.cases = dict(sorted(cases.items()))
    report.violations.sort(key=lambda violation: (violation.input_set,
                                                  violation.kind))
    if not report.verified:
        logger.warning('%s', report.summary())
    return report


def _star(family, vertex):
    return [vertex_set for vertex_set in family if vertex in vertex_set]


def verify_theorem_1(spider, t):
    """
    Check the flip on v_{i,j}..v_{i,l_i} for every leg i and every
    1 <= j < l_i. One report per (i, j).
    """
    family = enum_indep_sets(spider, t)
    table = star_sizes(spider, t)
    reports = []
    for leg in range(1, spider.k + 1):
        leaf = spider.leaf(leg)
        for start in range(1, spider.leg_length(leg)):
            report = InjectionReport(
                theorem=1, spider=spider.descriptor(), t=t, i=leg, j=start,
                target_size=table.count(leaf),
            )
            reports.append(_run(
                report, spider, _star(family, spider.v(leg, start)), leaf,
                lambda source, leg=leg, start=start: (
                    _flip_on_path(source, spider, leg, start), FLIP,
                ),
            ))
    return reports


def verify_theorem_2(spider, t):
    """Check the head-to-leaf map on every leg. One report per leg."""
    family = enum_indep_sets(spider, t)
    table = star_sizes(spider, t)
    domain = _star(family, spider.head)
    reports = []
    for leg in range(1, spider.k + 1):
        leaf = spider.leaf(leg)
        report = InjectionReport(
            theorem=2, spider=spider.descriptor(), t=t, i=leg, j=None,
            target_size=table.count(leaf),
        )
        reports.append(_run(
            report, spider, domain, leaf,
            lambda source, leg=leg: _flip_on_leg(source, spider, leg),
        ))
    return reports


def verify_theorem_3(spider, t):
    """
    Check the best-leaf map for every pair of legs i < j of a spider in
    spider order. One report per (i, j).
    """
    if not spider.is_spider_ordered():
        raise ContractError(
            'legs {0} are not in spider order'.format(spider.descriptor())
        )
    family = enum_indep_sets(spider, t)
    table = star_sizes(spider, t)
    reports = []
    for i in range(1, spider.k + 1):
        for j in range(i + 1, spider.k + 1):
            report = InjectionReport(
                theorem=3, spider=spider.descriptor(), t=t, i=i, j=j,
                target_size=table.count(spider.leaf(i)),
            )
            reports.append(_run(
                report, spider, _star(family, spider.leaf(j)),
                spider.leaf(i),
                lambda source, i=i, j=j: _best_leaf_image(
                    source, spider, i, j
                ),
                head_parity=True,
            ))
    return reports


VERIFIERS = {
    1: verify_theorem_1,
    2: verify_theorem_2,
    3: verify_theorem_3,
}
