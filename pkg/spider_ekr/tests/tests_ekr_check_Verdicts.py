from django.test import SimpleTestCase

from ..ekr_check import (OK, OVER_BUDGET, best_center_report,
                         holroyd_talbot_scan, is_t_ekr, leaf_star_profile,
                         max_intersecting_family)
from ..enumeration import alpha, enum_indep_sets
from ..exceptions import BudgetExceeded, ContractError
from ..factories import PathFactory, SpiderFactory, StarTreeFactory
from ..graph_core import Spider, spider_catalog


def _brute_force_intersecting(family):
    best = 0
    for mask in range(1 << len(family)):
        chosen = [family[i] for i in range(len(family)) if mask >> i & 1]
        if all(a.intersects(b) for a in chosen for b in chosen):
            best = max(best, len(chosen))
    return best


class MaxIntersectingFamilyTests(SimpleTestCase):

    def test_empty(self):
        """
        Ensure the empty family has no intersecting subfamily.
        """
        self.assertEqual(max_intersecting_family([]), (0, []))

    def test_path(self):
        """
        Ensure ac, ad is the least largest intersecting family of P4.
        """
        size, witness = max_intersecting_family(
            enum_indep_sets(PathFactory(), 2)
        )

        self.assertEqual(size, 2)
        self.assertEqual([s.members for s in witness], [(0, 2), (0, 3)])

    def test_claw(self):
        """
        Ensure the three leaf pairs of K_{1,3} all meet.
        """
        size, witness = max_intersecting_family(
            enum_indep_sets(StarTreeFactory(), 2)
        )

        self.assertEqual(size, 3)
        self.assertEqual(len(witness), 3)

    def test_matches_brute_force(self):
        """
        Ensure the clique search equals subfamily brute force on small
        families.
        """
        for legs in spider_catalog(7):
            spider = Spider(legs)
            for t in (2, 3):
                family = enum_indep_sets(spider, t)
                if len(family) > 10:
                    continue
                size, witness = max_intersecting_family(family)
                self.assertEqual(size, _brute_force_intersecting(family),
                                 (legs, t))
                self.assertEqual(len(witness), size)

    def test_family_budget(self):
        """
        Ensure a family above the budget is refused.
        """
        with self.assertRaises(BudgetExceeded) as context:
            max_intersecting_family(enum_indep_sets(PathFactory(), 2),
                                    budget_family=2)

        self.assertEqual(context.exception.kind, 'family')
        self.assertEqual(context.exception.limit, 2)

    def test_node_budget(self):
        """
        Ensure the search stops at its node budget.
        """
        with self.assertRaises(BudgetExceeded) as context:
            max_intersecting_family(enum_indep_sets(PathFactory(), 2),
                                    budget_nodes=1)

        self.assertEqual(context.exception.kind, 'nodes')


class VerdictTests(SimpleTestCase):

    def test_path_is_2_ekr(self):
        """
        Ensure P4 is 2-EKR.
        """
        verdict = is_t_ekr(PathFactory(), 2)

        self.assertEqual(verdict.max_intersecting, 2)
        self.assertEqual(verdict.max_star, 2)
        self.assertTrue(verdict.is_t_ekr)
        self.assertEqual(verdict.status, OK)

    def test_claw_is_not_2_ekr(self):
        """
        Ensure K_{1,3} is not 2-EKR but lies outside the conjecture range.
        """
        verdict = is_t_ekr(SpiderFactory(legs=(1, 1, 1)), 2)

        self.assertEqual(verdict.max_intersecting, 3)
        self.assertEqual(verdict.max_star, 2)
        self.assertFalse(verdict.is_t_ekr)
        self.assertFalse(verdict.in_conjecture_range)
        self.assertFalse(verdict.reportable)
        self.assertEqual(verdict.mu, 1)
        self.assertEqual(verdict.tree_source, 'spider:1,1,1')

    def test_t_1(self):
        """
        Ensure every tree is 1-EKR.
        """
        for legs in spider_catalog(6):
            verdict = is_t_ekr(Spider(legs), 1)
            self.assertEqual(verdict.max_intersecting, 1)
            self.assertTrue(verdict.is_t_ekr)

    def test_t_out_of_range(self):
        """
        Ensure t must lie in 1..alpha.
        """
        with self.assertRaises(ContractError):
            is_t_ekr(PathFactory(), 3)
        with self.assertRaises(ContractError):
            best_center_report(PathFactory(), 0)

    def test_budget_propagates_or_is_recorded(self):
        """
        Ensure a budget overrun raises by default and is noted on request.
        """
        with self.assertRaises(BudgetExceeded):
            is_t_ekr(PathFactory(), 2, budget_family=1)

        verdict = is_t_ekr(PathFactory(), 2, budget_family=1,
                           record_budget=True)

        self.assertEqual(verdict.status, OVER_BUDGET)
        self.assertIsNone(verdict.max_intersecting)
        self.assertIsNone(verdict.is_t_ekr)
        self.assertEqual(verdict.max_star, 2)


class ScanTests(SimpleTestCase):

    def test_path(self):
        """
        Ensure P4 is only checked at t=1.
        """
        verdicts = holroyd_talbot_scan(PathFactory())

        self.assertEqual([v.t for v in verdicts], [1])
        self.assertTrue(verdicts[0].is_t_ekr)
        self.assertTrue(verdicts[0].in_conjecture_range)

    def test_claw(self):
        """
        Ensure K_{1,3} has an empty conjecture range.
        """
        self.assertEqual(holroyd_talbot_scan(StarTreeFactory()), [])

    def test_double_leg(self):
        """
        Ensure the spider (2,2) is 1-EKR.
        """
        verdicts = holroyd_talbot_scan(SpiderFactory(legs=(2, 2)))

        self.assertEqual(len(verdicts), 1)
        self.assertTrue(verdicts[0].is_t_ekr)

    def test_budget_recorded(self):
        """
        Ensure a scan records budget overruns and goes on.
        """
        verdicts = holroyd_talbot_scan(SpiderFactory(legs=(2, 2)),
                                       budget_family=2)

        self.assertEqual([v.status for v in verdicts], [OVER_BUDGET])

    def test_small_spiders_in_range(self):
        """
        Ensure no small spider breaks the conjecture.
        """
        for legs in spider_catalog(9):
            for verdict in holroyd_talbot_scan(Spider(legs)):
                self.assertTrue(verdict.is_t_ekr, verdict)


class CenterTests(SimpleTestCase):

    def test_path(self):
        """
        Ensure the ends of P4 center its largest 2-stars.
        """
        report = best_center_report(PathFactory(), 2)

        self.assertEqual(report.argmax_vertices, [0, 3])
        self.assertTrue(report.any_leaf)

    def test_claw(self):
        """
        Ensure the three leaves of K_{1,3} tie.
        """
        report = best_center_report(StarTreeFactory(), 2)

        self.assertEqual(report.argmax_vertices, [1, 2, 3])
        self.assertTrue(report.any_leaf)

    def test_spider(self):
        """
        Ensure v1,1 and v2,2 center the largest 2-stars of (1,2).
        """
        report = best_center_report(SpiderFactory(legs=(1, 2)), 2)

        self.assertEqual(report.argmax_vertices, [1, 3])
        self.assertTrue(report.any_leaf)

    def test_spiders_have_leaf_centers(self):
        """
        Ensure some leaf always centers a largest star on a spider.
        """
        for legs in spider_catalog(9):
            spider = Spider(legs)
            for t in range(1, alpha(spider) + 1):
                self.assertTrue(best_center_report(spider, t).any_leaf)

    def test_leaf_profile(self):
        """
        Ensure leaf stars decrease along spider order.
        """
        profile = leaf_star_profile(SpiderFactory(legs=(1, 3, 4, 2)), 2)

        self.assertEqual(profile.legs, (1, 3, 4, 2))
        self.assertEqual(len(profile.counts), 4)
        self.assertTrue(profile.weakly_decreasing)
