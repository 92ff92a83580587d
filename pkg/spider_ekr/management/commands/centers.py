from spider_ekr.cli import EXIT_OK, SpiderCommand, render_json, render_tsv
from spider_ekr.ekr_check import best_center_report, leaf_star_profile
from spider_ekr.enumeration import alpha
from spider_ekr.graph_core import Spider, spider_order
from spider_ekr.serializers import (T_OPTIONAL, CenterReportSerializer,
                                    LeafProfileSerializer)

COLUMNS = ('t', 'max_star', 'argmax', 'any_leaf', 'leaf_counts',
           'leaves_decreasing')


class Command(SpiderCommand):
    help = 'Show which vertices center the largest stars as t grows. ' \
           't defaults to 1..alpha.'
    t_mode = T_OPTIONAL

    def run(self, config):
        tree = config.source
        t_values = config.t_values or list(range(1, alpha(tree) + 1))
        ordered = None
        if isinstance(tree, Spider):
            ordered = Spider(spider_order(tree.legs))

        entries = []
        for t in t_values:
            report = best_center_report(tree, t,
                                        count_bits=config.count_bits)
            profile = None
            if ordered is not None:
                profile = leaf_star_profile(ordered, t,
                                            count_bits=config.count_bits)
            entries.append((report, profile))

        if config.wants_json:
            return render_json([
                {
                    'center': CenterReportSerializer(report).data,
                    'leaf_profile': None if profile is None else
                    LeafProfileSerializer(profile).data,
                }
                for report, profile in entries
            ]), EXIT_OK

        rows = []
        for report, profile in entries:
            rows.append((
                report.t,
                report.max_star,
                ' '.join(tree.label(vertex)
                         for vertex in report.argmax_vertices),
                report.any_leaf,
                None if profile is None else profile.counts,
                None if profile is None else profile.weakly_decreasing,
            ))
        return render_tsv(COLUMNS, rows), EXIT_OK
