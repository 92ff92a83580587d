import logging

from spider_ekr.cli import EXIT_FAILURE, EXIT_OK, SpiderCommand, \
    render_json
from spider_ekr.graph_core import Spider, spider_order
from spider_ekr.injections import VERIFIERS
from spider_ekr.serializers import InjectionReportSerializer

logger = logging.getLogger(__name__)


class Command(SpiderCommand):
    help = 'Check the flip, slide and shift maps between stars of a ' \
           'spider for every set size in a range.'
    sources = ('spider',)
    failure_message = 'some map is not an injection into its target star'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--theorem',
            choices=('1', '2', '3', 'all'),
            help='Which star inequality to check (default: all).',
        )
        parser.add_argument(
            '--report',
            help='Also write the JSON report to this file.',
        )

    def handle(self, *args, **options):
        self.report_path = options.get('report')
        return super(Command, self).handle(*args, **options)

    def spider_for(self, theorem, spider):
        # The best-leaf map is only defined on legs in spider order.
        if theorem == 3 and not spider.is_spider_ordered():
            return Spider(spider_order(spider.legs))
        return spider

    def run(self, config):
        if config.theorem == 'all':
            theorems = sorted(VERIFIERS)
        else:
            theorems = [int(config.theorem)]

        reports = []
        lines = []
        for theorem in theorems:
            spider = self.spider_for(theorem, config.source)
            for t in config.t_values:
                found = VERIFIERS[theorem](spider, t)
                if not found:
                    lines.append('PASS theorem={0} spider={1} t={2} '
                                 'vacuous'.format(theorem,
                                                  spider.descriptor(), t))
                lines.extend(report.summary() for report in found)
                reports.extend(found)

        passed = all(report.verified for report in reports)
        logger.info('verify %s: %d reports, %s', config.source_name,
                    len(reports), 'PASS' if passed else 'FAIL')
        document = render_json({
            'passed': passed,
            'reports': InjectionReportSerializer(reports, many=True).data,
        })
        if self.report_path:
            self.emit(config, document, path=self.report_path)

        code = EXIT_OK if passed else EXIT_FAILURE
        if config.wants_json:
            return document, code
        return '\n'.join(lines) + '\n', code
