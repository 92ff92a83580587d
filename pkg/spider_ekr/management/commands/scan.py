from spider_ekr.cli import EXIT_OK, SpiderCommand, render_verdicts
from spider_ekr.scanning import catalog_jobs, directory_jobs, run_scan
from spider_ekr.serializers import T_NONE


class Command(SpiderCommand):
    help = 'Check every t up to mu/2 on all small spiders, or on a ' \
           'directory of tree files. In-range failures are flagged ' \
           'REPORTABLE.'
    sources = ('max_n', 'tree_dir')
    t_mode = T_NONE

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--max-n', type=int,
            help='Scan every spider with at most this many vertices.',
        )
        parser.add_argument(
            '--tree-dir',
            help='Scan every *.txt edge-list file of this directory.',
        )
        parser.add_argument('--budget-family', type=int)
        parser.add_argument('--budget-nodes', type=int)
        parser.add_argument('--workers', type=int)

    def run(self, config):
        budgets = (config.budget_family, config.budget_nodes,
                   config.count_bits)
        if config.max_n is not None:
            jobs = catalog_jobs(config.max_n, *budgets)
        else:
            jobs = directory_jobs(config.tree_dir, *budgets)

        verdicts = []
        for found in run_scan(jobs, workers=config.workers):
            verdicts.extend(found)
        return render_verdicts(config, verdicts, len(jobs)), EXIT_OK
