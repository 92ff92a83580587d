from spider_ekr.cli import EXIT_OK, SpiderCommand, render_verdicts
from spider_ekr.ekr_check import is_t_ekr


class Command(SpiderCommand):
    help = 'Decide by exhaustive search whether a tree is t-EKR.'

    def add_command_arguments(self, parser):
        parser.add_argument('--budget-family', type=int)
        parser.add_argument('--budget-nodes', type=int)

    def run(self, config):
        verdicts = [
            is_t_ekr(
                config.source, t,
                budget_family=config.budget_family,
                budget_nodes=config.budget_nodes,
                source=config.source_name,
                count_bits=config.count_bits,
                record_budget=True,
            )
            for t in config.t_values
        ]
        return render_verdicts(config, verdicts, 1), EXIT_OK
