from spider_ekr.cli import EXIT_OK, SpiderCommand, render_json
from spider_ekr.graph_core import format_descriptor, spider_order
from spider_ekr.serializers import T_NONE


class Command(SpiderCommand):
    help = 'Print the legs of a spider in spider order.'
    sources = ('spider',)
    t_mode = T_NONE

    def run(self, config):
        ordered = format_descriptor(spider_order(config.source.legs))
        if config.wants_json:
            return render_json({
                'spider': config.source.descriptor(),
                'spider_order': ordered,
            }), EXIT_OK
        return ordered + '\n', EXIT_OK
