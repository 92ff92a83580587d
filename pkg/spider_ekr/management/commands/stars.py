from spider_ekr.cli import EXIT_OK, SpiderCommand, render_json, \
    star_table_tsv
from spider_ekr.enumeration import star_sizes
from spider_ekr.serializers import T_SINGLE, StarTableSerializer


class Command(SpiderCommand):
    help = 'Print the star size of every vertex for sets of size t.'
    t_mode = T_SINGLE

    def run(self, config):
        table = star_sizes(config.source, config.t_values[0],
                           count_bits=config.count_bits)
        if config.wants_json:
            return render_json(StarTableSerializer(
                table, context={'tree_source': config.source_name}
            ).data), EXIT_OK
        return star_table_tsv(table), EXIT_OK
