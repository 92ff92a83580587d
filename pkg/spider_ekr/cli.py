"""
Plumbing shared by the management commands: the run configuration, the
tsv/json emitters and the exit-code contract.
"""
import logging
from dataclasses import dataclass

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from rest_framework.renderers import JSONRenderer

from . import serializers
from .ekr_check import OVER_BUDGET
from .exceptions import (ContractError, CoordinateRangeError, CountOverflow,
                         InvalidDescriptor, NotATree)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_OVERFLOW = 3

OPTION_NAMES = (
    'spider', 'tree', 'tree_dir', 'max_n', 't', 'theorem', 'format',
    'budget_family', 'budget_nodes', 'workers', 'output',
)

STAR_COLUMNS = ('vertex', 'coord', 'count')

VERDICT_COLUMNS = (
    'tree_source', 't', 'mu', 'alpha', 'max_intersecting', 'max_star',
    'argmax_vertices', 'is_t_ekr', 'in_conjecture_range', 'status',
    'finding',
)

SUMMARY_KEYS = (
    'instances', 'verdicts', 'verified', 'not_ekr', 'budget_exceeded',
    'reportable',
)

REPORTABLE = 'REPORTABLE'


@dataclass
class RunConfig:
    command: str
    source: object = None
    source_name: str = ''
    t_range: tuple = None
    theorem: str = 'all'
    format: str = 'tsv'
    budget_family: int = 5000
    budget_nodes: int = 10 ** 7
    count_bits: int = 64
    workers: int = 1
    max_n: int = None
    tree_dir: str = None
    output: str = None

    @classmethod
    def from_validated(cls, command, data):
        """Fill the knobs the caller left out from settings.SPIDER_EKR."""
        defaults = settings.SPIDER_EKR
        return cls(
            command=command,
            source=data.get('source'),
            source_name=data.get('source_name', ''),
            t_range=data.get('t'),
            theorem=data.get('theorem', 'all'),
            format=data.get('format', defaults['DEFAULT_FORMAT']),
            budget_family=data.get('budget_family',
                                   defaults['BUDGET_FAMILY']),
            budget_nodes=data.get('budget_nodes', defaults['BUDGET_NODES']),
            count_bits=defaults['COUNT_BITS'],
            workers=data.get('workers', defaults['SCAN_WORKERS']),
            max_n=data.get('max_n'),
            tree_dir=data.get('tree_dir'),
            output=data.get('output'),
        )

    @property
    def t_values(self):
        if self.t_range is None:
            return []
        low, high = self.t_range
        return list(range(low, high + 1))

    @property
    def wants_json(self):
        return self.format == 'json'


def render_json(data):
    return JSONRenderer().render(data).decode('utf-8') + '\n'


def _cell(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ','.join(str(item) for item in value) or '-'
    return str(value)


def render_tsv(columns, rows):
    lines = ['\t'.join(columns)]
    lines.extend('\t'.join(_cell(value) for value in row) for row in rows)
    return '\n'.join(lines) + '\n'


def star_table_tsv(table):
    return render_tsv(STAR_COLUMNS, table.rows()) + \
        '# t={0} total={1}\n'.format(table.t, table.total)


def verdict_row(verdict):
    return (
        verdict.tree_source,
        verdict.t,
        verdict.mu,
        verdict.alpha,
        verdict.max_intersecting,
        verdict.max_star,
        verdict.argmax_vertices,
        verdict.is_t_ekr,
        verdict.in_conjecture_range,
        verdict.status,
        REPORTABLE if verdict.reportable else None,
    )


def verdict_summary(verdicts, instances):
    return {
        'instances': instances,
        'verdicts': len(verdicts),
        'verified': sum(1 for v in verdicts if v.is_t_ekr is True),
        'not_ekr': sum(1 for v in verdicts if v.is_t_ekr is False),
        'budget_exceeded': sum(1 for v in verdicts
                               if v.status == OVER_BUDGET),
        'reportable': sum(1 for v in verdicts if v.reportable),
    }


def render_verdicts(config, verdicts, instances):
    """A verdict stream with its summary footer, in the requested format."""
    summary = verdict_summary(verdicts, instances)
    logger.info('%s: %s', config.command, summary)
    if config.wants_json:
        return render_json({
            'verdicts': serializers.EkrVerdictSerializer(
                verdicts, many=True
            ).data,
            'summary': summary,
        })
    footer = '# ' + ' '.join(
        '{0}={1}'.format(key, summary[key]) for key in SUMMARY_KEYS
    ) + '\n'
    return render_tsv(VERDICT_COLUMNS, map(verdict_row, verdicts)) + footer


def format_errors(errors):
    """Flatten serializer errors into one line per field."""
    parts = []
    for name in sorted(errors):
        messages = errors[name]
        if isinstance(messages, dict):
            messages = [format_errors(messages)]
        label = '' if name == 'non_field_errors' else '--{0}: '.format(
            name.replace('_', '-')
        )
        parts.append(label + ' '.join(str(message) for message in messages))
    return '; '.join(parts)


class SpiderCommand(BaseCommand):
    """
    Base of every command. Subclasses set the accepted input sources and
    how t is given, and implement run(config) returning the text to emit
    and an exit code.
    """
    requires_system_checks = []
    sources = ('spider', 'tree')
    t_mode = serializers.T_RANGE
    failure_message = 'verification failed'

    def add_arguments(self, parser):
        if 'spider' in self.sources:
            parser.add_argument(
                '--spider',
                help='Leg lengths of a spider, comma separated.',
            )
        if 'tree' in self.sources:
            parser.add_argument(
                '--tree',
                help='Edge-list file of a tree.',
            )
        if self.t_mode != serializers.T_NONE:
            parser.add_argument(
                '--t',
                help='Set size, or an inclusive range such as 1..4.',
            )
        parser.add_argument('--format', choices=('tsv', 'json'))
        parser.add_argument(
            '--output',
            help='Write the result to this file instead of stdout.',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    @property
    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def handle(self, *args, **options):
        data = {
            name: options[name] for name in OPTION_NAMES
            if options.get(name) is not None
        }
        serializer = serializers.RunConfigSerializer(
            data=data,
            context={'sources': self.sources, 't_mode': self.t_mode},
        )
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors),
                               returncode=EXIT_BAD_INPUT)
        config = RunConfig.from_validated(self.command_name,
                                          serializer.validated_data)

        try:
            text, code = self.run(config)
        except (ContractError, CoordinateRangeError, InvalidDescriptor,
                NotATree) as err:
            raise CommandError(str(err), returncode=EXIT_BAD_INPUT)
        except CountOverflow as err:
            raise CommandError(str(err), returncode=EXIT_OVERFLOW)

        self.emit(config, text)
        if code != EXIT_OK:
            raise CommandError(self.failure_message, returncode=code)

    def emit(self, config, text, path=None):
        path = path or config.output
        if path is None:
            self.stdout.write(text, ending='')
            return
        try:
            with open(path, 'w') as handle:
                handle.write(text)
        except OSError as err:
            raise CommandError(
                'Cannot write {0}: {1}'.format(path, err.strerror),
                returncode=EXIT_BAD_INPUT,
            )

    def run(self, config):
        raise NotImplementedError
