import os

from django.utils.translation import gettext_lazy as _

from rest_framework import serializers

from .exceptions import InvalidDescriptor
from .graph_core import Spider, load_tree, parse_descriptor

SOURCE_CHOICES = ('spider', 'tree', 'tree_dir', 'max_n')

T_SINGLE = 'single'
T_RANGE = 'range'
T_OPTIONAL = 'optional'
T_NONE = 'none'


def parse_t_range(text):
    """
    Parse "3" or "1..4" into an inclusive (low, high) pair.
    """
    text = str(text).strip()
    low, separator, high = text.partition('..')
    try:
        low = int(low)
        high = int(high) if separator else low
    except ValueError:
        raise serializers.ValidationError(
            _('"{0}" is neither a size nor a range such as 1..4.')
            .format(text)
        )
    if low < 1:
        raise serializers.ValidationError(
            _("Set sizes start at 1.")
        )
    if high < low:
        raise serializers.ValidationError(
            _("The range {0}..{1} is empty.").format(low, high)
        )
    return low, high


class VertexSetField(serializers.Field):
    """A VertexSet as the sorted list of its vertex ids."""

    def to_representation(self, value):
        return list(value.members)


class StarRowSerializer(serializers.Serializer):
    vertex = serializers.IntegerField()
    coord = serializers.CharField()
    count = serializers.IntegerField()


class StarTableSerializer(serializers.Serializer):
    tree_source = serializers.SerializerMethodField()
    t = serializers.IntegerField(
        help_text=_("Size of the independent sets."),
    )
    total = serializers.IntegerField(
        help_text=_("Number of independent sets of size t."),
    )
    vertices = serializers.SerializerMethodField(
        help_text=_("Star size of every vertex."),
    )

    def get_tree_source(self, table):
        return self.context.get('tree_source', '')

    def get_vertices(self, table):
        return StarRowSerializer(
            [
                {'vertex': vertex, 'coord': coord, 'count': count}
                for vertex, coord, count in table.rows()
            ],
            many=True,
        ).data


class ViolationSerializer(serializers.Serializer):
    input_set = VertexSetField()
    kind = serializers.CharField()
    detail = serializers.CharField()


class InjectionReportSerializer(serializers.Serializer):
    theorem = serializers.IntegerField()
    spider = serializers.CharField(
        help_text=_("Leg lengths the map was checked on."),
    )
    t = serializers.IntegerField()
    i = serializers.IntegerField()
    j = serializers.IntegerField(allow_null=True)
    domain_size = serializers.IntegerField()
    image_size = serializers.IntegerField()
    target_size = serializers.IntegerField()
    verified = serializers.BooleanField()
    cases = serializers.SerializerMethodField()
    violations = ViolationSerializer(many=True)

    def get_cases(self, report):
        return {case: report.cases[case] for case in sorted(report.cases)}


class EkrVerdictSerializer(serializers.Serializer):
    tree_source = serializers.CharField()
    t = serializers.IntegerField()
    mu = serializers.IntegerField(
        help_text=_("Size of a smallest maximal independent set."),
    )
    alpha = serializers.IntegerField(
        help_text=_("Size of a largest independent set."),
    )
    max_intersecting = serializers.IntegerField(
        allow_null=True,
        help_text=_("Largest intersecting family, null past the budget."),
    )
    witness = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()),
    )
    max_star = serializers.IntegerField()
    argmax_vertices = serializers.ListField(
        child=serializers.IntegerField(),
    )
    is_t_ekr = serializers.BooleanField(allow_null=True)
    in_conjecture_range = serializers.BooleanField()
    status = serializers.CharField()
    reportable = serializers.BooleanField()
    detail = serializers.CharField()


class LeafProfileSerializer(serializers.Serializer):
    t = serializers.IntegerField()
    legs = serializers.ListField(child=serializers.IntegerField())
    counts = serializers.ListField(child=serializers.IntegerField())
    weakly_decreasing = serializers.BooleanField()


class CenterReportSerializer(serializers.Serializer):
    t = serializers.IntegerField()
    max_star = serializers.IntegerField()
    argmax_vertices = serializers.ListField(
        child=serializers.IntegerField(),
    )
    any_leaf = serializers.BooleanField()


class RunConfigSerializer(serializers.Serializer):
    """
    Options shared by the commands and the API. The context says which
    input sources are accepted ('sources'), how t is given ('t_mode') and
    whether paths on the local disk may be read ('allow_files').
    """
    spider = serializers.CharField(
        required=False,
        help_text=_("Leg lengths, comma separated, e.g. 3,1,2,4."),
    )
    tree = serializers.CharField(
        required=False,
        help_text=_("Path of an edge-list tree file."),
    )
    tree_dir = serializers.CharField(
        required=False,
        help_text=_("Directory of edge-list tree files."),
    )
    max_n = serializers.IntegerField(
        min_value=2,
        required=False,
        help_text=_("Largest number of vertices of a scanned spider."),
    )
    t = serializers.CharField(
        required=False,
        help_text=_("A set size or an inclusive range such as 1..4."),
    )
    theorem = serializers.ChoiceField(
        choices=('1', '2', '3', 'all'),
        default='all',
    )
    format = serializers.ChoiceField(
        choices=('tsv', 'json'),
        required=False,
    )
    budget_family = serializers.IntegerField(min_value=1, required=False)
    budget_nodes = serializers.IntegerField(min_value=1, required=False)
    workers = serializers.IntegerField(min_value=1, required=False)
    output = serializers.CharField(required=False)

    def _allow_files(self):
        if not self.context.get('allow_files', True):
            raise serializers.ValidationError(
                _("Local files cannot be read from here.")
            )

    def validate_spider(self, value):
        try:
            return parse_descriptor(value)
        except InvalidDescriptor as err:
            raise serializers.ValidationError(str(err))

    def validate_tree(self, value):
        self._allow_files()
        try:
            return load_tree(value)
        except InvalidDescriptor as err:
            raise serializers.ValidationError(str(err))

    def validate_tree_dir(self, value):
        self._allow_files()
        if not os.path.isdir(value):
            raise serializers.ValidationError(
                _("{0} is not a directory.").format(value)
            )
        return value

    def validate_t(self, value):
        return parse_t_range(value)

    def validate(self, attrs):
        sources = self.context.get('sources', ('spider', 'tree'))
        given = [name for name in SOURCE_CHOICES if name in attrs]
        for name in given:
            if name not in sources:
                raise serializers.ValidationError({
                    name: _("This option is not accepted here."),
                })
        if sources and len(given) != 1:
            raise serializers.ValidationError(
                _("Give exactly one of: {0}.").format(
                    ', '.join('--' + name.replace('_', '-')
                              for name in sources)
                )
            )

        t_mode = self.context.get('t_mode', T_RANGE)
        t_range = attrs.get('t')
        if t_range is None and t_mode in (T_SINGLE, T_RANGE):
            raise serializers.ValidationError({
                't': _("This field is required."),
            })
        if t_range is not None and t_mode == T_NONE:
            raise serializers.ValidationError({
                't': _("This option is not accepted here."),
            })
        if t_range is not None and t_mode == T_SINGLE and \
                t_range[0] != t_range[1]:
            raise serializers.ValidationError({
                't': _("A single set size is expected."),
            })

        if 'spider' in attrs:
            attrs['source'] = Spider(attrs['spider'])
            attrs['source_name'] = 'spider:' + attrs['source'].descriptor()
        elif 'tree' in attrs:
            attrs['source'] = attrs['tree']
            attrs['source_name'] = 'tree:' + os.path.basename(
                self.initial_data['tree']
            )
        return attrs
