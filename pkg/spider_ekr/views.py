from django.utils.translation import gettext_lazy as _

from rest_framework import status
from rest_framework.exceptions import APIException, ValidationError
from rest_framework.response import Response
from rest_framework.views import APIView

from . import serializers
from .cli import RunConfig
from .ekr_check import best_center_report, is_t_ekr, leaf_star_profile
from .enumeration import alpha, star_sizes
from .exceptions import (ContractError, CoordinateRangeError, CountOverflow,
                         InvalidDescriptor, NotATree)
from .graph_core import Spider, format_descriptor, spider_order
from .injections import VERIFIERS


class CountTooLarge(APIException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _("A count does not fit in the configured width.")
    default_code = 'count_overflow'


class SpiderAPIView(APIView):
    """
    Read-only computation on a spider given in the query string, e.g.
    ?spider=3,1,2,4&t=1..4. Local tree files are never read.
    """
    sources = ('spider',)
    t_mode = serializers.T_RANGE

    def get_config(self, request):
        serializer = serializers.RunConfigSerializer(
            data=request.query_params,
            context={
                'sources': self.sources,
                't_mode': self.t_mode,
                'allow_files': False,
            },
        )
        serializer.is_valid(raise_exception=True)
        return RunConfig.from_validated(self.__class__.__name__.lower(),
                                        serializer.validated_data)

    def get(self, request, format=None):
        config = self.get_config(request)
        try:
            return Response(self.compute(config))
        except (ContractError, CoordinateRangeError, InvalidDescriptor,
                NotATree) as err:
            raise ValidationError({'detail': str(err)})
        except CountOverflow as err:
            raise CountTooLarge(str(err))

    def compute(self, config):
        raise NotImplementedError


class Stars(SpiderAPIView):
    """
    get:
    Return the star size of every vertex for sets of size t.
    """
    t_mode = serializers.T_SINGLE

    def compute(self, config):
        table = star_sizes(config.source, config.t_values[0],
                           count_bits=config.count_bits)
        return serializers.StarTableSerializer(
            table, context={'tree_source': config.source_name}
        ).data


class Order(SpiderAPIView):
    """
    get:
    Return the legs of the spider in spider order.
    """
    t_mode = serializers.T_NONE

    def compute(self, config):
        return {
            'spider': config.source.descriptor(),
            'spider_order': format_descriptor(
                spider_order(config.source.legs)
            ),
        }


class Ekr(SpiderAPIView):
    """
    get:
    Return one t-EKR verdict per set size of the range. A search over
    budget is reported in the verdict status.
    """

    def compute(self, config):
        return serializers.EkrVerdictSerializer(
            [
                is_t_ekr(
                    config.source, t,
                    budget_family=config.budget_family,
                    budget_nodes=config.budget_nodes,
                    source=config.source_name,
                    count_bits=config.count_bits,
                    record_budget=True,
                )
                for t in config.t_values
            ],
            many=True,
        ).data


class Verify(SpiderAPIView):
    """
    get:
    Check the maps between stars for the chosen theorem (1, 2, 3 or all).
    """

    def compute(self, config):
        if config.theorem == 'all':
            theorems = sorted(VERIFIERS)
        else:
            theorems = [int(config.theorem)]
        reports = []
        for theorem in theorems:
            spider = config.source
            if theorem == 3 and not spider.is_spider_ordered():
                spider = Spider(spider_order(spider.legs))
            for t in config.t_values:
                reports.extend(VERIFIERS[theorem](spider, t))
        return {
            'passed': all(report.verified for report in reports),
            'reports': serializers.InjectionReportSerializer(
                reports, many=True
            ).data,
        }


class Centers(SpiderAPIView):
    """
    get:
    Return the best star centers and the leaf profile for each t, by
    default for every t up to alpha.
    """
    t_mode = serializers.T_OPTIONAL

    def compute(self, config):
        spider = config.source
        ordered = Spider(spider_order(spider.legs))
        t_values = config.t_values or list(range(1, alpha(spider) + 1))
        return [
            {
                'center': serializers.CenterReportSerializer(
                    best_center_report(spider, t,
                                       count_bits=config.count_bits)
                ).data,
                'leaf_profile': serializers.LeafProfileSerializer(
                    leaf_star_profile(ordered, t,
                                      count_bits=config.count_bits)
                ).data,
            }
            for t in t_values
        ]
