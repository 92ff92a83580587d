import factory

from .graph_core import Spider, Tree


class SpiderFactory(factory.Factory):
    class Meta:
        model = Spider

    legs = (2, 1)


class PathFactory(factory.Factory):
    """The path P_n, numbered along the path."""
    class Meta:
        model = Tree

    n = 4
    edges = factory.LazyAttribute(
        lambda path: [(vertex, vertex + 1) for vertex in range(path.n - 1)]
    )


class StarTreeFactory(factory.Factory):
    """The star K_{1,n-1}, center 0."""
    class Meta:
        model = Tree

    n = 4
    edges = factory.LazyAttribute(
        lambda star: [(0, vertex) for vertex in range(1, star.n)]
    )
