"""
Conjecture-range scans over many trees, fanned out across a worker pool.

Workers rebuild each tree from plain data and get every budget explicitly,
so they never read Django settings.
"""
import logging
import os
from dataclasses import dataclass
from multiprocessing import Pool

from .ekr_check import holroyd_talbot_scan
from .graph_core import (Spider, Tree, format_descriptor, load_tree,
                         spider_catalog)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanJob:
    source: str
    budget_family: int
    budget_nodes: int
    count_bits: int
    legs: tuple = None
    n: int = 0
    edges: tuple = ()

    def tree(self):
        if self.legs is not None:
            return Spider(self.legs)
        return Tree(self.n, self.edges)


def catalog_jobs(max_n, budget_family, budget_nodes, count_bits):
    return [
        ScanJob(
            source='spider:' + format_descriptor(legs),
            budget_family=budget_family,
            budget_nodes=budget_nodes,
            count_bits=count_bits,
            legs=legs,
        )
        for legs in spider_catalog(max_n)
    ]


def directory_jobs(path, budget_family, budget_nodes, count_bits):
    """One job per *.txt edge-list file, in file-name order."""
    jobs = []
    for name in sorted(os.listdir(path)):
        if not name.endswith('.txt'):
            continue
        tree = load_tree(os.path.join(path, name))
        jobs.append(ScanJob(
            source='tree:' + name,
            budget_family=budget_family,
            budget_nodes=budget_nodes,
            count_bits=count_bits,
            n=tree.n,
            edges=tuple(tree.edges),
        ))
    return jobs


def scan_instance(job):
    return holroyd_talbot_scan(
        job.tree(),
        budget_family=job.budget_family,
        budget_nodes=job.budget_nodes,
        source=job.source,
        count_bits=job.count_bits,
    )


def run_scan(jobs, workers=1):
    """
    Verdict lists, one per job, in job order whatever order the workers
    finish in.
    """
    logger.info('scanning %d instances with %d worker(s)', len(jobs), workers)
    if workers <= 1 or len(jobs) <= 1:
        return [scan_instance(job) for job in jobs]
    with Pool(processes=min(workers, len(jobs))) as pool:
        return list(pool.imap(scan_instance, jobs, chunksize=1))
