import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ..factories import PathFactory, StarTreeFactory
from ..graph_core import dump_tree

SCAN_FOOTER_5 = '# instances=11 verdicts=6 verified=6 not_ekr=0 ' \
                'budget_exceeded=0 reportable=0\n'


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class EkrTests(SimpleTestCase):

    def test_path_spider(self):
        """
        Ensure the spider (2,1) is 2-EKR.
        """
        lines = run('ekr', spider='2,1', t='2').splitlines()

        self.assertEqual(lines[0].split('\t')[:3],
                         ['tree_source', 't', 'mu'])
        self.assertEqual(
            lines[1],
            'spider:2,1\t2\t2\t2\t2\t2\t2,3\ttrue\tfalse\tok\t-',
        )

    def test_claw(self):
        """
        Ensure K_{1,3} is not 2-EKR and is outside the conjecture range.
        """
        lines = run('ekr', spider='1,1,1', t='2').splitlines()

        self.assertEqual(
            lines[1],
            'spider:1,1,1\t2\t1\t3\t3\t2\t1,2,3\tfalse\tfalse\tok\t-',
        )
        self.assertEqual(
            lines[2],
            '# instances=1 verdicts=1 verified=0 not_ekr=1 '
            'budget_exceeded=0 reportable=0',
        )

    def test_json(self):
        """
        Ensure the JSON verdict carries the witness family.
        """
        content = json.loads(run('ekr', spider='2,1', t='1..2',
                                 format='json'))

        self.assertEqual([v['t'] for v in content['verdicts']], [1, 2])
        verdict = content['verdicts'][1]
        self.assertEqual(verdict['witness'], [[0, 2], [2, 3]])
        self.assertTrue(verdict['is_t_ekr'])
        self.assertEqual(content['summary']['verified'], 2)

    def test_budget_recorded(self):
        """
        Ensure a family past the budget is recorded and exits 0.
        """
        lines = run('ekr', spider='2,1', t='2',
                    budget_family=2).splitlines()

        self.assertIn('\tbudget-exceeded\t', lines[1])
        self.assertTrue(lines[2].endswith('budget_exceeded=1 reportable=0'))

    def test_t_past_alpha(self):
        """
        Ensure a t past alpha exits with code 2.
        """
        with self.assertRaises(CommandError) as context:
            run('ekr', spider='2,1', t='3')

        self.assertEqual(context.exception.returncode, 2)

    def test_tree_file(self):
        """
        Ensure a tree file is read and named after its file.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'path.txt')
            with open(path, 'w') as handle:
                handle.write(dump_tree(PathFactory()))
            lines = run('ekr', tree=path, t='2').splitlines()

        self.assertTrue(lines[1].startswith('tree:path.txt\t2\t'))

    def test_undecodable_tree_file(self):
        """
        Ensure a tree file that is not UTF-8 text exits with code 2.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'bad.txt')
            with open(path, 'wb') as handle:
                handle.write(b'\xff')

            with self.assertRaises(CommandError) as context:
                run('ekr', tree=path, t='1')

        self.assertEqual(context.exception.returncode, 2)


class ScanTests(SimpleTestCase):

    def test_catalog(self):
        """
        Ensure all spiders up to 5 vertices are scanned.
        """
        output = run('scan', max_n=5)
        lines = output.splitlines()

        self.assertEqual(len(lines), 1 + 6 + 1)
        self.assertTrue(lines[1].startswith('spider:1,2\t1\t2\t'))
        self.assertTrue(output.endswith(SCAN_FOOTER_5))

    def test_workers_keep_catalog_order(self):
        """
        Ensure a worker pool prints the same bytes as a single worker.
        """
        self.assertEqual(run('scan', max_n=6, workers=2),
                         run('scan', max_n=6, workers=1))

    def test_tree_dir(self):
        """
        Ensure every *.txt file of a directory is scanned in name order.
        """
        with tempfile.TemporaryDirectory() as directory:
            for name, tree in [('b_claw.txt', StarTreeFactory()),
                               ('a_path.txt', PathFactory())]:
                with open(os.path.join(directory, name), 'w') as handle:
                    handle.write(dump_tree(tree))
            with open(os.path.join(directory, 'notes.md'), 'w') as handle:
                handle.write('not a tree\n')
            lines = run('scan', tree_dir=directory).splitlines()

        self.assertEqual(
            lines[1],
            'tree:a_path.txt\t1\t2\t2\t1\t1\t0,1,2,3\ttrue\ttrue\tok\t-',
        )
        self.assertEqual(
            lines[2],
            '# instances=2 verdicts=1 verified=1 not_ekr=0 '
            'budget_exceeded=0 reportable=0',
        )

    def test_undecodable_file_in_tree_dir(self):
        """
        Ensure a tree directory holding a non-UTF-8 file exits with
        code 2.
        """
        with tempfile.TemporaryDirectory() as directory:
            with open(os.path.join(directory, 'bad.txt'), 'wb') as handle:
                handle.write(b'n 2\n0 1 \xff\xfe\n')

            with self.assertRaises(CommandError) as context:
                run('scan', tree_dir=directory)

        self.assertEqual(context.exception.returncode, 2)

    def test_needs_one_source(self):
        """
        Ensure scan takes exactly one of --max-n and --tree-dir.
        """
        with self.assertRaises(CommandError) as context:
            run('scan')

        self.assertEqual(context.exception.returncode, 2)

        with self.assertRaises(CommandError):
            run('scan', max_n=4, tree_dir='.')


class CentersTests(SimpleTestCase):

    def test_spider(self):
        """
        Ensure the leaves v1,1 and v2,2 center the largest 2-stars of
        (1,2).
        """
        lines = run('centers', spider='1,2', t='2').splitlines()

        self.assertEqual(
            lines,
            [
                't\tmax_star\targmax\tany_leaf\tleaf_counts\t'
                'leaves_decreasing',
                '2\t2\tv1,1 v2,2\ttrue\t2,2\ttrue',
            ],
        )

    def test_default_range(self):
        """
        Ensure every t up to alpha is reported by default.
        """
        content = json.loads(run('centers', spider='2,1', format='json'))

        self.assertEqual([entry['center']['t'] for entry in content],
                         [1, 2])
        self.assertEqual(content[1]['leaf_profile']['legs'], [1, 2])
        self.assertTrue(all(entry['center']['any_leaf']
                            for entry in content))
