import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from django.test.utils import override_settings


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class StarsTests(SimpleTestCase):

    def test_tsv(self):
        """
        Ensure the star table of the spider (2,1) at t=2.
        """
        output = run('stars', spider='2,1', t='2', format='tsv')

        self.assertEqual(
            output,
            'vertex\tcoord\tcount\n'
            '0\tv0\t1\n'
            '1\tv1,1\t1\n'
            '2\tv1,2\t2\n'
            '3\tv2,1\t2\n'
            '# t=2 total=3\n',
        )

    def test_json(self):
        """
        Ensure the JSON table carries t, total and one record per vertex.
        """
        content = json.loads(run('stars', spider='1,1,1', t='2',
                                 format='json'))

        self.assertEqual(content['tree_source'], 'spider:1,1,1')
        self.assertEqual(content['t'], 2)
        self.assertEqual(content['total'], 3)
        self.assertEqual(content['vertices'][0],
                         {'vertex': 0, 'coord': 'v0', 'count': 0})

    def test_beyond_alpha(self):
        """
        Ensure a t past alpha gives the empty family.
        """
        output = run('stars', spider='2,1', t='9')

        self.assertTrue(output.endswith('# t=9 total=0\n'))

    def test_deterministic(self):
        """
        Ensure two runs print the same bytes.
        """
        self.assertEqual(
            run('stars', spider='3,1,2', t='3', format='json'),
            run('stars', spider='3,1,2', t='3', format='json'),
        )

    def test_bad_descriptor(self):
        """
        Ensure a bad descriptor exits with code 2.
        """
        with self.assertRaises(CommandError) as context:
            run('stars', spider='2,0', t='2')

        self.assertEqual(context.exception.returncode, 2)

    def test_needs_one_source_and_one_t(self):
        """
        Ensure a missing source, a missing t or a t-range exit with code 2.
        """
        for options in [{'t': '2'}, {'spider': '2,1'},
                        {'spider': '2,1', 't': '1..2'},
                        {'spider': '2,1', 't': '0'}]:
            with self.assertRaises(CommandError) as context:
                run('stars', **options)
            self.assertEqual(context.exception.returncode, 2)

    @override_settings(SPIDER_EKR={
        'BUDGET_FAMILY': 5000,
        'BUDGET_NODES': 10 ** 7,
        'COUNT_BITS': 2,
        'SCAN_WORKERS': 1,
        'DEFAULT_FORMAT': 'tsv',
    })
    def test_overflow(self):
        """
        Ensure a count past the configured width exits with code 3.
        """
        with self.assertRaises(CommandError) as context:
            run('stars', spider='1,1,1,1,1', t='2')

        self.assertEqual(context.exception.returncode, 3)


class OrderTests(SimpleTestCase):

    def test_order(self):
        """
        Ensure the legs are printed in spider order.
        """
        self.assertEqual(run('order', spider='3,1,2,4'), '1,3,4,2\n')

    def test_order_json(self):
        """
        Ensure the JSON form keeps the input next to the result.
        """
        content = json.loads(run('order', spider='2,2,3', format='json'))

        self.assertEqual(content, {'spider': '2,2,3',
                                   'spider_order': '3,2,2'})
