import json

from rest_framework import status
from rest_framework.test import APIClient, APISimpleTestCase

from django.urls import reverse


class ApiTests(APISimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def get(self, name, **params):
        return self.client.get(reverse(name), params)

    def test_stars(self):
        """
        Ensure we can get the star table of a spider.
        """
        response = self.get('stars', spider='2,1', t='2')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        content = json.loads(response.content)
        self.assertEqual(content['total'], 3)
        self.assertEqual([row['count'] for row in content['vertices']],
                         [1, 1, 2, 2])

    def test_stars_bad_descriptor(self):
        """
        Ensure a bad descriptor is a bad request.
        """
        response = self.get('stars', spider='2,x', t='2')

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('spider', json.loads(response.content))

    def test_stars_no_local_files(self):
        """
        Ensure the API never reads tree files from disk.
        """
        response = self.get('stars', tree='/etc/hostname', t='2')

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('tree', json.loads(response.content))

    def test_order(self):
        """
        Ensure we can get the spider order of a descriptor.
        """
        response = self.get('order', spider='3,1,2,4')

        self.assertEqual(json.loads(response.content),
                         {'spider': '3,1,2,4', 'spider_order': '1,3,4,2'})

    def test_ekr(self):
        """
        Ensure we can get EKR verdicts for a range of t.
        """
        response = self.get('ekr', spider='1,1,1', t='1..2')

        content = json.loads(response.content)
        self.assertEqual([v['is_t_ekr'] for v in content], [True, False])
        self.assertEqual(content[1]['max_intersecting'], 3)
        self.assertFalse(content[1]['reportable'])

    def test_ekr_t_past_alpha(self):
        """
        Ensure a t past alpha is a bad request.
        """
        response = self.get('ekr', spider='2,1', t='3')

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_verify(self):
        """
        Ensure we can run the injection checks.
        """
        response = self.get('verify', theorem='3', spider='2,1', t='1..2')

        content = json.loads(response.content)
        self.assertTrue(content['passed'])
        self.assertEqual([r['t'] for r in content['reports']], [1, 2])

    def test_verify_bad_theorem(self):
        """
        Ensure an unknown theorem is a bad request.
        """
        response = self.get('verify', theorem='4', spider='2,1', t='1')

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('theorem', json.loads(response.content))

    def test_centers(self):
        """
        Ensure we can get the best centers of every t up to alpha.
        """
        response = self.get('centers', spider='1,2')

        content = json.loads(response.content)
        self.assertEqual(len(content), 2)
        self.assertEqual(content[1]['center']['argmax_vertices'], [1, 3])
        self.assertEqual(content[1]['leaf_profile']['counts'], [2, 2])
