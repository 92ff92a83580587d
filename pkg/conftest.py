import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "spider_ekr.settings")
django.setup()
