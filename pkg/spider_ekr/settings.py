"""
Django settings for the Spider-EKR project.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# Quick-start development settings - unsuitable for production
# See https://docs.djangoproject.com/en/4.2/howto/deployment/checklist/

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'SPIDER_EKR_SECRET_KEY',
    'dev-only-3q9v!k2x@spider-ekr#r7m0z$w1b8n^c5t',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('SPIDER_EKR_DEBUG', '') == '1'

ALLOWED_HOSTS = ['localhost', '127.0.0.1', 'testserver']


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'corsheaders',
    'spider_ekr',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'corsheaders.middleware.CorsMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.locale.LocaleMiddleware',
]

ROOT_URLCONF = 'spider_ekr.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'spider_ekr.wsgi.application'


# Database
# Nothing is persisted: every result is computed on demand and written to
# flat files or standard output.

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Django Rest Framework

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'DEFAULT_PARSER_CLASSES': (
        'rest_framework.parsers.JSONParser',
    ),
    'DEFAULT_AUTHENTICATION_CLASSES': (),
    'DEFAULT_PERMISSION_CLASSES': (
        'rest_framework.permissions.AllowAny',
    ),
    'UNAUTHENTICATED_USER': None,
}


# CORS Header Django Rest Framework

CORS_ALLOW_ALL_ORIGINS = True


# Logging
# Everything goes to stderr so that command output on stdout stays
# byte-identical between runs.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'spider_ekr': {
            'handlers': ['stderr'],
            'level': os.environ.get('SPIDER_EKR_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Computation settings
# Budgets bound the exact clique search: a family larger than
# BUDGET_FAMILY or a search past BUDGET_NODES expansions is refused
# rather than answered approximately.

SPIDER_EKR = {
    'BUDGET_FAMILY': 5000,
    'BUDGET_NODES': 10 ** 7,
    'COUNT_BITS': 64,
    'SCAN_WORKERS': 1,
    'DEFAULT_FORMAT': 'tsv',
}
