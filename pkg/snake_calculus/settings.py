"""
Django settings for snake_calculus project.

Generated by 'django-admin startproject' using Django 5.2.6.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-change-in-production')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = ['localhost', '127.0.0.1', '0.0.0.0', 'testserver']

BASE_DIR = Path(__file__).resolve().parent.parent


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',

    'rest_framework',
    'django_filters',

    'snakegraphs',
    'matchings',
    'resolutions',
    'laurent',
    'surfaces',
    'runs',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'runs.middleware.LoggingMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'snake_calculus.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'snake_calculus.wsgi.application'


# Database
# Only run reports and log entries are stored; sqlite is the default.
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': os.getenv('DB_ENGINE', 'django.db.backends.sqlite3'),
        'NAME': os.getenv('DB_NAME', BASE_DIR / 'db.sqlite3'),
    }
}


# REST Framework configuration
REST_FRAMEWORK = {
    'DEFAULT_PERMISSION_CLASSES': (
        'rest_framework.permissions.AllowAny',
    ),
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'DEFAULT_FILTER_BACKENDS': (
        'django_filters.rest_framework.DjangoFilterBackend',
    ),
    'DEFAULT_PAGINATION_CLASS': 'rest_framework.pagination.PageNumberPagination',
    'PAGE_SIZE': 20,
}


# Engine knobs
SNAKECALC = {
    # 'printed' follows the k-search rules of the resolution as written,
    # 'proof' negates the comparison in the four boundary clauses.
    'SIGN_CONVENTION': os.getenv('SNAKECALC_SIGN_CONVENTION', 'printed'),
    'MAX_TILES': int(os.getenv('SNAKECALC_MAX_TILES', 20)),
    'MAX_POLYGON': int(os.getenv('SNAKECALC_MAX_POLYGON', 10)),
    'SUITE_WORKERS': int(os.getenv('SNAKECALC_SUITE_WORKERS', 1)),
    'PERSIST_RUNS': os.getenv('SNAKECALC_PERSIST_RUNS', 'True').lower() == 'true',
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (CSS, JavaScript, Images)
# https://docs.djangoproject.com/en/5.2/howto/static-files/

STATIC_URL = 'static/'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'snakecalc.log',
            'formatter': 'verbose',
        },
        'console': {
            'level': os.getenv('SNAKECALC_CONSOLE_LEVEL', 'WARNING'),
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'db': {
            'level': 'WARNING',
            'class': 'runs.handlers.DatabaseLogHandler',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['file', 'console'],
            'level': 'INFO',
            'propagate': True,
        },
        'snake_calculus': {
            'handlers': ['file', 'console', 'db'],
            'level': 'INFO',
            'propagate': True,
        },
        'snakegraphs': {
            'handlers': ['file', 'console', 'db'],
            'level': 'INFO',
            'propagate': False,
        },
        'matchings': {
            'handlers': ['file', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'resolutions': {
            'handlers': ['file', 'console', 'db'],
            'level': 'INFO',
            'propagate': False,
        },
        'laurent': {
            'handlers': ['file', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'surfaces': {
            'handlers': ['file', 'console', 'db'],
            'level': 'INFO',
            'propagate': False,
        },
        'runs': {
            'handlers': ['file', 'console', 'db'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}
