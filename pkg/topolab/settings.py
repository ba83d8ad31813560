"""
Django settings for the topolab project.

The project has no web surface and no database; it is driven through the
management commands of the ``main`` app.
"""

import os
from pathlib import Path

import sentry_sdk
from sentry_sdk.integrations.django import DjangoIntegration

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("SECRET_KEY", "override me")

DEBUG = True if os.getenv("NODEBUG") is None else False

ENVIRONMENT = os.getenv("ENVIRONMENT", "local")

# Application definition

INSTALLED_APPS = [
    "django_extensions",
    "main",
]

# Everything lives in flat files.
DATABASES: dict = {}

USE_TZ = True

TIME_ZONE = "UTC"

# Laboratory configuration
TFLAB_SEED = int(os.getenv("TFLAB_SEED", "0"))

# Safety bound on the number of points for powerset enumeration.
TFLAB_MAX_POINTS = int(os.getenv("TFLAB_MAX_POINTS", "4"))

# Largest powerset or poset a document may declare.
TFLAB_DOCUMENT_POINTS = int(os.getenv("TFLAB_DOCUMENT_POINTS", "8"))

# Maximum number of complemented elements for general-lattice subframe enumeration.
TFLAB_SUBFRAME_CAP = int(os.getenv("TFLAB_SUBFRAME_CAP", "16"))

TFLAB_WORKERS = int(os.getenv("TFLAB_WORKERS", "1"))

# Functions checked per instance before the checkers switch to sampling.
TFLAB_FUNCTION_SAMPLE = int(os.getenv("TFLAB_FUNCTION_SAMPLE", "256"))

# Random value assignments per orthogonal-family shape.
TFLAB_SEPARATION_ASSIGNMENTS = int(os.getenv("TFLAB_SEPARATION_ASSIGNMENTS", "3"))

TFLAB_ISOMORPHISM_PAIRS = int(os.getenv("TFLAB_ISOMORPHISM_PAIRS", "200"))

REPORT_SCHEMA_VERSION = 1

sentry_sdk.init(
    dsn=os.getenv("SENTRY_DSN"),
    traces_sample_rate=0.02,
    environment=ENVIRONMENT,
    integrations=[DjangoIntegration()],
)

TEST_RUNNER = "xmlrunner.extra.djangotestrunner.XMLTestRunner"

TEST_OUTPUT_FILE_NAME = "report.xml"

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"console": {"class": "logging.StreamHandler"}},
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": os.getenv("DJANGO_LOG_LEVEL", "INFO"),
        },
        "main": {
            "handlers": ["console"],
            "level": os.getenv("TFLAB_LOG_LEVEL", "INFO"),
        },
    },
}
