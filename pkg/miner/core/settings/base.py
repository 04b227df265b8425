"""
Django settings for the behaviour miner.

Generated by 'django-admin startproject' using Django 4.1.5 and trimmed down
to what the management commands need: there is no web surface, the project
is driven entirely through `manage.py generate|learn|explain|report`.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.1/ref/settings/
"""
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# SECURITY WARNING: nothing is served, the key only satisfies Django's checks.
SECRET_KEY = "django-insecure-behaviour-miner-offline-commands-only"

DEBUG = True

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "rest_framework",
    "traces",
    "learning",
    "explanation",
]

FIXTURE_DIRS = [BASE_DIR / "fixtures/"]


# Internationalization
# https://docs.djangoproject.com/en/4.1/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# DRF
# File formats rely on compact, unescaped and NaN-free JSON.

REST_FRAMEWORK = {
    "COMPACT_JSON": True,
    "UNICODE_JSON": True,
    "STRICT_JSON": True,
}

# LOGGING

LOG_LEVEL = "INFO"

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {"format": "{levelname} {name}: {message}", "style": "{"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "simple"},
    },
    "loggers": {
        app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app in ("traces", "learning", "explanation")
    },
}

# BLOCKS WORLD

BLOCKS_WORLD_BLOCKS = ("a", "b", "c")
BLOCKS_WORLD_PLACES = ("p1", "p2", "p3", "p4")

# Random legal moves the robot makes before it starts solving
BLOCKS_WORLD_EXPLORATION_STEPS = 40

# Probability of injecting `preventingp` instead of `p` at a state
INJECTION_COIN_BIAS = 0.5

# Successful instances (and as many fragments) in the micro domain
MICRO_DOMAIN_INSTANCES = 5

DEFAULT_SEED = 0

# LEARNING

# Plan length used to filter Prevents candidates, None for the longest instance
PREVENTS_PLAN_BOUND = None

# EXPLANATION

DEFAULT_PRINCIPLE_RANKS = {"desired": 1, "mandatory": 1, "undesired": 1, "must_precede": 2}
DEFAULT_PRINCIPLES_PATH = BASE_DIR / "fixtures" / "principles.json"
