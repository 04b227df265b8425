import os
import sys
from pathlib import Path

# The Django project lives in miner/ (see docker-compose.yml, app-test service).
sys.path.insert(0, str(Path(__file__).resolve().parent / "miner"))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "core.settings.test")

import django  # noqa: E402

django.setup()
