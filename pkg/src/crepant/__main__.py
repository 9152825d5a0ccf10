"""Allow ``python3 -m crepant``."""

import sys

from .cli import main

sys.exit(main())
