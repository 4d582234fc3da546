"""Allow ``python -m qginv``."""

import sys

from .cli import main

sys.exit(main())
