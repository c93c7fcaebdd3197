"""Entry point for ``python -m bellrsp``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
