"""Allow `python -m ivpverify <task> ...` as an alias for the `verify` script."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
