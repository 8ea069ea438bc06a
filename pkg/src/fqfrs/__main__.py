import sys

from fqfrs.cli import main

sys.exit(main())
