import sys

from narspln.cli import main

sys.exit(main())
