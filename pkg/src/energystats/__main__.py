import sys

from energystats.cli import main

sys.exit(main())
