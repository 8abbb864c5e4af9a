import sys

from k4cut.cli import main

sys.exit(main())
