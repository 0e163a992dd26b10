import sys

from zetaline.cli import main

sys.exit(main())
