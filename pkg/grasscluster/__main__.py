import sys

from grasscluster.cli import main

sys.exit(main())
