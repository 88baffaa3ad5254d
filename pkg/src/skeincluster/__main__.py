import sys

from skeincluster.cli import main

sys.exit(main())
