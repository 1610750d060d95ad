import sys

from polyproj.cli import main

sys.exit(main())
