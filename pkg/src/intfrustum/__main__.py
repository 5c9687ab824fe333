import sys

from intfrustum.cli import main

sys.exit(main())
