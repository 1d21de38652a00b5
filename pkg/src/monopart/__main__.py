import sys

from monopart.cli import main

sys.exit(main())
