import sys

from fintop.cli.main import main

sys.exit(main())
