import sys

from guillotine_layout.cli import main

sys.exit(main())
