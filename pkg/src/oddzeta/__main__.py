import sys

from oddzeta.cli import main

sys.exit(main())
