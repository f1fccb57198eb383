import sys

from weierstrass.cli import main

sys.exit(main())
