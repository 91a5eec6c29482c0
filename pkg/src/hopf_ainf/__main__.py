"""Entry point for python -m hopf_ainf."""

import sys

from hopf_ainf.cli import main

sys.exit(main())
