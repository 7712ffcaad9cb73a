""" python -m orbichi """

import sys
from orbichi.cli import main

sys.exit(main())
