import sys

from combalg.cli import main

sys.exit(main())
