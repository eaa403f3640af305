import sys

from QAHeadTool.cli import main

sys.exit(main())
