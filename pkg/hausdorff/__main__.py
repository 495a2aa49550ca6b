import sys

from hausdorff.cli.main import main

sys.exit(main())
