import sys

from diolab.cli import main

sys.exit(main())
