import sys

from toricbrauer.main import main

sys.exit(main())
