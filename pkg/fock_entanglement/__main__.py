import sys

from fock_entanglement.cli import main

sys.exit(main())
