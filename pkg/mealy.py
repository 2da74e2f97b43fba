#!/usr/bin/env python3

import logging
import sys

from src.cli import main

logging.basicConfig(level=logging.WARNING, format='%(asctime)s - %(levelname)s - %(message)s')

if __name__ == "__main__":
    sys.exit(main())
