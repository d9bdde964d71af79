#!/usr/bin/env python3
# -*- coding: utf-8 -*-
'''
Unipotent Symbol Toolkit - exact symbol combinatorics for the unipotent
characters of finite classical groups
'''

import sys

from src.cli import main
from src.config import configure_logging, get_settings


if __name__ == "__main__":
    configure_logging(get_settings())
    sys.exit(main())
