#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
认证无零区域命令行工具

Usage:
    python scripts/zerofree.py constants --q 3,4,5,6
    python scripts/zerofree.py certify --gen "hermite(1)" --out out/
"""

import sys
import os

# 添加 src 到 Python 路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from cli.main import main


if __name__ == "__main__":
    sys.exit(main())
