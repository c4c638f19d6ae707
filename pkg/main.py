#!/usr/bin/env python3
"""
psycholex 启动入口

未安装时直接运行: python main.py run-all --config config/development.yaml
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
sys.path.insert(0, str(Path(__file__).parent))

from psycholex.main import main


if __name__ == '__main__':
    main()
