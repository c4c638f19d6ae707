"""
psycholex 公共组件模块
"""
