"""
核心模块
包含符号图、整数不变量与覆盖构造
"""
