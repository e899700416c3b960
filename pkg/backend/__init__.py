"""
sofic 移位流等价工具包
"""

__version__ = "0.1.0"
