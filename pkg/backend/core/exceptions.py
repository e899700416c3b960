"""
工具包异常定义
"""

from typing import Optional


class SoficToolkitError(Exception):
    """工具包所有异常的基类"""


class ParseError(SoficToolkitError, ValueError):
    """输入文本格式错误"""

    def __init__(self, message: str, line_no: Optional[int] = None, line: Optional[str] = None):
        self.line_no = line_no
        self.line = line
        if line_no is not None:
            message = f"第 {line_no} 行: {message}: {line!r}"
        super().__init__(message)


class PreconditionError(SoficToolkitError, ValueError):
    """操作的前置条件不满足"""


class ResourceLimitError(SoficToolkitError, RuntimeError):
    """超出显式的资源上限"""
