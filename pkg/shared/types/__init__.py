"""
共享领域类型
"""
