"""
命令行：click 命令组与运行配置
"""
