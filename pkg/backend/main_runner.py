from __future__ import annotations

import copy
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "settings" / "base.yaml"

DEFAULT_SETTINGS: Dict[str, Any] = {
    "renewal": {"max_words": 10_000, "border_gen_bound": None, "workers": 1},
    "covers": {"relation_cap": 200_000},
    "invariants": {"entropy_tol": 1e-9},
    "logging": {
        "level": "INFO",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        "file": None,
    },
}


def _merge(base: Dict[str, Any], extra: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[Union[str, os.PathLike]] = None) -> Dict[str, Any]:
    """加载配置文件，文件不存在时使用内置缺省值；文件中的值覆盖缺省值

    未给出路径时依次使用环境变量 SOFIC_CONFIG 与 config/settings/base.yaml。
    """
    if path is None:
        path = os.environ.get("SOFIC_CONFIG") or DEFAULT_CONFIG_PATH
    config_path = Path(path)
    if not config_path.exists():
        logging.getLogger(__name__).debug(f"配置文件 {config_path} 不存在，使用缺省配置")
        return copy.deepcopy(DEFAULT_SETTINGS)
    with open(config_path, "r", encoding="utf-8") as f:
        cfg = yaml.safe_load(f) or {}
    return _merge(DEFAULT_SETTINGS, cfg)


def setup_logging(cfg: Dict[str, Any], level: Optional[str] = None) -> None:
    """按配置初始化日志；logging.file 非空时同时写入运行日志文件"""
    log_cfg = cfg.get("logging", {})
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = log_cfg.get("file")
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, (level or log_cfg.get("level", "INFO")).upper(), logging.INFO),
        format=log_cfg.get("format", DEFAULT_SETTINGS["logging"]["format"]),
        handlers=handlers,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """命令行入口，返回退出码"""
    from backend.cli.main import cli

    try:
        cli.main(args=argv, prog_name="sofic", standalone_mode=True)
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
