"""
命令行运行配置：YAML 缺省值叠加命令行参数
"""

from __future__ import annotations

from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from backend.core.covers.relation_monoid import DEFAULT_RELATION_CAP
from backend.renewal.investigation import DEFAULT_MAX_WORDS


def _safe_get(d: Dict[str, Any], path: str, default: Any = None) -> Any:
    cur: Any = d
    for p in path.split("."):
        if not isinstance(cur, dict) or p not in cur:
            return default
        cur = cur[p]
    return cur


class RunConfig(BaseModel):
    """一次命令行运行的参数"""

    model_config = ConfigDict(frozen=True)

    max_words: int = DEFAULT_MAX_WORDS
    interactive: bool = False
    verbose_sync_info: bool = False
    output_path: Optional[str] = None
    workers: int = 1
    relation_cap: int = DEFAULT_RELATION_CAP
    border_gen_bound: Optional[int] = None
    entropy_tol: float = 1e-9

    @field_validator("max_words", "relation_cap")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"必须为正: {value}")
        return value

    @field_validator("workers")
    @classmethod
    def _at_least_one(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"进程数必须 >= 1: {value}")
        return value

    @classmethod
    def from_settings(cls, cfg: Dict[str, Any], **overrides: Any) -> "RunConfig":
        """
        用 load_config() 的结果构造，值为 None 的覆盖项被忽略

        Args:
            cfg: 配置字典
            overrides: 命令行给出的参数
        """
        values: Dict[str, Any] = {
            "max_words": _safe_get(cfg, "renewal.max_words", DEFAULT_MAX_WORDS),
            "workers": _safe_get(cfg, "renewal.workers", 1),
            "border_gen_bound": _safe_get(cfg, "renewal.border_gen_bound"),
            "relation_cap": _safe_get(cfg, "covers.relation_cap", DEFAULT_RELATION_CAP),
            "entropy_tol": _safe_get(cfg, "invariants.entropy_tol", 1e-9),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
