"""
命令行入口

    sofic investigate aa aaa b
    sofic investigate systems.txt -n 100000 -s -o report.txt
    sofic reduce systems.txt
    sofic add first.txt second.txt
    sofic symmetric 4 2
    sofic beta 11:10 --cover fischer
    sofic gap --set "|0,1|3"
    sofic covers even.txt --which fischer,krieger,gfc
    sofic bf matrix.txt
    sofic borders aa aaa b --gen-bound 6

退出码：0 成功，1 用法或校验错误，2 输入解析错误，3 非批量模式下触及资源上限。
"""

from __future__ import annotations

import functools
import logging
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence, Tuple, TypeVar

import click
from pydantic import ValidationError

from backend.beta import (
    classify_flow,
    covering_multiplicity,
    fiber_product_cover,
    invariant_S,
    is_sft,
    krieger_equals_fischer_check,
    left_fischer_cover,
    parse_beta_argument,
    right_fischer_cover,
    standard_form,
    to_binary,
)
from backend.cli.run_config import RunConfig
from backend.core.covers import (
    fischer_cover_left,
    generalized_fischer_cover,
    krieger_cover_left,
    past_set_cover,
    proper_communication_graph,
)
from backend.core.exceptions import ParseError, ResourceLimitError, SoficToolkitError
from backend.core.invariants.bowen_franks import bowen_franks_with_det, entropy
from backend.core.invariants.matrix_io import parse_matrix
from backend.core.symbolic.graph_io import format_graph, parse_graph
from backend.gapshift import gap_shift
from backend.main_runner import load_config, setup_logging
from backend.renewal import (
    add_lists,
    border_points,
    format_generating_list,
    investigate_many,
    non_cyclic_bf_prediction,
    parse_generating_lists,
    reduce_irreducible,
    standard_loop_graph,
    symmetric_system,
)
from backend.utils.formatters import (
    format_beta_line,
    format_bf_line,
    format_cover_summary,
    format_gap_line,
    format_inconclusive_line,
    format_result_line,
)
from shared.types.beta_types import BetaSequence
from shared.types.renewal_types import GeneratingList
from shared.types.symbolic_types import word_to_str

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3

COVER_KINDS = ("fischer", "krieger", "past", "gfc", "pc")

F = TypeVar("F", bound=Callable[..., Any])


class EqualsInt(click.ParamType):
    """整数参数，同时接受 '-n=100' 这种写法"""

    name = "integer"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> int:
        if isinstance(value, int):
            return value
        try:
            return int(str(value).lstrip("="))
        except ValueError:
            self.fail(f"{value!r} 不是整数", param, ctx)


class EqualsPath(click.ParamType):
    """文件名参数，同时接受 '-f=report.txt'"""

    name = "path"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> str:
        text = str(value).lstrip("=")
        if not text:
            self.fail("文件名为空", param, ctx)
        return text


class ToolkitGroup(click.Group):
    """用法错误的退出码为 1，其余行为与 click.Group 相同"""

    def main(self, *args: Any, standalone_mode: bool = True, **kwargs: Any) -> Any:
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _exit_codes(func: F) -> F:
    """把工具包异常映射为退出码"""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except ParseError as exc:
            click.echo(f"解析错误: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except ResourceLimitError as exc:
            click.echo(f"超出资源上限: {exc}", err=True)
            sys.exit(EXIT_RESOURCE)
        except (SoficToolkitError, ValidationError) as exc:
            click.echo(f"错误: {exc}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper  # type: ignore[return-value]


def _run_config(ctx: click.Context, **overrides: Any) -> RunConfig:
    return RunConfig.from_settings(ctx.obj["settings"], **overrides)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise click.UsageError(f"无法读取 {path}: {exc.strerror}") from None


def _read_lists(args: Sequence[str], name: str) -> Tuple[List[GeneratingList], bool]:
    """
    无参数时从标准输入读取，一个参数且是文件时读取文件，否则参数本身是一个生成表

    Returns:
        Tuple[List[GeneratingList], bool]: 生成表与是否为批量模式
    """
    if not args:
        text = click.get_text_stream("stdin").read()
        return parse_generating_lists(text), True
    if len(args) == 1 and Path(args[0]).is_file():
        return parse_generating_lists(_read_text(args[0])), True
    try:
        return [GeneratingList.from_strings(name, list(args))], False
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _write_report(lines: Sequence[str], output_path: Optional[str]) -> None:
    if output_path:
        Path(output_path).write_text("".join(f"{line}\n" for line in lines), "utf-8")
        logger.info(f"结果已写入 {output_path}")


def _emit(lines: Sequence[str], output_path: Optional[str]) -> None:
    for line in lines:
        click.echo(line)
    _write_report(lines, output_path)


def _confirm_continue(lst: GeneratingList, examined: int) -> bool:
    prompt = f"{lst.name}: 已检查 {examined} 个字，继续吗？"
    return click.confirm(prompt, default=False, err=True)


@click.group(cls=ToolkitGroup)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="配置文件，缺省为 config/settings/base.yaml")
@click.option("--log-level", default=None, help="覆盖配置中的日志级别")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], log_level: Optional[str]) -> None:
    """sofic 移位、更新系统与流等价不变量工具"""
    settings = load_config(config_path)
    setup_logging(settings, log_level)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@cli.command()
@click.argument("args", nargs=-1)
@click.option("-n", "--max-words", type=EqualsInt(), default=None, help="累计允许字数上限")
@click.option("-i", "--interactive", is_flag=True, help="达到上限时询问是否继续")
@click.option("-s", "--sync-info", is_flag=True, help="输出强同步与可延拓字的统计")
@click.option("-f", "-o", "--output", "output_path", type=EqualsPath(), default=None,
              help="报告文件")
@click.option("--workers", type=int, default=None, help="并行进程数")
@click.option("--name", default="unnamed", show_default=True, help="内联生成表的名称")
@click.pass_context
@_exit_codes
def investigate(
    ctx: click.Context,
    args: Tuple[str, ...],
    max_words: Optional[int],
    interactive: bool,
    sync_info: bool,
    output_path: Optional[str],
    workers: Optional[int],
    name: str,
) -> None:
    """检测更新系统是否为 SFT 并计算 Bowen-Franks 不变量"""
    run = _run_config(
        ctx,
        max_words=max_words,
        interactive=interactive,
        verbose_sync_info=sync_info,
        output_path=output_path,
        workers=workers,
    )
    lists, batch = _read_lists(args, name)
    ask = _confirm_continue if run.interactive and sys.stdin.isatty() else None
    progress = batch and sys.stderr.isatty()
    lines: List[str] = []
    exit_code = EXIT_OK
    for result in investigate_many(lists, run.max_words, run.workers, progress, ask):
        if result.is_sft:
            line = format_result_line(result)
            click.echo(line)
            lines.append(line)
            continue
        if result.error:
            logger.warning(f"{result.generating_list.name}: {result.error}")
        if run.verbose_sync_info or not batch:
            click.echo(format_inconclusive_line(result, run.verbose_sync_info))
        if not batch:
            exit_code = EXIT_USAGE if result.error else EXIT_RESOURCE
    _write_report(lines, run.output_path)
    if exit_code:
        sys.exit(exit_code)


@cli.command()
@click.argument("args", nargs=-1)
@click.option("-o", "--output", "output_path", type=EqualsPath(), default=None)
@click.option("--name", default="unnamed", show_default=True)
@_exit_codes
def reduce(args: Tuple[str, ...], output_path: Optional[str], name: str) -> None:
    """构造流等价的不可约生成表，符号重命名并排序"""
    lists, _ = _read_lists(args, name)
    _emit([format_generating_list(reduce_irreducible(lst)) for lst in lists], output_path)


@cli.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", "output_path", type=EqualsPath(), default=None)
@_exit_codes
def add(first: str, second: str, output_path: Optional[str]) -> None:
    """两个文件中生成表的两两之和 L_i ∪ M_j"""
    left = parse_generating_lists(_read_text(first))
    right = parse_generating_lists(_read_text(second))
    lines = [format_generating_list(add_lists(a, b)) for a in left for b in right]
    _emit(lines, output_path)


@cli.command()
@click.argument("exponents", nargs=-1, type=int, required=True)
@click.option("-o", "--output", "output_path", type=EqualsPath(), default=None)
@click.option("--predict", is_flag=True, help="同时输出 Bowen-Franks 不变量的闭式")
@_exit_codes
def symmetric(exponents: Tuple[int, ...], output_path: Optional[str], predict: bool) -> None:
    """禁止字恰为各字母幂 a_i^{n_i} 的生成表"""
    lst = symmetric_system(exponents)
    _emit([format_generating_list(lst)], output_path)
    if predict:
        click.echo(f"predicted={non_cyclic_bf_prediction(exponents).render()}")


def _beta_sequence(
    argument: Optional[str], pre: Optional[str], period: Optional[str]
) -> BetaSequence:
    if argument is not None:
        if pre is not None or period is not None:
            raise click.UsageError("PRE:PERIOD 与 --pre/--period 只能给出一种")
        return parse_beta_argument(argument)
    if period is None:
        raise click.UsageError("需要 PRE:PERIOD 或 --period")
    return parse_beta_argument(f"{pre or ''}:{period}")


@cli.command()
@click.argument("argument", required=False)
@click.option("--pre", default=None, help="非周期的开头")
@click.option("--period", default=None, help="周期")
@click.option("--cover", type=click.Choice(["fischer", "left", "fiber", "krieger-check"]),
              default=None)
@click.option("--binary", is_flag=True, help="先代入 φ(j) = 1^j 0")
@click.option("--standard-form", "to_standard", is_flag=True, help="化为标准形")
@click.option("--classify", "other", default=None, help="与另一个 PRE:PERIOD 比较流类")
@click.option("-o", "--output", "output_path", type=EqualsPath(), default=None,
              help="覆盖图的输出文件")
@click.pass_context
@_exit_codes
def beta(
    ctx: click.Context,
    argument: Optional[str],
    pre: Optional[str],
    period: Optional[str],
    cover: Optional[str],
    binary: bool,
    to_standard: bool,
    other: Optional[str],
    output_path: Optional[str],
) -> None:
    """sofic beta-移位：覆盖、标准形与流分类"""
    s = _beta_sequence(argument, pre, period)
    if binary:
        s = to_binary(s)
    click.echo(format_beta_line(s, invariant_S(s), is_sft(s), covering_multiplicity(s)))
    if to_standard:
        click.echo(f"standard={standard_form(s).render()}")
    if other is not None:
        click.echo(f"verdict={classify_flow(s, parse_beta_argument(other)).value}")
    if cover == "krieger-check":
        run = _run_config(ctx)
        same = krieger_equals_fischer_check(s, run.relation_cap)
        click.echo(f"krieger=fischer: {str(same).lower()}")
    elif cover is not None:
        builders = {
            "fischer": right_fischer_cover,
            "left": left_fischer_cover,
            "fiber": fiber_product_cover,
        }
        graph = builders[cover](s)
        click.echo(format_cover_summary(cover, graph))
        text = format_graph(graph)
        if output_path:
            Path(output_path).write_text(text, encoding="utf-8")
        else:
            click.echo(text, nl=False)


@cli.command()
@click.option("--set", "spec_text", required=True, help="e1,e2|f1,f2|N")
@click.option("--compare", "other", default=None, help="与另一个间隙集合比较")
@click.option("--cover", "show_cover", is_flag=True, help="输出约化形式的右 Fischer 覆盖")
@_exit_codes
def gap(spec_text: str, other: Optional[str], show_cover: bool) -> None:
    """S-间隙移位：约化标准形、(k, n) 与 Bowen-Franks 不变量"""
    spec = gap_shift.parse_gap_set(spec_text)
    if gap_shift.is_sft(spec):
        click.echo(f"sft full-shift={gap_shift.classify_sft(spec)}")
    else:
        reduced = gap_shift.reduce(spec)
        click.echo(f"reduced={gap_shift.format_gap_spec(reduced)}")
        click.echo(format_gap_line(gap_shift.invariants(spec)))
        if show_cover:
            click.echo(format_graph(gap_shift.right_fischer_cover(reduced)), nl=False)
    if other is not None:
        verdict = gap_shift.flow_distinguish(spec, gap_shift.parse_gap_set(other))
        click.echo(f"verdict={verdict.value}")


def _which(value: str) -> List[str]:
    kinds = [part.strip() for part in value.split(",") if part.strip()]
    unknown = [kind for kind in kinds if kind not in COVER_KINDS]
    if unknown or not kinds:
        raise click.BadParameter(f"可选值: {','.join(COVER_KINDS)}", param_hint="--which")
    return kinds


@cli.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--which", default="fischer,krieger", show_default=True,
              help="逗号分隔: fischer,krieger,past,gfc,pc")
@click.option("--relation-cap", type=int, default=None, help="关系幺半群状态数上限")
@click.option("--show", is_flag=True, help="同时输出覆盖图")
@click.pass_context
@_exit_codes
def covers(ctx: click.Context, graph_file: str, which: str, relation_cap: Optional[int],
           show: bool) -> None:
    """由表示构造左 Fischer、Krieger、过去集、广义 Fischer 覆盖与真通信图"""
    kinds = _which(which)
    run = _run_config(ctx, relation_cap=relation_cap)
    fischer = fischer_cover_left(parse_graph(_read_text(graph_file)))
    krieger = None
    for kind in kinds:
        layers = None
        if kind == "fischer":
            graph = fischer
        elif kind == "past":
            past = past_set_cover(fischer, run.relation_cap)
            graph, layers = past.graph, past.layer_sizes()
        else:
            if krieger is None:
                krieger = krieger_cover_left(fischer, run.relation_cap)
            if kind == "krieger":
                graph, layers = krieger.graph, krieger.layer_sizes()
            elif kind == "gfc":
                gfc = generalized_fischer_cover(krieger)
                graph, layers = gfc.graph, gfc.layer_sizes()
            else:
                graph = proper_communication_graph(krieger.graph)
        click.echo(format_cover_summary(kind, graph, layers))
        if show:
            click.echo(format_graph(graph), nl=False)


@cli.command()
@click.argument("matrix_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--entropy", "with_entropy", is_flag=True, help="同时输出熵")
@click.pass_context
@_exit_codes
def bf(ctx: click.Context, matrix_file: str, with_entropy: bool) -> None:
    """非负整数方阵的 det(I - A) 与 Bowen-Franks 群"""
    matrix = parse_matrix(_read_text(matrix_file))
    invariant, det = bowen_franks_with_det(matrix)
    click.echo(format_bf_line(invariant, det))
    if with_entropy:
        run = _run_config(ctx)
        click.echo(f"entropy={entropy(matrix, run.entropy_tol):.12g}")


@cli.command()
@click.argument("args", nargs=-1)
@click.option("--gen-bound", type=int, default=None, help="生成字长度上限")
@click.option("--name", default="unnamed", show_default=True)
@click.pass_context
@_exit_codes
def borders(ctx: click.Context, args: Tuple[str, ...], gen_bound: Optional[int],
            name: str) -> None:
    """左 Fischer 覆盖中的边界点及其极小生成字"""
    run = _run_config(ctx, border_gen_bound=gen_bound)
    lists, _ = _read_lists(args, name)
    for lst in lists:
        fischer = fischer_cover_left(standard_loop_graph(lst))
        points = border_points(lst, fischer, run.border_gen_bound)
        click.echo(format_cover_summary(f"fischer[{lst.name}]", fischer))
        for point in points:
            mark = " universal" if point.universal else ""
            click.echo(f"  v{point.vertex}: {word_to_str(point.generator)}{mark}")
