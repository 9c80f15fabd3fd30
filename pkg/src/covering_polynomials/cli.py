"""Command-line interface to compute, verify, enumerate and tabulate the polynomials.

Results are written to stdout as text, JSON lines or LaTeX, and logging goes to stderr.
"""

from dataclasses import dataclass
from functools import wraps
import json
import logging
from pathlib import Path
import sys
from typing import Callable, Iterable

import click
from hydra import compose, initialize
from hydra.core.global_hydra import GlobalHydra
from omegaconf import DictConfig
import pandas as pd

from . import ALL_VERIFICATION_SUITES
from .abelian import ab_covering_polynomials, enumerate_minuscule
from .closed_forms import (
    Which,
    delta_ab_at_one,
    e_chain_upper,
    q_minus_one_report,
    table1,
    table2,
    table3,
)
from .ideals import ad0_polynomial, ad_polynomial
from .polynomial import Polynomial
from .poset import (
    BudgetExceededError,
    Poset,
    deviation_polynomial,
    lower_covering_polynomial,
    read_poset,
    upper_covering_polynomial,
    upper_ideals,
)
from .root_system import (
    Root,
    RootSystem,
    RootSystemType,
    build,
    iter_types,
    without_simples,
)
from .utils import iter_bits


logger = logging.getLogger(__name__)


OBJECTS = ("positive-roots", "ad", "ad0", "ab", "custom")
FORMATS = ("text", "json", "latex")
REPORTS = ("table1", "table2", "table3", "q-minus-one", "delta-at-one")

# Column headers of the LaTeX tables
LATEX_HEADERS: dict[str, str] = dict(
    type="Type",
    object="Object",
    poset="Poset",
    upper=r"$K^\uparrow$",
    lower=r"$K^\downarrow$",
    deviation=r"$\Delta$",
    polynomial=r"$K^\uparrow = K^\downarrow$",
    total=r"$K(1)$",
    edges=r"$K'(1)$",
    value=r"$-\Delta(1)$",
)


@dataclass(frozen=True)
class Command:
    """A parsed request for polynomials or ideals.

    Attributes:
        verb:
            One of `polynomial`, `verify`, `enumerate` and `report`.
        root_type:
            The root system type, or None when the poset is read from a file.
        poset_path:
            The poset file, or None when a root system type is given.
        object:
            One of `positive-roots`, `ad`, `ad0`, `ab` and `custom`.
        which:
            One of `upper`, `lower`, `deviation` and `all`.
        format:
            One of `text`, `json` and `latex`.
    """

    verb: str
    root_type: RootSystemType | None
    poset_path: Path | None
    object: str
    which: str = "all"
    format: str = "text"

    def __post_init__(self) -> None:
        if (self.root_type is None) == (self.poset_path is None):
            raise ValueError("Give exactly one of --type and --poset")
        if self.poset_path is not None and self.object != "custom":
            raise ValueError("A poset file can only be used with --object custom")
        if self.root_type is not None and self.object == "custom":
            raise ValueError("--object custom needs a poset file")
        if self.object == "ab" and self.root_type is not None:
            if not self.root_type.is_reduced:
                raise ValueError(
                    f"Abelian ideals of {self.root_type} are those of "
                    f"C{self.root_type.rank}; use that type instead"
                )

    @property
    def selected(self) -> list[Which]:
        if self.which == "all":
            return list(Which)
        return [Which(self.which)]


def load_config(overrides: Iterable[str] = ()) -> DictConfig:
    """Compose the Hydra configuration, honouring overrides such as `max_rank=5`."""
    if GlobalHydra.instance().is_initialized():
        return compose(config_name="config", overrides=list(overrides))
    with initialize(config_path="../../config", version_base=None):
        return compose(config_name="config", overrides=list(overrides))


def _library_errors(function: Callable) -> Callable:
    """Turn invalid requests into usage errors and exhausted budgets into failures."""

    @wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except BudgetExceededError as e:
            raise click.ClickException(str(e))
        except ValueError as e:
            raise click.UsageError(str(e))

    return wrapper


def _parse_type(text: str | None) -> RootSystemType | None:
    return None if text is None else RootSystemType.from_string(text)


def _coords(root: Root) -> list[int]:
    return list(root.coords)


def _cell(value: object, output_format: str) -> object:
    """Format a table cell for one of the output formats."""
    if isinstance(value, Polynomial):
        match output_format:
            case "json":
                return list(value.coefficients)
            case "latex":
                return f"${value.format(latex=True)}$"
            case _:
                return str(value)
    if value is None:
        return None if output_format == "json" else "-"
    return value


def _latex_header(column: str) -> str:
    """The LaTeX header of a column, keeping the prefix of names such as `ad upper`."""
    if column in LATEX_HEADERS:
        return LATEX_HEADERS[column]
    prefix, _, suffix = column.rpartition(" ")
    if prefix and suffix in LATEX_HEADERS:
        return f"{prefix} {LATEX_HEADERS[suffix]}"
    return column.replace("_", r"\_")


def _emit_rows(rows: list[dict[str, object]], output_format: str) -> None:
    """Write a table to stdout, one JSON object per row for the JSON format."""
    if output_format == "json":
        for row in rows:
            click.echo(
                json.dumps({key: _cell(value, "json") for key, value in row.items()})
            )
        return
    formatted = [
        {key: _cell(value, output_format) for key, value in row.items()}
        for row in rows
    ]
    if output_format == "latex":
        columns = list(formatted[0]) if formatted else []
        lines = [
            r"\begin{tabular}{" + "l" * len(columns) + "}",
            r"\hline",
            " & ".join(map(_latex_header, columns)) + r" \\ \hline",
        ]
        lines.extend(
            " & ".join(str(row[column]) for column in columns) + r" \\"
            for row in formatted
        )
        lines.extend([r"\hline", r"\end{tabular}"])
        click.echo("\n".join(lines))
        return
    click.echo(pd.DataFrame(formatted).to_string(index=False))


def covering_polynomials(
    root_system: RootSystem, object_name: str
) -> tuple[Polynomial, Polynomial, Polynomial]:
    """The upper, lower and deviation polynomials of a poset attached to a root system.

    Args:
        root_system:
            The root system.
        object_name:
            One of `positive-roots`, `ad`, `ad0` and `ab`.

    Returns:
        The three polynomials.

    Raises:
        ValueError:
            If the object is not defined for the root system.
    """
    match object_name:
        case "positive-roots":
            return _poset_polynomials(root_system.root_poset)
        case "ad":
            polynomial = ad_polynomial(root_system)
            return polynomial, polynomial, Polynomial()
        case "ad0":
            polynomial = ad0_polynomial(root_system)
            return polynomial, polynomial, Polynomial()
        case "ab":
            return ab_covering_polynomials(enumerate_minuscule(root_system))
    raise ValueError(f"Unknown object {object_name!r}")


def _poset_polynomials(poset: Poset) -> tuple[Polynomial, Polynomial, Polynomial]:
    return (
        upper_covering_polynomial(poset),
        lower_covering_polynomial(poset),
        deviation_polynomial(poset),
    )


@click.group()
@click.option(
    "--override",
    "overrides",
    multiple=True,
    help="A Hydra override such as `ideal_budget=1000`. Can be repeated.",
)
@click.pass_context
def cli(ctx: click.Context, overrides: tuple[str, ...]) -> None:
    """Covering polynomials of posets, root systems and their ideals.

    \b
    Exit codes:
      0  success
      1  a verification check failed, or an enumeration exceeded `ideal_budget`
      2  invalid usage, such as an unknown type or an undefined object
    """
    logging.basicConfig(
        level=logging.INFO, stream=sys.stderr, format="%(asctime)s ⋅ %(message)s"
    )
    ctx.obj = load_config(overrides)


@cli.command()
@click.option("--type", "type_string", help="A root system type such as `E6`.")
@click.option(
    "--poset",
    "poset_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="A poset file in the exchange format.",
)
@click.option(
    "--object",
    "object_name",
    type=click.Choice(OBJECTS),
    default=None,
    help="The poset to use. Defaults to the positive roots, or `custom` with --poset.",
)
@click.option(
    "--which",
    type=click.Choice(["upper", "lower", "deviation", "all"]),
    default="all",
    show_default=True,
)
@click.option(
    "--format", "output_format", type=click.Choice(FORMATS), default="text"
)
@_library_errors
def polynomial(
    type_string: str | None,
    poset_path: Path | None,
    object_name: str | None,
    which: str,
    output_format: str,
) -> None:
    """Print covering polynomials with their value and derivative at 1."""
    if object_name is None:
        object_name = "custom" if poset_path is not None else "positive-roots"
    command = Command(
        verb="polynomial",
        root_type=_parse_type(type_string),
        poset_path=poset_path,
        object=object_name,
        which=which,
        format=output_format,
    )
    if command.root_type is not None:
        upper, lower, deviation = covering_polynomials(
            root_system=build(command.root_type), object_name=command.object
        )
        name: str | None = str(command.root_type)
    else:
        assert command.poset_path is not None
        upper, lower, deviation = _poset_polynomials(read_poset(command.poset_path))
        name = None

    values = dict(upper=upper, lower=lower, deviation=deviation)
    row: dict[str, object] = dict(type=name, object=command.object)
    if command.poset_path is not None:
        row["poset"] = str(command.poset_path)
    for selected in command.selected:
        row[selected.value] = values[selected.value]
    row["total"] = upper.evaluate(1)
    row["edges"] = upper.derivative_at_one()

    if command.format == "text":
        for key, value in row.items():
            click.echo(f"{key}: {_cell(value, 'text')}")
    else:
        _emit_rows([row], output_format=command.format)


@cli.command()
@click.argument("suite", type=click.Choice(list(ALL_VERIFICATION_SUITES)))
@click.option(
    "--max-rank",
    type=click.IntRange(min=1),
    default=None,
    help="The largest rank to check. Defaults to `max_rank` in the configuration.",
)
@click.pass_obj
def verify(cfg: DictConfig, suite: str, max_rank: int | None) -> None:
    """Run a verification suite, exiting with 1 if any check fails."""
    if max_rank is not None:
        cfg.max_rank = max_rank
    result = ALL_VERIFICATION_SUITES[suite](cfg)
    frame = result.to_dataframe()
    noteworthy = frame[~frame.passed.astype(bool)]
    if len(noteworthy):
        click.echo(noteworthy.to_string(index=False))
    click.echo(result.summary())
    if not result.passed:
        sys.exit(1)


def _ideal_records(
    cfg: DictConfig, root_system: RootSystem, object_name: str
) -> list[dict[str, object]]:
    """One record per ideal, in increasing order of size and then of bitset."""
    root_type = str(root_system.type)
    if object_name == "ab":
        report = enumerate_minuscule(root_system)
        stats = report.poset.covering_stats
        records = list()
        for i, ideal in enumerate(report.ideals):
            state = report.states[ideal]
            tau = report.tau.get(ideal)
            records.append(
                dict(
                    type=root_type,
                    object=object_name,
                    roots=[
                        _coords(root_system.positive_roots[x])
                        for x in ideal.elements()
                    ],
                    kappa=stats.kappa[i],
                    iota=stats.iota[i],
                    shift=list(state.shift),
                    tau=None if tau is None else _coords(tau),
                    word=list(state.word),
                )
            )
        return records

    if object_name == "ad":
        base = root_system.root_poset
    else:
        base = without_simples(root_system)
    records = list()
    for ideal in upper_ideals(base, budget=cfg.ideal_budget):
        complement = base.full & ~ideal
        records.append(
            dict(
                type=root_type,
                object=object_name,
                roots=[_coords(base.labels[x]) for x in iter_bits(ideal)],
                kappa=sum(
                    1 for x in iter_bits(ideal) if base.lower_covers[x] & ideal == 0
                ),
                iota=sum(
                    1
                    for x in iter_bits(complement)
                    if base.upper_covers[x] & complement == 0
                ),
            )
        )
    return records


@cli.command("enumerate")
@click.option("--type", "type_string", required=True)
@click.option(
    "--object", "object_name", type=click.Choice(["ad", "ad0", "ab"]), required=True
)
@click.option(
    "--format", "output_format", type=click.Choice(["text", "json"]), default="text"
)
@click.pass_obj
@_library_errors
def enumerate_ideals(
    cfg: DictConfig, type_string: str, object_name: str, output_format: str
) -> None:
    """Print one record per ideal."""
    command = Command(
        verb="enumerate",
        root_type=_parse_type(type_string),
        poset_path=None,
        object=object_name,
        format=output_format,
    )
    assert command.root_type is not None
    root_system = build(command.root_type)
    if command.object == "ad0" and root_system.rank < 2:
        raise ValueError("Strictly positive ideals need a rank of at least 2")
    records = _ideal_records(cfg=cfg, root_system=root_system, object_name=object_name)
    for record in records:
        if command.format == "json":
            click.echo(json.dumps(record))
            continue
        roots = "{" + ",".join(
            "(" + ",".join(map(str, root)) + ")" for root in record["roots"]
        ) + "}"
        fields = [roots] + [
            f"{key}={value}"
            for key, value in record.items()
            if key not in ("type", "object", "roots")
        ]
        click.echo(" ".join(fields))
    logger.info(f"Enumerated {len(records):,} ideals of {command.root_type}.")


def _report_rows(
    table: str, max_rank: int, speculative: bool
) -> list[dict[str, object]]:
    """The rows of one of the tables, computed from the closed forms."""
    rows: list[dict[str, object]] = list()
    match table:
        case "table1":
            for root_type in iter_types(max_rank=max_rank):
                family, n = root_type.family, root_type.rank
                rows.append(
                    dict(
                        type=str(root_type),
                        upper=table1(family, n, Which.UPPER),
                        lower=table1(family, n, Which.LOWER),
                        deviation=table1(family, n, Which.DEVIATION),
                    )
                )
        case "table2":
            for root_type in iter_types(max_rank=max_rank, reduced=True):
                if root_type.rank >= 2:
                    rows.append(
                        dict(
                            type=str(root_type),
                            polynomial=table2(root_type.family, root_type.rank),
                        )
                    )
        case "table3":
            for root_type in iter_types(max_rank=max_rank, reduced=True):
                family, n = root_type.family, root_type.rank
                rows.append(
                    dict(
                        type=str(root_type),
                        upper=table3(family, n, Which.UPPER),
                        lower=table3(family, n, Which.LOWER),
                        deviation=table3(family, n, Which.DEVIATION),
                    )
                )
            if speculative:
                logger.warning("The rank 9 row is an extrapolation, not a theorem.")
                rows.append(
                    dict(
                        type="E9",
                        upper=e_chain_upper(9, speculative=True),
                        lower=None,
                        deviation=None,
                    )
                )
        case "q-minus-one":
            for root_type in iter_types(max_rank=max_rank):
                report = q_minus_one_report(build(root_type))
                row: dict[str, object] = dict(type=str(root_type))
                for name, value in report.values.items():
                    row[f"{name} upper"] = None if value is None else value[0]
                    row[f"{name} lower"] = None if value is None else value[1]
                rows.append(row)
        case "delta-at-one":
            for root_type in iter_types(max_rank=max_rank, reduced=True):
                rows.append(
                    dict(type=str(root_type), value=delta_ab_at_one(root_type))
                )
    return rows


@cli.command()
@click.argument("table", type=click.Choice(REPORTS))
@click.option("--max-rank", type=click.IntRange(min=1), default=None)
@click.option(
    "--format", "output_format", type=click.Choice(FORMATS), default="text"
)
@click.option(
    "--speculative",
    is_flag=True,
    help="Add the extrapolated rank 9 row of the exceptional series to table3.",
)
@click.pass_obj
@_library_errors
def report(
    cfg: DictConfig,
    table: str,
    max_rank: int | None,
    output_format: str,
    speculative: bool,
) -> None:
    """Print a table of closed forms, or of values derived from them."""
    rows = _report_rows(
        table=table,
        max_rank=cfg.max_rank if max_rank is None else max_rank,
        speculative=speculative,
    )
    _emit_rows(rows, output_format=output_format)


if __name__ == "__main__":
    cli()
