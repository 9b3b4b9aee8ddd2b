"""Command-line front end.

Subcommands::

    chromabound constants                 # base constants and references
    chromabound bound --m 2 --k 1         # one lower-bound cell
    chromabound table --m-max 5 --k-max 4 # the full grid
    chromabound lattice-mu --lattice e8   # double-cap quantities
    chromabound verify --suite all        # invariant suites

Output formats: plain (default), json, csv.  A key=value config file
(``--config``) can preset ``tol``, ``K`` and ``format``; explicit flags
win.  The environment variable CHROMABOUND_THREADS caps internal
parallelism (table cells); output ordering never depends on it.

Exit status: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from typing import Dict, Optional, Sequence

import click

from . import __version__
from .bound_engine import BoundQuery, chromatic_lower_bound, kupavskii_upper_base, table
from .lattice_theta import (
    INV_SQRT_2,
    SQRT3_OVER_2,
    MuResult,
    TailBoundError,
    dn_series,
    double_cap_compare,
    e8_series,
    leech_series,
    mu_lattice,
    mu_z,
)
from .special_functions import gamma_chi
from .verify import SUITES, run_suites

_FORMATS = ("plain", "json", "csv")
_DEFAULT_TOL = 1e-9
_DEFAULT_K = 512


def _thread_cap() -> int:
    raw = os.environ.get("CHROMABOUND_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise click.UsageError("CHROMABOUND_THREADS must be a positive integer")
    return value


def _load_config(path: Optional[str]) -> Dict[str, str]:
    if path is None:
        return {}
    settings: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise click.UsageError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            settings[key.strip()] = value.strip()
    return settings


def _resolve_tol(flag: Optional[float], cfg: Dict[str, str]) -> float:
    if flag is not None:
        tol = flag
    elif "tol" in cfg:
        try:
            tol = float(cfg["tol"])
        except ValueError:
            raise click.UsageError(f"config tol is not a number: {cfg['tol']}")
    else:
        tol = _DEFAULT_TOL
    if tol <= 0:
        raise click.UsageError("tol must be positive")
    return tol


def _resolve_k(flag: Optional[int], cfg: Dict[str, str]) -> int:
    if flag is not None:
        return flag
    if "K" in cfg:
        try:
            return int(cfg["K"])
        except ValueError:
            raise click.UsageError(f"config K is not an integer: {cfg['K']}")
    return _DEFAULT_K


def _resolve_format(flag: Optional[str], cfg: Dict[str, str]) -> str:
    fmt = flag or cfg.get("format") or "plain"
    if fmt not in _FORMATS:
        raise click.UsageError(f"unknown format {fmt!r}; choose from {_FORMATS}")
    return fmt


def _render_records(
    records: Sequence[Dict[str, object]], fmt: str, tol: float, command: str
) -> str:
    if fmt == "json":
        doc: Dict[str, object] = {"command": command, "tol": tol}
        if len(records) == 1:
            doc.update(records[0])
        else:
            doc["results"] = list(records)
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = list(records[0].keys())
        writer.writerow(header)
        for rec in records:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in rec.values()])
        return buf.getvalue()
    width = max(len(k) for rec in records for k in rec)
    lines = [f"# {command}  (tol = {tol!r})"]
    for i, rec in enumerate(records):
        if i:
            lines.append("")
        for key, value in rec.items():
            shown = repr(value) if isinstance(value, float) else value
            lines.append(f"{key:<{width}} = {shown}")
    return "\n".join(lines) + "\n"


def _render_table_plain(records: Sequence[Dict[str, object]], tol: float) -> str:
    header = list(records[0].keys())
    rows = [
        [repr(v) if isinstance(v, float) else str(v) for v in rec.values()]
        for rec in records
    ]
    widths = [
        max(len(header[i]), max(len(row[i]) for row in rows))
        for i in range(len(header))
    ]
    lines = [f"# table  (tol = {tol!r})"]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)))
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines) + "\n"


def _deliver(text: str, output: Optional[str]) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        click.echo(f"wrote {output}", err=True)


@click.group()
@click.version_option(version=__version__, prog_name="chromabound")
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="key=value file presetting tol, K and format.",
)
@click.pass_context
def cli(ctx: click.Context, config: Optional[str]) -> None:
    """Bounds and verification oracles for multi-distance chromatic numbers."""
    ctx.obj = _load_config(config)


@cli.command()
@click.option("--tol", type=float, default=None, help="Solver tolerance.")
@click.option("--format", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def constants(cfg: Dict[str, str], tol: Optional[float], fmt: Optional[str], output: Optional[str]) -> None:
    """Base constant with its maximizer, plus reference constants."""
    tol = _resolve_tol(tol, cfg)
    fmt = _resolve_format(fmt, cfg)
    gc = gamma_chi(tol)
    record = {
        "gamma_chi": gc.value,
        "u_star": gc.u_star,
        "inner_max": gc.inner_max,
        "inv_sqrt_2": INV_SQRT_2,
        "sqrt3_over_2": SQRT3_OVER_2,
        "kupavskii_base_m1": kupavskii_upper_base(1),
    }
    _deliver(_render_records([record], fmt, tol, "constants"), output)


@cli.command()
@click.option("--m", "m", type=int, required=True, help="Number of forbidden distances.")
@click.option("--k", "k", type=int, required=True, help="Clique parameter.")
@click.option("--tol", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def bound(
    cfg: Dict[str, str],
    m: int,
    k: int,
    tol: Optional[float],
    fmt: Optional[str],
    output: Optional[str],
) -> None:
    """Lower bound for one (m, k) cell."""
    if m < 1 or k < 1:
        raise click.UsageError("m and k must be positive integers")
    tol = _resolve_tol(tol, cfg)
    fmt = _resolve_format(fmt, cfg)
    result = chromatic_lower_bound(BoundQuery(m=m, k=k), tol)
    record = result.to_dict()
    if result.warning:
        if fmt == "json":
            record["warning"] = result.warning
        else:
            click.echo(f"warning: {result.warning}", err=True)
    _deliver(_render_records([record], fmt, tol, "bound"), output)


@cli.command(name="table")
@click.option("--m-max", type=int, required=True)
@click.option("--k-max", type=int, required=True)
@click.option("--tol", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def table_cmd(
    cfg: Dict[str, str],
    m_max: int,
    k_max: int,
    tol: Optional[float],
    fmt: Optional[str],
    output: Optional[str],
) -> None:
    """Full lower-bound grid, m ascending then k ascending."""
    if m_max < 1 or k_max < 1:
        raise click.UsageError("m-max and k-max must be positive integers")
    tol = _resolve_tol(tol, cfg)
    fmt = _resolve_format(fmt, cfg)
    results = table(m_max, k_max, tol, max_workers=_thread_cap())
    records = [r.to_dict() for r in results]
    if fmt == "plain":
        _deliver(_render_table_plain(records, tol), output)
    else:
        _deliver(_render_records(records, fmt, tol, "table"), output)


def _mu_for_label(label: str, K: int, tol: float) -> MuResult:
    if label == "zn":
        return mu_z(tol)
    if label == "e8":
        return mu_lattice(e8_series(K), tol)
    if label == "leech":
        return mu_lattice(leech_series(K), tol)
    if label.startswith("dn:"):
        try:
            n = int(label.split(":", 1)[1])
        except ValueError:
            raise click.UsageError(f"bad lattice label {label!r}")
        if n < 1:
            raise click.UsageError("dn:<n> needs a positive n")
        return mu_lattice(dn_series(n, K), tol)
    raise click.UsageError(
        f"unknown lattice {label!r}; use zn, dn:<n>, e8 or leech"
    )


@cli.command(name="lattice-mu")
@click.option("--lattice", "label", required=True, help="zn, dn:<n>, e8 or leech.")
@click.option("--K", "series_k", type=int, default=None, help="Series truncation index.")
@click.option("--tol", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(_FORMATS), default=None)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def lattice_mu(
    cfg: Dict[str, str],
    label: str,
    series_k: Optional[int],
    tol: Optional[float],
    fmt: Optional[str],
    output: Optional[str],
) -> None:
    """Double-cap quantity mu for a named lattice."""
    tol = _resolve_tol(tol, cfg)
    fmt = _resolve_format(fmt, cfg)
    K = _resolve_k(series_k, cfg)
    if K < 16:
        raise click.UsageError("K must be at least 16")
    try:
        result = _mu_for_label(label, K, tol)
    except TailBoundError as exc:
        raise click.ClickException(str(exc))
    record = {
        "lattice": result.lattice_label,
        "dim": result.dim,
        "K": K,
        "t_star": result.t_star,
        "mu": result.mu,
        "max_value": result.max_value,
        "tail_bound": result.tail_bound,
        "double_cap": double_cap_compare(result.mu),
    }
    _deliver(_render_records([record], fmt, tol, "lattice-mu"), output)


@cli.command(name="verify")
@click.option(
    "--suite",
    type=click.Choice(tuple(SUITES) + ("all",)),
    required=True,
    help="Which invariant suite to run.",
)
def verify_cmd(suite: str) -> None:
    """Run invariant suites; exit 0 only if every check passes."""
    names = list(SUITES) if suite == "all" else [suite]
    results = run_suites(names)
    failures = 0
    for res in results:
        if res.passed:
            click.echo(f"ok   {res.suite}.{res.name}")
        else:
            failures += 1
            click.echo(f"FAIL {res.suite}.{res.name}: {res.detail}")
    click.echo(f"{len(results) - failures}/{len(results)} checks passed")
    if failures:
        sys.exit(1)


def main() -> None:
    cli(prog_name="chromabound")


if __name__ == "__main__":
    main()
