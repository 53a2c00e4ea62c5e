"""Parameter sweeps over the state families, one record per grid point."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .correlations import correlation_report, classify_family
from .discord import OptimizerConfig, symmetric_discord
from .linalg import DomainError
from .states import bell_family_eps, horodecki_general

COLUMNS = ["param", "S_theta", "S_rho", "S_sigma", "I", "D", "ppt_margin", "label"]
DISCORD_COLUMNS = ["discord_sym", "restarts_used"]


@dataclass(frozen=True)
class SweepRecord:
    param: float
    S_theta: float
    S_rho: float
    S_sigma: float
    I: float
    D: float
    ppt_margin: float
    label: str
    discord_sym: float | None = None
    restarts_used: int | None = None


def family_state(family: str, d: int, param: float) -> np.ndarray:
    if family == "horodecki":
        return horodecki_general(d, param)
    if family == "bell-eps":
        if d != 3:
            raise DomainError("the epsilon family is defined for d = 3 only")
        return bell_family_eps(param)
    raise DomainError(f"unknown family {family!r}; expected 'horodecki' or 'bell-eps'")


def grid(lo: float, hi: float, steps: int, log: bool = False) -> np.ndarray:
    if steps < 2:
        raise DomainError("steps must be at least 2")
    if log:
        if lo <= 0 or hi <= 0:
            raise DomainError("log-spaced grids need positive endpoints")
        return 10.0 ** np.linspace(np.log10(lo), np.log10(hi), steps)
    return np.linspace(lo, hi, steps)


def sweep_point(family: str, d: int, param: float, cfg: OptimizerConfig | None = None) -> SweepRecord:
    theta = family_state(family, d, param)
    rep = correlation_report(theta, (d, d))
    label = classify_family(family, d, param)
    extra = {}
    if cfg is not None:
        extra = {"discord_sym": symmetric_discord(theta, cfg, (d, d)), "restarts_used": cfg.restarts}
    return SweepRecord(
        param=float(param),
        S_theta=rep.S_theta,
        S_rho=rep.S_rho,
        S_sigma=rep.S_sigma,
        I=rep.I,
        D=rep.D,
        ppt_margin=rep.ppt_margin,
        label=label,
        **extra,
    )


def run_sweep(
    family: str,
    d: int,
    lo: float,
    hi: float,
    steps: int,
    log: bool = False,
    cfg: OptimizerConfig | None = None,
) -> list[SweepRecord]:
    """Records in ascending parameter order; ``cfg`` switches on the discord columns."""
    # validate the whole domain before doing any work
    params = grid(lo, hi, steps, log)
    for p in (params[0], params[-1]):
        family_state(family, d, p)
    return [sweep_point(family, d, p, cfg) for p in params]


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


def records_to_csv(records: list[SweepRecord], with_discord: bool = False) -> str:
    cols = COLUMNS + (DISCORD_COLUMNS if with_discord else [])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for rec in records:
        writer.writerow([_fmt(getattr(rec, c)) for c in cols])
    return buf.getvalue()
