"""Regeneration of the relative-error tables and comparison with the
published values."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable

from .. import exact, mc
from ..asym import TailSide, pdf_asym, quantile_asym, tail_asym
from ..asym.coefficients import check_variant
from ..errors import DomainError, ParameterError
from ..params import DistParams
from .reference import PROBABILITIES, REFERENCE_TABLES, TABLE1_POINTS

TABLE_IDS = (1, 3, 4, 5)
CSV_COLUMNS = ("table_id", "mu_x", "mu_y", "rho", "n", "point", "method",
               "approx", "truth", "rel_err", "status")
OK, NA = "ok", "not-applicable"


def relative_error(approx: float, truth: float) -> float:
    """``(approx - truth) / truth``; negative when the approximation is low."""
    if truth == 0:
        raise ZeroDivisionError("relative error against a zero truth value")
    return (approx - truth) / truth


def format_sig(value: float | None) -> str:
    """Two significant figures in the style ``-8.4E-03``; ``N/A`` for None."""
    return "N/A" if value is None else f"{value:.1E}"


@dataclass(frozen=True)
class HarnessConfig:
    truth_mode: str = "quadrature"
    n_samples: int = 10 ** 6
    seed: int = 20240917
    variant: str = "legacy"  # printed coefficient forms, as in the published tables
    eval_cfg: exact.EvalConfig = field(default_factory=lambda: exact.DEFAULT_EVAL)

    def __post_init__(self):
        if self.truth_mode not in ("quadrature", "mc"):
            raise ParameterError("truth_mode must be 'quadrature' or 'mc'")
        check_variant(self.variant)


@dataclass(frozen=True)
class Row:
    table_id: int
    params: DistParams
    point: float
    method: str
    approx: float | None
    truth: float
    rel_err: float | None
    status: str
    reference: str | None = None  # published cell, None when N/A

    def csv_record(self) -> dict:
        p = self.params
        return {"table_id": self.table_id, "mu_x": p.mu_x, "mu_y": p.mu_y, "rho": p.rho,
                "n": p.n, "point": self.point, "method": self.method, "approx": self.approx,
                "truth": self.truth, "rel_err": self.rel_err, "status": self.status}


@dataclass(frozen=True)
class TableReport:
    table_id: int
    rows: tuple[Row, ...]
    config: HarnessConfig

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _num(v) for k, v in row.csv_record().items()})
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([row.csv_record() for row in self.rows], indent=1)

    def render(self) -> str:
        """Plain-text table at two significant figures, one line per row
        label as in the published layout."""
        lines = []
        by_label: dict[tuple, list[Row]] = {}
        for row in self.rows:
            p = row.params
            by_label.setdefault((p.mu_x, p.mu_y, p.rho, p.n, row.method), []).append(row)
        for (mx, my, rho, n, method), rows in by_label.items():
            label = f"({mx:g},{my:g},{rho:g},{n})"
            cells = " ".join(f"{format_sig(r.rel_err):>9}" for r in rows)
            lines.append(f"{label:<16}{method:<16}{cells}")
        return "\n".join(lines)


def _num(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.17g}"
    return v


def _params(key) -> DistParams:
    mx, my, rho, n = key
    return DistParams(mx, my, 1.0, 1.0, rho, n)


def _reference_rows(table_id: int):
    return REFERENCE_TABLES[table_id]


def _truth_quantiles(params: DistParams, cfg: HarnessConfig, index: int) -> list[float]:
    if cfg.truth_mode == "quadrature":
        return exact.quantiles_numeric(params, PROBABILITIES, cfg.eval_cfg)
    stream = mc.RandomStream(cfg.seed, index)
    return [mc.empirical_quantile(params, p, cfg.n_samples, stream).estimate
            for p in PROBABILITIES]


def _table1(cfg: HarnessConfig) -> list[Row]:
    rows = []
    for key, order, ref in _reference_rows(1):
        params = _params(key)
        for x, cell in zip(TABLE1_POINTS, ref):
            truth = exact.pdf(params, x, cfg.eval_cfg)
            approx = pdf_asym(params, x, TailSide.UPPER, order)
            rows.append(Row(1, params, x, f"order-{order}", approx, truth,
                            relative_error(approx, truth), OK, cell))
    return rows


def _tail_rows(table_id: int, entries, cfg: HarnessConfig) -> list[Row]:
    rows = []
    cache: dict[DistParams, list[float]] = {}
    for index, entry in enumerate(entries):
        key, orders, refs = entry
        params = _params(key)
        if params not in cache:
            cache[params] = _truth_quantiles(params, cfg, index)
        for order, ref in zip(orders, refs):
            for p, xq, cell in zip(PROBABILITIES, cache[params], ref):
                truth = 1.0 - p
                try:
                    approx = tail_asym(params, xq, TailSide.UPPER, order, cfg.variant)
                except DomainError:
                    rows.append(Row(table_id, params, p, f"order-{order}", None, truth,
                                    None, NA, cell))
                    continue
                rows.append(Row(table_id, params, p, f"order-{order}", approx, truth,
                                relative_error(approx, truth), OK, cell))
    return rows


def _table3(cfg):
    entries = [(key, (order,), (ref,)) for key, order, ref in _reference_rows(3)]
    return _tail_rows(3, entries, cfg)


def _table4(cfg):
    entries = [(key, (2,), (ref,)) for key, ref in _reference_rows(4)]
    return _tail_rows(4, entries, cfg)


def _table5(cfg: HarnessConfig) -> list[Row]:
    rows = []
    for index, (key, ref) in enumerate(_reference_rows(5)):
        params = _params(key)
        truths = _truth_quantiles(params, cfg, index)
        for p, truth, cell in zip(PROBABILITIES, truths, ref):
            if truth <= 0:
                rows.append(Row(5, params, p, "quantile-approx", None, truth, None, NA, cell))
                continue
            approx = quantile_asym(params, p, cfg.variant).value
            rows.append(Row(5, params, p, "quantile-approx", approx, truth,
                            relative_error(approx, truth), OK, cell))
    return rows


_BUILDERS = {1: _table1, 3: _table3, 4: _table4, 5: _table5}


def reproduce_table(table_id: int, config: HarnessConfig | None = None) -> TableReport:
    if table_id not in _BUILDERS:
        raise ParameterError(f"table_id must be one of {TABLE_IDS}")
    config = config or HarnessConfig()
    return TableReport(table_id, tuple(_BUILDERS[table_id](config)), config)


@dataclass(frozen=True)
class CellCheck:
    row: Row
    passed: bool
    reason: str


def check_against_reference(rows: Iterable[Row], rel_tol: float | None = None,
                            rel_tol_last: float | None = None, floor: float = 0.0) -> list[CellCheck]:
    """Compare reproduced cells with the published ones.

    With ``rel_tol=None`` a cell passes when, rounded to two significant
    figures, it is within one unit of the second digit of the published value.
    Otherwise it must lie within ``rel_tol`` relative (``rel_tol_last`` in the
    p = 0.9999 column) and have the published sign.  Cells whose published
    magnitude is below ``floor`` are not compared.  The not-applicable status
    must match in every case.
    """
    out = []
    for row in rows:
        ref = row.reference
        if ref is None or row.status == NA:
            ok = ref is None and row.status == NA
            out.append(CellCheck(row, ok, "N/A pattern" if ok else "N/A mismatch"))
            continue
        refv = float(ref)
        val = row.rel_err
        if rel_tol is None:
            mant, exp10 = ref.split("E")
            unit = 0.1 * 10.0 ** int(exp10)
            ok = abs(float(format_sig(val)) - refv) <= unit * (1.0 + 1e-9)
            out.append(CellCheck(row, ok, f"{format_sig(val)} vs {ref}"))
            continue
        same_sign = math.copysign(1.0, val) == math.copysign(1.0, refv)
        tol = rel_tol_last if (rel_tol_last is not None and row.point == PROBABILITIES[-1]) else rel_tol
        if abs(refv) < floor:
            out.append(CellCheck(row, True, "below magnitude floor"))
            continue
        ok = same_sign and abs(val - refv) <= tol * abs(refv)
        out.append(CellCheck(row, ok, f"{format_sig(val)} vs {ref}"))
    return out


__all__ = ["CSV_COLUMNS", "CellCheck", "HarnessConfig", "NA", "OK", "REFERENCE_TABLES", "Row",
           "TABLE_IDS", "TableReport", "check_against_reference", "format_sig",
           "relative_error", "reproduce_table"]
