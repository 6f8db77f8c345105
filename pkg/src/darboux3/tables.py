"""Embedded reference tables and their recomputation.

Each table id maps to one packaged CSV of published values kept verbatim at
their printed precision.  ``verify_table`` recomputes every cell with the
library and compares at a per-cell tolerance: by default 1.5 units in the
last printed digit, with stricter fixed tolerances where the acceptance
targets demand them (spectra 1e-5, the 4-decimal momentum sweep 1e-4, the
8-decimal slack sweeps 1e-5).

Two kinds of cells never gate the pass/fail verdict: the interior-order
columns of the nine-column entropy tables (the source column header is
internally inconsistent there; only the unambiguous 0.5 and 2 columns
gate) and the second slack-vs-lambda table (its published caption
contradicts the figure it feeds; the cells are pinned and reported against
the Tsallis alpha = 2/3 slack without gating).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .model import ModelParams, effective_frequency, energy
from .position_entropy import EntropyOrder, renyi_position, tsallis_position
from .quadrature import renyi_numeric, shannon_numeric, tsallis_numeric
from .uncertainty import xi_renyi, xi_tsallis

__all__ = ["TABLE_IDS", "CellCheck", "TableReport", "load_reference", "verify_table"]


@dataclass(frozen=True)
class CellCheck:
    row: str
    col: str
    reference: float
    reference_text: str
    computed: float
    tolerance: float
    gating: bool

    @property
    def passed(self) -> bool:
        return abs(self.computed - self.reference) <= self.tolerance


@dataclass(frozen=True)
class TableReport:
    table_id: str
    cells: list[CellCheck]

    @property
    def failures(self) -> list[CellCheck]:
        return [c for c in self.cells if c.gating and not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures


def _ulp_tolerance(text: str) -> float:
    """1.5 units in the last printed digit; bare '0' means a saturation
    row pinned at 1e-7."""
    if re.fullmatch(r"0(\.0+)?", text):
        return 1e-7
    decimals = len(text.split(".")[1]) if "." in text else 0
    return 1.5 * 10.0 ** (-decimals)


def _entropy_cell(kind: str, space: str, lam: float):
    def compute(n: float, alpha: float) -> float:
        params = ModelParams(1.0, lam)
        level = int(n)
        if alpha == 1.0:
            return shannon_numeric(params, level, space)
        if space == "position" and EntropyOrder.of(alpha).analytic_eligible and alpha >= 2:
            fn = renyi_position if kind == "renyi" else tsallis_position
            return fn(params, level, int(alpha))
        fn = renyi_numeric if kind == "renyi" else tsallis_numeric
        return fn(params, level, alpha, space)

    return compute


def _xi_cell(kind: str, lam: float):
    def compute(n: float, alpha: float) -> float:
        params = ModelParams(1.0, lam)
        fn = xi_renyi if kind == "renyi" else xi_tsallis
        return fn(params, int(n), alpha).value

    return compute


def _sweep_cell(column: str):
    kind, level = column.split("_n")

    def compute(lam: float, _col: float = 0.0) -> float:
        params = ModelParams(1.0, lam)
        fn = renyi_numeric if kind == "renyi" else tsallis_numeric
        return fn(params, int(level), 2.0, "momentum")

    return compute


_GATE_EDGE_ALPHAS = (0.5, 2.0)


@dataclass(frozen=True)
class _TableDef:
    filename: str
    compute: object  # compute(row_value, col_value_or_name) -> float
    fixed_tolerance: float | None = None
    gate_columns: tuple | None = None  # None: all columns gate
    gating: bool = True
    columns_are_names: bool = False


def _defs() -> dict[str, _TableDef]:
    defs: dict[str, _TableDef] = {
        "energy": _TableDef(
            "energy.csv",
            lambda lam, n: energy(ModelParams(1.0, lam), int(n)),
            fixed_tolerance=1e-5,
        ),
        "omega": _TableDef(
            "omega.csv",
            lambda lam, n: effective_frequency(ModelParams(1.0, lam), int(n)),
            fixed_tolerance=1e-5,
        ),
        "mom_vs_lambda": _TableDef(
            "momentum_vs_lambda.csv",
            lambda lam, col: _sweep_cell(col)(lam),
            fixed_tolerance=1e-4,
            columns_are_names=True,
        ),
        "xi_vs_lambda_a": _TableDef(
            "xi_renyi_vs_lambda.csv",
            lambda lam, n: xi_renyi(ModelParams(1.0, lam), int(n), 2.0).value,
            fixed_tolerance=1e-5,
        ),
        "xi_vs_lambda_b": _TableDef(
            "xi_vs_lambda_b.csv",
            lambda lam, n: xi_tsallis(ModelParams(1.0, lam), int(n), 2.0 / 3.0).value,
            fixed_tolerance=1e-5,
            gating=False,
        ),
    }
    for kind in ("renyi", "tsallis"):
        for tag, space in (("pos", "position"), ("mom", "momentum")):
            for suffix, lam in (("h", 0.0), ("d", 0.4)):
                system = "harmonic" if suffix == "h" else "darboux"
                defs[f"{kind}_{tag}_{suffix}"] = _TableDef(
                    f"{kind}_{tag}_{system}.csv",
                    _entropy_cell(kind, space, lam),
                    fixed_tolerance=1.5e-3,
                    gate_columns=_GATE_EDGE_ALPHAS,
                )
    for kind in ("renyi", "tsallis"):
        for suffix, lam in (("h", 0.0), ("d", 0.4)):
            system = "harmonic" if suffix == "h" else "darboux"
            defs[f"xi_{kind}_{suffix}"] = _TableDef(
                f"xi_{kind}_{system}.csv", _xi_cell(kind, lam)
            )
    return defs


_TABLES = _defs()
TABLE_IDS = tuple(_TABLES)


def load_reference(table_id: str):
    """(column labels, rows) of the packaged reference CSV; cells as text."""
    spec = _TABLES[table_id]
    path = resources.files("darboux3").joinpath("reference", spec.filename)
    header = None
    rows = []
    for line in path.read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        cells = line.split(",")
        if header is None:
            header = cells
        else:
            rows.append(cells)
    return header, rows


def verify_table(table_id: str, tolerance_override: float | None = None) -> TableReport:
    """Recompute every cell of a reference table and compare."""
    if table_id not in _TABLES:
        raise KeyError(f"unknown table id {table_id!r}; known: {', '.join(TABLE_IDS)}")
    spec = _TABLES[table_id]
    header, rows = load_reference(table_id)
    cells: list[CellCheck] = []
    for row in rows:
        row_val = float(row[0])
        for col_name, text in zip(header[1:], row[1:]):
            col = col_name if spec.columns_are_names else float(col_name)
            computed = spec.compute(row_val, col)
            if tolerance_override is not None:
                tol = tolerance_override
            elif spec.fixed_tolerance is not None:
                tol = spec.fixed_tolerance
            else:
                tol = _ulp_tolerance(text)
            gating = spec.gating and (
                spec.gate_columns is None or float(col_name) in spec.gate_columns
            )
            cells.append(
                CellCheck(
                    row=row[0],
                    col=col_name,
                    reference=float(text),
                    reference_text=text,
                    computed=computed,
                    tolerance=tol,
                    gating=gating,
                )
            )
    return TableReport(table_id=table_id, cells=cells)
