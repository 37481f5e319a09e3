"""
Dataset writers: CSV with a '#' metadata preamble, JSON, gnuplot scripts.

Output is a pure function of the dataset: floats are written with repr,
metadata keys are sorted and the runtime is left out unless requested.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

from pisotcs.shared.utils.logging import get_component_logger

from .domain import Dataset

logger = get_component_logger("cli")

RUNTIME_KEY = "runtime"


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _metadata(dataset: Dataset, with_runtime: bool) -> Dict[str, Any]:
    meta = dict(dataset.metadata)
    if not with_runtime:
        meta.pop(RUNTIME_KEY, None)
    return meta


def to_csv(dataset: Dataset, with_runtime: bool = False) -> str:
    buffer = io.StringIO()
    for key, value in sorted(_metadata(dataset, with_runtime).items()):
        buffer.write(f"# {key}: {format_value(value)}\n")

    writer = csv.writer(buffer, lineterminator="\n")
    names = list(dataset.columns)
    writer.writerow(names)
    for row in zip(*(dataset.columns[name] for name in names)):
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def to_json(dataset: Dataset, with_runtime: bool = False) -> str:
    payload = {
        "target": dataset.target,
        "metadata": _metadata(dataset, with_runtime),
        "columns": [{"name": name, "values": values} for name, values in dataset.columns.items()],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def plot_script(dataset: Dataset, data_path: Path) -> str:
    """gnuplot script plotting every column against the first one."""
    names = list(dataset.columns)
    lines = [
        "set datafile separator ','",
        "set key autotitle columnhead",
        f"set xlabel '{names[0]}'",
        f"set title '{dataset.target}'",
    ]
    plots = [f"'{data_path.name}' using 1:{i + 1} with lines" for i in range(1, len(names))]
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def write_dataset(
    dataset: Dataset,
    out: Optional[Path] = None,
    fmt: str = "csv",
    emit_plot: bool = False,
    with_runtime: bool = False,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Write a dataset to `out`, or to `stream` (default stdout) when out is None.

    The plot script lands next to the data file as <out>.gp and needs a
    CSV file to refer to.
    """
    text = to_csv(dataset, with_runtime) if fmt == "csv" else to_json(dataset, with_runtime)

    if out is None:
        (stream or sys.stdout).write(text)
    else:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        logger.info(f"wrote {dataset.n_rows} rows to {out}")

    if emit_plot:
        if out is None or fmt != "csv":
            logger.warning("--emit-plot needs --out with csv format; no plot script written")
            return
        script = out.with_suffix(".gp")
        script.write_text(plot_script(dataset, out), encoding="utf-8")
        logger.info(f"wrote plot script {script}")
