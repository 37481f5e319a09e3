import time
from typing import Any, Callable, Iterable, List, Optional, Sequence

import joblib

from pisotcs.client.config import get_config
from pisotcs.shared.errors import InvalidSpec
from pisotcs.shared.utils.logging import get_component_logger

from .domain import Dataset, FigureRequest, GridSpec, QSpecifier
from .targets import TARGETS, Target

logger = get_component_logger("cli")


def ordered_map(fn: Callable[[Any], Any], items: Iterable[Any], workers: Optional[int] = None) -> List[Any]:
    """Evaluate fn over items on a joblib thread pool; results keep the input order."""
    items = list(items)
    workers = get_config().workers if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    return joblib.Parallel(n_jobs=min(workers, len(items)), prefer="threads")(
        joblib.delayed(fn)(item) for item in items
    )


def get_target(name: str) -> Target:
    if name not in TARGETS:
        raise InvalidSpec(f"unknown target {name!r}")
    return TARGETS[name]


def list_targets() -> str:
    """One line per target: name, figure reference, what it reproduces, default q specifiers."""
    width = max(len(name) for name in TARGETS)
    ref_width = max(len(target.reference) for target in TARGETS.values())
    lines = [
        f"{target.name:<{width}}  {target.reference:<{ref_width}}  {target.figure}"
        f"  [q: {', '.join(target.default_q)}]"
        for target in TARGETS.values()
    ]
    return "\n".join(lines) + "\n"


def make_request(
    target: str,
    q: Sequence[str] = (),
    z: Sequence[complex] = (),
    k: Sequence[int] = (),
    grid: Optional[str] = None,
    **options: Any,
) -> FigureRequest:
    """
    Build a FigureRequest, filling unset parameters from the target defaults.

    Raises:
        InvalidSpec: For unknown targets, malformed parameters or fermionic
            specifiers on targets built on the symmetric spectrum
    """
    info = get_target(target)
    q_list = [QSpecifier.parse(text) for text in (q or info.default_q)]
    if not info.fermionic:
        refused = [spec.text for spec in q_list if spec.fermionic]
        if refused:
            raise InvalidSpec(f"{target} needs symmetric or real q, got {', '.join(refused)}")
    grid_text = grid or info.default_grid
    return FigureRequest(
        target=target,
        q_list=q_list,
        z_list=list(z or info.default_z),
        k_list=list(k or info.default_k),
        grid=GridSpec.parse(grid_text) if grid_text else None,
        **options,
    )


def run(request: FigureRequest, workers: Optional[int] = None) -> Dataset:
    """
    Evaluate a target.

    Raises:
        InvalidSpec: For unknown targets or invalid parameters
        NonConvergent: If a numerical evaluation fails
    """
    target = get_target(request.target)
    logger.info(f"running {target.name} for q = {', '.join(s.text for s in request.q_list)}")

    started = time.perf_counter()
    columns, metadata = target.build(request, lambda fn, items: ordered_map(fn, items, workers))
    elapsed = time.perf_counter() - started

    metadata = {**metadata, "target": target.name, "runtime": round(elapsed, 3)}
    logger.info(f"{target.name} finished in {elapsed:.2f} s")
    return Dataset(target=target.name, columns=columns, metadata=metadata)
