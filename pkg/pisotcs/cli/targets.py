"""
Figure and table targets.

Each target turns a FigureRequest into columns plus metadata; grid points
are evaluated through the ordered mapper handed in by the runner.
"""

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from pisotcs.client.config import get_config
from pisotcs.csquant import (
    FockModel,
    angle_lower_symbol,
    build_model,
    d_coefficients,
    dispersions,
    evolve_lower_symbol,
    factorial_ratio,
    phase_density,
    photon_statistics,
    probabilities,
)
from pisotcs.moment import g_density, generalized_factorial, w_density
from pisotcs.pisot_core import TABLE1_ROWS, DeformationSpec, pisot_sequence, table1
from pisotcs.qcalc import q_gamma, sym_exp
from pisotcs.shared.errors import InvalidSpec

from .domain import FigureRequest, QSpecifier

Mapper = Callable[[Callable[[Any], Any], Iterable[Any]], List[Any]]
Columns = Dict[str, List[Any]]
Result = Tuple[Columns, Dict[str, Any]]

PISOT_Q = ("s:3", "s:4", "s:5")
FERMIONIC_Q = ("f:1", "f:2")


@dataclass(frozen=True)
class Target:
    """A reproducible figure or table."""
    name: str
    reference: str
    figure: str
    build: Callable[[FigureRequest, Mapper], Result]
    default_q: Tuple[str, ...] = PISOT_Q
    default_grid: Optional[str] = None
    default_z: Tuple[complex, ...] = ()
    default_k: Tuple[int, ...] = ()
    fermionic: bool = False


def _surd(spec: DeformationSpec) -> str:
    """Conjugate root (s - sqrt(s^2 - 4r)) / 2 written as a surd."""
    s, d = spec.s, spec.discriminant
    if s % 2 == 0 and d % 4 == 0:
        return f"{s // 2}-sqrt{d // 4}"
    return f"({s}-sqrt{d})/2"


def _models(request: FigureRequest, z_max: Optional[float] = None) -> List[Tuple[QSpecifier, FockModel]]:
    return [(spec, build_model(spec.source, z_max=z_max)) for spec in request.q_list]


def _model_metadata(models: Sequence[Tuple[QSpecifier, FockModel]]) -> Dict[str, Any]:
    return {
        "q": ";".join(repr(model.q) for _, model in models),
        "s": ";".join(str(spec.s) if spec.s is not None else "-" for spec, _ in models),
        "N_max": ";".join(str(model.n_max) for _, model in models),
        "tol": get_config().tol,
    }


def _q_metadata(request: FigureRequest) -> Dict[str, Any]:
    return {
        "q": ";".join(repr(spec.q) for spec in request.q_list),
        "s": ";".join(str(spec.s) if spec.s is not None else "-" for spec in request.q_list),
        "tol": get_config().tol,
    }


def _radii(request: FigureRequest) -> List[float]:
    return [abs(z) for z in request.z_list]


def _require_deformed(spec: QSpecifier, target: str) -> None:
    if spec.q == 1.0:
        raise InvalidSpec(f"{target} needs q < 1, got {spec.text}")


def build_table1(request: FigureRequest, mapper: Mapper) -> Result:
    n_max = int(request.grid.stop) if request.grid else 11
    rows = table1(n_max)
    columns: Columns = {"n": list(range(1, n_max + 1))}
    columns.update(rows)
    metadata = {
        "N_max": n_max,
        "q": ";".join(_surd(spec) for _, spec, _ in TABLE1_ROWS),
        "s": ";".join(str(spec.s) for _, spec, _ in TABLE1_ROWS),
        "tol": "exact",
    }
    return columns, metadata


def _exact_factorials(spec: QSpecifier, nu: np.ndarray) -> List[float]:
    """x_n! = u_1 ... u_n of a Pisot sequence, defined at integer n only."""
    n = np.rint(nu)
    if np.any(np.abs(nu - n) > 1e-9) or np.any(n < 0):
        raise InvalidSpec(f"factorials of {spec.text} need a grid of nonnegative integers")
    n = n.astype(int)
    seq = pisot_sequence(spec.spec, max(int(n.max()), 1))
    return [float(seq.factorials[k]) for k in n]


def build_factorials(request: FigureRequest, mapper: Mapper) -> Result:
    nu = request.grid.values()
    columns: Columns = {"nu": nu.tolist()}
    for spec in request.q_list:
        if spec.fermionic:
            columns[spec.label] = _exact_factorials(spec, nu)
        else:
            columns[spec.label] = mapper(lambda v, q=spec.q: generalized_factorial(q, float(v)), nu)
    return columns, _q_metadata(request)


def _exp_builder(kind: str) -> Callable[[FigureRequest, Mapper], Result]:
    def build(request: FigureRequest, mapper: Mapper) -> Result:
        x = request.grid.values()
        columns: Columns = {"x": x.tolist()}
        for spec in request.q_list:
            columns[spec.label] = mapper(lambda v, q=spec.q: float(sym_exp(kind, q, float(v))), x)
        return columns, _q_metadata(request)

    return build


def build_qgamma(request: FigureRequest, mapper: Mapper) -> Result:
    t = request.grid.values()
    columns: Columns = {"t": t.tolist()}
    for spec in request.q_list:
        columns[spec.label] = mapper(lambda v, q=spec.q: q_gamma(q, float(v)), t)
        columns[f"{spec.label}_sq"] = mapper(lambda v, q=spec.q: q_gamma(q * q, float(v)), t)
    return columns, _q_metadata(request)


def build_gq_density(request: FigureRequest, mapper: Mapper) -> Result:
    t = request.grid.values()
    columns: Columns = {"t": t.tolist()}
    for spec in request.q_list:
        _require_deformed(spec, "gq_density")
        columns[f"{spec.label}_g"] = np.asarray(g_density(spec.q, t)).tolist()
        columns[f"{spec.label}_w"] = np.asarray(w_density(spec.q, t)).tolist()
    return columns, _q_metadata(request)


def build_ratio_dq(request: FigureRequest, mapper: Mapper) -> Result:
    n = [int(round(v)) for v in request.grid.values()]
    models = _models(request)
    columns: Columns = {"n": n}
    for spec, model in models:
        columns[spec.label] = [factorial_ratio(model, k) for k in n]
    return columns, _model_metadata(models)


def build_normalization(request: FigureRequest, mapper: Mapper) -> Result:
    t = request.grid.values()
    models = _models(request, z_max=math.sqrt(max(t.max(), 0.0)))
    columns: Columns = {"t": t.tolist()}
    for spec, model in models:
        columns[spec.label] = [model.normalization(float(v)) for v in t]
    return columns, _model_metadata(models)


def build_poisson(request: FigureRequest, mapper: Mapper) -> Result:
    n = [int(round(v)) for v in request.grid.values()]
    radii = _radii(request)
    models = _models(request, z_max=max(radii))
    columns: Columns = {"n": n}
    for spec, model in models:
        for r in radii:
            rho = probabilities(model, r)
            columns[f"{spec.label}_z{r:g}"] = [float(rho[k]) if k <= model.n_max else 0.0 for k in n]
    return columns, _model_metadata(models)


def _radial_sweep(metric: Callable[[FockModel, float], float]) -> Callable[[FigureRequest, Mapper], Result]:
    def build(request: FigureRequest, mapper: Mapper) -> Result:
        r = request.grid.values()
        models = _models(request, z_max=float(np.abs(r).max()))
        columns: Columns = {"r": r.tolist()}
        for spec, model in models:
            columns[spec.label] = mapper(lambda v, m=model: metric(m, float(v)), r)
        return columns, _model_metadata(models)

    return build


def build_characteristic(request: FigureRequest, mapper: Mapper) -> Result:
    n_max = int(request.grid.stop) if request.grid else 20
    models = _models(request)
    columns: Columns = {"n": list(range(1, n_max + 1))}
    for spec, model in models:
        columns[spec.label] = photon_statistics(model, 0.0, n_characteristic=n_max).characteristic
    return columns, _model_metadata(models)


def build_angle_symbol(request: FigureRequest, mapper: Mapper) -> Result:
    theta = request.grid.values()
    radii = _radii(request)
    models = _models(request, z_max=max(radii))
    columns: Columns = {"theta": theta.tolist()}
    for spec, model in models:
        symbols = mapper(lambda r, m=model: angle_lower_symbol(m, r, theta), radii)
        for r, values in zip(radii, symbols):
            columns[f"{spec.label}_r{r:g}"] = values.tolist()
    return columns, _model_metadata(models)


def build_dkr(request: FigureRequest, mapper: Mapper) -> Result:
    r = request.grid.values()
    k_list = request.k_list
    models = _models(request, z_max=float(r.max()))
    columns: Columns = {"r": r.tolist()}
    for spec, model in models:
        d = mapper(lambda v, m=model: d_coefficients(m, float(v), max(k_list)), r)
        for k in k_list:
            columns[f"{spec.label}_k{k}"] = [float(row[k]) for row in d]
    return columns, _model_metadata(models)


def build_trajectory(request: FigureRequest, mapper: Mapper) -> Result:
    t = request.grid.values()
    z = request.z_list[0]
    models = _models(request, z_max=abs(z))
    columns: Columns = {"t": t.tolist()}
    for spec, model in models:
        path = mapper(lambda v, m=model: evolve_lower_symbol(m, z, float(v)), t)
        columns[f"{spec.label}_re"] = [w.real for w in path]
        columns[f"{spec.label}_im"] = [w.imag for w in path]
    metadata = _model_metadata(models)
    metadata["z"] = repr(z)
    return columns, metadata


def build_phase_density(request: FigureRequest, mapper: Mapper) -> Result:
    axis = request.grid.values()
    points = [complex(re, im) for im in axis for re in axis]
    z_max = max(abs(request.z0), max(abs(p) for p in points))
    models = _models(request, z_max=z_max)
    columns: Columns = {"re": [p.real for p in points], "im": [p.imag for p in points]}
    for spec, model in models:
        columns[spec.label] = mapper(
            lambda p, m=model: phase_density(m, request.z0, p, request.time), points
        )
    metadata = _model_metadata(models)
    metadata["z0"] = repr(request.z0)
    metadata["time"] = request.time
    return columns, metadata


TARGETS: Dict[str, Target] = {
    t.name: t
    for t in (
        Target("table1", "Table 1", "table of quadratic Pisot sequences", build_table1,
               default_q=("s:3",), fermionic=True),
        Target("factorials", "Fig. 1", "Pisot factorials x_n! against n", build_factorials,
               default_q=FERMIONIC_Q + PISOT_Q + ("1",), default_grid="0:10:11", fermionic=True),
        Target("exp_e", "Fig. 2", "symmetric exponential frak_e_q", _exp_builder("e"),
               default_q=PISOT_Q + ("1",), default_grid="-3:3:121"),
        Target("exp_E", "Fig. 3", "symmetric exponential frak_E_q", _exp_builder("E"),
               default_q=PISOT_Q + ("1",), default_grid="-3:3:121"),
        Target("qgamma", "Fig. 4", "q-gamma functions Gamma_q and Gamma_q^2", build_qgamma,
               default_q=PISOT_Q + ("1",), default_grid="0.1:5:99"),
        Target("gq_density", "Fig. 5", "log-normal factor g_q and moment weight w_q", build_gq_density,
               default_grid="0.01:10:200"),
        Target("ratio_dq", "Fig. 6a", "factorial ratio x_n!/n!", build_ratio_dq,
               default_q=PISOT_Q + ("1",), default_grid="0:20:21"),
        Target("normalization", "Fig. 6b", "coherent-state normalization N_q(t)", build_normalization,
               default_q=PISOT_Q + ("1",), default_grid="0:36:73"),
        Target("poisson", "Fig. 7", "Poisson-like photon distribution", build_poisson,
               default_q=PISOT_Q + ("1",), default_grid="0:30:31", default_z=(1.0, 2.0, 4.0)),
        Target("mandel", "Fig. 8", "Mandel parameter against |z|", _radial_sweep(
            lambda m, r: photon_statistics(m, r).mandel), default_grid="0:4:81"),
        Target("variance", "Fig. 9", "quadrature dispersion against |z|", _radial_sweep(
            lambda m, r: dispersions(m, r).var_q), default_q=PISOT_Q + ("1",), default_grid="0:4:81"),
        Target("characteristic", "Fig. 10", "characteristic functional rho_q(n)", build_characteristic,
               default_q=PISOT_Q + ("1",), default_grid="1:20:20"),
        Target("snr", "Fig. 11", "signal-to-quantum-noise ratio", _radial_sweep(
            lambda m, r: photon_statistics(m, r).snr), default_q=PISOT_Q + ("1",), default_grid="0:4:81"),
        Target("angle_symbol", "Figs. 12-14", "lower symbol of the angle operator", build_angle_symbol,
               default_grid=f"0:{2 * math.pi!r}:201", default_z=(0.5, 1.0, 2.0)),
        Target("dkr", "Figs. 15-16", "angle coefficients d_k(r)", build_dkr, default_q=PISOT_Q + ("1",),
               default_grid="0:10:101", default_k=(1, 2, 3, 4)),
        Target("trajectory", "Figs. 17-18, 21-22", "time-evolved lower symbol of a", build_trajectory,
               default_q=("s:3", "val:0.7071067811865476"),
               default_grid=f"0:{8 * math.pi!r}:801", default_z=(1.0,)),
        Target("phase_density", "Figs. 19-20", "phase-space probability density", build_phase_density,
               default_grid="-3:3:61"),
    )
}
