from .domain import (
    ConjugateCase,
    DeformationKind,
    DeformationSpec,
    GeneralPisotParams,
    PisotSequence,
    PowerTerms,
    RootPair,
)
from .general import general_pisot_roots, power_decomposition
from .sequences import (
    TABLE1_ROWS,
    deformation_q,
    deformed_integer,
    pisot_sequence,
    pisot_trace,
    solve_quadratic,
    solve_unit_quadratic,
    table1,
)
