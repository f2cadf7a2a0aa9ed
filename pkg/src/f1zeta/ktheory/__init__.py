from .gl import GeneralLinearGroup, MonomialMatrix, gl_n
from .kplus import k_plus, stable_stems
from .modules import (
    ModuleMap,
    PointedModule,
    cokernel,
    components,
    find_isomorphism,
    free_module,
    is_isomorphic,
    kernel,
    pullback,
    strong_exact_check,
    wedge,
    zero_module,
)
from .projectives import K0Result, ProjectiveInventory, enumerate_projectives, k0_q
from .qspan import QSpan, canonical, identity_span, q_compose, spans_equal
