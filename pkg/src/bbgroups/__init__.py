"""Black-box finite group algorithms built on square roots of involution products.

Centralizer construction (the zeta map), conjugation by square roots,
double conjugation into Sylow normalizers, the TI-subgroup normalizer map,
a structure audit for groups with elementary abelian involution
centralizers, and the real-matrix polar/orthogonal-factor analogue, all
verifiable against exhaustive brute force on desk-scale groups.
"""

from .bray import (
    ClosureReport,
    ZetaDistributionReport,
    ZetaOutcome,
    centralizer_closure_check,
    centralizer_sample,
    zeta,
    zeta_distribution_audit,
)
from .cartan import (
    IsolationCertificate,
    cartan_zeta,
    connectedness_path,
    is_orthogonal,
    is_spd,
    is_symmetric,
    isolated_zeta,
    polar_decompose,
    spd_sqrt,
    strongly_isolated_check,
)
from .errors import GroupError
from .gf import FieldSpec
from .oracle import (
    DEFAULT_ENUM_CAP,
    Element,
    GroupOracle,
    MatrixOracle,
    PermOracle,
    build_backend,
    load_group_spec,
    moebius_oracle,
)
from .powertools import (
    ExponentData,
    element_order,
    extract_involution,
    has_odd_order,
    power,
    split_exponent,
    sqrt_odd,
)
from .sampler import ReplacementCell, draw, seed_cell
from .tricks import (
    BurnsideReport,
    TISubgroup,
    burnside_audit,
    conjugate_by_sqrt,
    double_conjugation,
    normalizer_map,
    sylow2_normalizer_generators,
    ti_subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "BurnsideReport",
    "ClosureReport",
    "DEFAULT_ENUM_CAP",
    "Element",
    "ExponentData",
    "FieldSpec",
    "GroupError",
    "GroupOracle",
    "IsolationCertificate",
    "MatrixOracle",
    "PermOracle",
    "ReplacementCell",
    "TISubgroup",
    "ZetaDistributionReport",
    "ZetaOutcome",
    "build_backend",
    "burnside_audit",
    "cartan_zeta",
    "centralizer_closure_check",
    "centralizer_sample",
    "conjugate_by_sqrt",
    "connectedness_path",
    "double_conjugation",
    "draw",
    "element_order",
    "extract_involution",
    "has_odd_order",
    "is_orthogonal",
    "is_spd",
    "is_symmetric",
    "isolated_zeta",
    "load_group_spec",
    "moebius_oracle",
    "normalizer_map",
    "polar_decompose",
    "power",
    "seed_cell",
    "spd_sqrt",
    "split_exponent",
    "sqrt_odd",
    "strongly_isolated_check",
    "sylow2_normalizer_generators",
    "ti_subgroup",
    "zeta",
    "zeta_distribution_audit",
]
