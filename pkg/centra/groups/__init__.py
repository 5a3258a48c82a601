"""Finite groups as Cayley tables and their centralizer invariants."""

from .centralizers import (
    CentProfile,
    cent_profile,
    cent_set,
    center,
    centralizer_elem,
    centralizer_set,
    delta,
    is_ca_group,
    max_noncommuting_set,
    second_center,
    two_cent,
    two_cent_naive,
)
from .constructions import (
    BadAction,
    BadParameter,
    CosetCapExceeded,
    OrderMismatch,
    Presentation,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    heisenberg,
    holomorph_cyclic,
    modular_group,
    presented_group,
    psl2,
    sdp_cyclic,
    semidihedral,
    sl2,
    symmetric,
    u_group,
    v_group,
)
from .dsl import (
    Family,
    GroupSpec,
    ParseError,
    build,
    format_spec,
    parse_spec,
    spec_order,
)
from .group_core import (
    AbelianGroup,
    CentraError,
    ElementSet,
    Group,
    GroupTooSmall,
    GroupValidationError,
    NoIdentity,
    NoInverse,
    NotAPermutation,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    OrderCapExceeded,
    derived_series,
    derived_subgroup,
    from_cayley_table,
    from_permutation_generators,
    is_abelian,
    is_normal,
    is_simple,
    is_solvable,
    is_subgroup,
    quotient,
    subgroup_generated,
)
from .isomorphism import (
    Fingerprint,
    fingerprint,
    identify_in_catalog,
    is_isomorphic,
)

__all__ = [
    "AbelianGroup",
    "BadAction",
    "BadParameter",
    "CentProfile",
    "CentraError",
    "CosetCapExceeded",
    "ElementSet",
    "Family",
    "Fingerprint",
    "Group",
    "GroupSpec",
    "GroupTooSmall",
    "GroupValidationError",
    "NoIdentity",
    "NoInverse",
    "NotAPermutation",
    "NotASubgroup",
    "NotAssociative",
    "NotLatinSquare",
    "NotNormal",
    "OrderCapExceeded",
    "OrderMismatch",
    "ParseError",
    "Presentation",
    "alternating",
    "build",
    "cent_profile",
    "cent_set",
    "center",
    "centralizer_elem",
    "centralizer_set",
    "cyclic",
    "delta",
    "derived_series",
    "derived_subgroup",
    "dicyclic",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "fingerprint",
    "format_spec",
    "from_cayley_table",
    "from_permutation_generators",
    "heisenberg",
    "holomorph_cyclic",
    "identify_in_catalog",
    "is_abelian",
    "is_ca_group",
    "is_isomorphic",
    "is_normal",
    "is_simple",
    "is_solvable",
    "is_subgroup",
    "max_noncommuting_set",
    "modular_group",
    "parse_spec",
    "presented_group",
    "psl2",
    "quotient",
    "sdp_cyclic",
    "second_center",
    "semidihedral",
    "sl2",
    "spec_order",
    "subgroup_generated",
    "symmetric",
    "two_cent",
    "two_cent_naive",
    "u_group",
    "v_group",
]
