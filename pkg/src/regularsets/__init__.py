"""Regular sets of Cayley graphs on finite groups.

Decide whether a normal subgroup ``H`` of a finite group ``G`` is a
(kappa, tau)-regular set of some Cayley graph on ``G``, build a connection set
that witnesses it, and check everything against brute force.
"""

from .cosets import CosetDecomposition, involution_profile, left_cosets
from .errors import *  # noqa: F401,F403
from .group import (
    ElementSet,
    Group,
    Subgroup,
    builtin_group,
    element_order,
    group_from_spec,
    is_involution,
    is_normal,
    list_normal_subgroups,
    list_subgroups,
    make_group_from_table,
    subgroup_from,
)
from .oracle import (
    ConnectionSet,
    VerificationReport,
    connection_set,
    exhaustive_witness_search,
    is_inverse_closed,
    regular_set_check,
)
from .perfect_code import (
    PerfectCodeCertificate,
    is_code_with_respect_to,
    perfect_code_transversal,
    satisfies_sharp_condition,
)
from .witness import (
    RegularSetCertificate,
    augment_kappa,
    build_even_tau,
    build_witness,
    build_zero_tau_odd,
    extract_perfect_code,
    strip_subgroup_part,
    valid_parameters,
)

__version__ = "0.1.0"
