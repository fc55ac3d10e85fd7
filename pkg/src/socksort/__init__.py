"""Foot-sorting for sock orderings: machines, certificates, deciders, harnesses."""

from .core import (
    BudgetExceeded,
    ParseError,
    PATTERN_AABB,
    PATTERN_ABA,
    SockOrdering,
    canonicalize,
    contains,
    enumerate_orderings,
    is_sorted,
    parse,
    standardize,
    word_contains,
)
from .foot import (
    Certificate,
    ImageResult,
    InvalidCertificateError,
    Move,
    certificate_from_dyck,
    dyck_encode,
    foot_image,
    foot_preimage,
    replay,
    transform_certificate,
)
from .sortability import (
    brute_force_oracle,
    is_foot_sortable,
    is_foot_sortable_via_relabeling,
)
from .multifoot import (
    CertificateT,
    MoveT,
    feet_needed,
    is_t_foot_sortable,
    r_of_n,
    stratified,
    t_foot_image,
    t_replay,
    tarjan_sort,
)
from .alignment_free import (
    count_foot_sortable_af,
    forbidden_patterns,
    is_alignment_free,
    is_spread_out,
    rho_of,
    sigma_of,
    spread_out_sorter,
)

__all__ = [
    "CertificateT",
    "MoveT",
    "count_foot_sortable_af",
    "feet_needed",
    "forbidden_patterns",
    "is_alignment_free",
    "is_spread_out",
    "is_t_foot_sortable",
    "r_of_n",
    "rho_of",
    "sigma_of",
    "spread_out_sorter",
    "stratified",
    "t_foot_image",
    "t_replay",
    "tarjan_sort",
    "BudgetExceeded",
    "Certificate",
    "ImageResult",
    "InvalidCertificateError",
    "Move",
    "ParseError",
    "PATTERN_AABB",
    "PATTERN_ABA",
    "SockOrdering",
    "brute_force_oracle",
    "canonicalize",
    "certificate_from_dyck",
    "contains",
    "dyck_encode",
    "enumerate_orderings",
    "foot_image",
    "foot_preimage",
    "is_foot_sortable",
    "is_foot_sortable_via_relabeling",
    "is_sorted",
    "parse",
    "replay",
    "standardize",
    "transform_certificate",
    "word_contains",
]
