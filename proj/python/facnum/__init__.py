"""Exact factorization numbers of finite groups.

Groups are named by spec strings: ``abelian:p=2,type=1,2``, ``named:D8``,
``named:E:p=3``, ``named:Elem:p=2:n=4``, ``table:/path/to/cayley.txt``.
Every count comes back as a Python int; ``sd`` returns a Fraction.
"""

from ._facnum import (
    DomainError,
    InvariantError,
    ResourceError,
    ValidationError,
    canonical_spec,
    check_conjecture6,
    check_theorem5,
    f2,
    f2_corollary4,
    f2_cyclic,
    f2_E_p3,
    f2_elementary,
    f2_elementary_poly,
    f2_M_p3,
    f2_rank2,
    f2_rank2_via_eq4,
    factorizations,
    gaussian_binomial,
    group_order,
    hall_mobius,
    lattice_json,
    mobius_bottom_top,
    open_problem_table,
    sd,
    subgroup_count,
    verify,
)

__version__ = "0.1.0"
