"""Integer multiplication through transforms over primes a * 2^m + 1."""

from ._core import (
    NotFound,
    ParameterInfeasible,
    ap_scan,
    dft,
    find_all_a,
    find_prime,
    inverse_transform,
    is_prime,
    multiply,
    p_of_q,
    plan,
    transform,
)

__all__ = [
    "NotFound",
    "ParameterInfeasible",
    "ap_scan",
    "dft",
    "find_all_a",
    "find_prime",
    "inverse_transform",
    "is_prime",
    "multiply",
    "p_of_q",
    "plan",
    "transform",
]
