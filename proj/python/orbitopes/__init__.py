"""Polar orbitopes of the classical compact groups.

Membership oracles via Ky Fan norms and Kostant inequalities, explicit
spectrahedral (LMI) representations, coorbitope analysis, and a
randomized verification harness. The heavy lifting lives in the C++
extension `_orbitopes_impl`.
"""

from ._orbitopes_impl import (
    OrbitopeError,
    Spec,
    conv_so_metadata,
    dominant,
    ky_fan_norm,
    load_spec,
)

__all__ = [
    "OrbitopeError",
    "Spec",
    "conv_so_metadata",
    "dominant",
    "ky_fan_norm",
    "load_spec",
]
