"""Partition bijections, family enumeration and identity verification."""

from ._core import (
    cardinality,
    conjugate,
    contains,
    delta,
    delta_inv,
    delta_trace,
    enumerate_family,
    format_partition,
    parse_partition,
    phi,
    phi_inv,
    psi,
    psi_inv,
    statistics,
    two_modular_conjugate,
    varphi,
    varphi_inv,
    verify,
)

__all__ = [
    "cardinality",
    "conjugate",
    "contains",
    "delta",
    "delta_inv",
    "delta_trace",
    "enumerate_family",
    "format_partition",
    "parse_partition",
    "phi",
    "phi_inv",
    "psi",
    "psi_inv",
    "statistics",
    "two_modular_conjugate",
    "varphi",
    "varphi_inv",
    "verify",
]
