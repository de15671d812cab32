"""Partition counting tables, series identities and their verification."""

from ._partrec import (
    Series,
    compute,
    count_partitions,
    enumerate_partitions,
    expand_product,
    families,
    generator,
    parity,
    table,
    theta_series,
    verify,
)

__all__ = [
    "Series",
    "compute",
    "count_partitions",
    "enumerate_partitions",
    "expand_product",
    "families",
    "generator",
    "parity",
    "table",
    "theta_series",
    "verify",
]
