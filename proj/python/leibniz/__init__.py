"""Exact computations on finite-dimensional left Leibniz algebras over Q."""

from ._leibniz import (
    Algebra,
    catalog_names,
    center,
    derivations,
    fact,
    fact_keys,
    factor,
    inner_derivations,
    is_complete,
    is_lie,
    left_center,
    leibniz_kernel,
    leibniz_violations,
    report,
    verify,
)

__all__ = [
    "Algebra",
    "catalog_names",
    "center",
    "derivations",
    "fact",
    "fact_keys",
    "factor",
    "inner_derivations",
    "is_complete",
    "is_lie",
    "left_center",
    "leibniz_kernel",
    "leibniz_violations",
    "report",
    "verify",
]
