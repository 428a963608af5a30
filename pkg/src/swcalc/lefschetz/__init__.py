"""Lefschetz fibration bookkeeping."""

from .fibrations import (
    Fibration,
    SingularFiberModel,
    TwistedSumReport,
    VanishingCycleAudit,
    build_Mng,
    enk_fibration,
    euler_from_fibration,
    mng_fibration,
    singular_fiber_contribution,
    singular_fiber_model,
    twisted_fiber_sum_check,
    vanishing_cycle_audit,
)

__all__ = [
    "Fibration",
    "SingularFiberModel",
    "TwistedSumReport",
    "VanishingCycleAudit",
    "build_Mng",
    "enk_fibration",
    "euler_from_fibration",
    "mng_fibration",
    "singular_fiber_contribution",
    "singular_fiber_model",
    "twisted_fiber_sum_check",
    "vanishing_cycle_audit",
]
