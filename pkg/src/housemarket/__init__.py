"""Single-peaked house markets: the Crawler, the Diver PO checker, and oracles."""

from .core import (
    Allocation,
    Axis,
    CycleResourceMismatch,
    DuplicateResourceInRanking,
    FlankOrder,
    ImprovingCycle,
    Instance,
    InvalidInstance,
    NotABijection,
    NotSinglePeaked,
    PreferenceOrder,
    Verdict,
    apply_cycle,
    normalize,
    validate,
)
from .domains import (
    gen_consensual,
    gen_crawler_worstcase,
    gen_fooling_mixed,
    gen_random_sp,
    is_single_peaked,
)
from .io import parse_instance, serialize_instance
from .mechanisms import crawler, cycle_check_po, diver, ttc
from .oracle import brute_force_po, dominates, is_individually_rational

__version__ = "0.1.0"
