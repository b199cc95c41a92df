from .crawler import CrawlerTrace, crawler, crawler_allocation
from .diver import DiverState, diver
from .envy import cycle_check_po, envy_graph
from .ttc import ttc

__all__ = [
    "CrawlerTrace",
    "DiverState",
    "crawler",
    "crawler_allocation",
    "cycle_check_po",
    "diver",
    "envy_graph",
    "ttc",
]
