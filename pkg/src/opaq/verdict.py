"""Decision outcome record shared by the language and opacity checkers."""

from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass
class SearchStats:
    nodes: int = 0        # estimates / product nodes explored
    seconds: float = 0.0  # wall time of the check


@dataclass
class Verdict:
    """Outcome of a decision procedure.

    When ``holds`` is False, ``witness`` is a violating observed word given
    as original symbol names (shortest, ties broken by lowest symbol index).
    ``witness_split`` marks, for the k-step notions, the position where the
    post-secret suffix t of the witness s.t starts.  ``bounded`` is set by
    the brute-force oracle when its word-length cap was too small to make
    the verdict exhaustive.
    """
    holds: bool
    witness: Optional[Tuple[str, ...]] = None
    stats: SearchStats = field(default_factory=SearchStats)
    witness_split: Optional[int] = None
    bounded: bool = False
