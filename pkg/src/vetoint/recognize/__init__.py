"""Recognition: ordering-word search, exact realizability and orientation feasibility."""

from .lp import LinearSystem, build_system, realizable
from .orientation import OrientationReport, orientation_feasible
from .search import Budget, RecognitionResult, SearchStats, Verdict, automorphism_orbits, recognize

__all__ = [
    "Budget",
    "LinearSystem",
    "OrientationReport",
    "RecognitionResult",
    "SearchStats",
    "Verdict",
    "automorphism_orbits",
    "build_system",
    "orientation_feasible",
    "realizable",
    "recognize",
]
