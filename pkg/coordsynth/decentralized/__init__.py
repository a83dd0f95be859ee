from .problem import CommunicationMap, DecentralizedProblem, Solution, Translation
from .grouping import group_agents, incidence, shared_matrix
from .solver import ENRICHED_CONTROL_MODES, communication_map, enrich, global_controllable, solve, translate

__all__ = (
    "CommunicationMap",
    "DecentralizedProblem",
    "Solution",
    "Translation",
    "group_agents",
    "incidence",
    "shared_matrix",
    "ENRICHED_CONTROL_MODES",
    "communication_map",
    "enrich",
    "global_controllable",
    "solve",
    "translate",
)
