from .automata import automata
from .checks import checks
from .synthesis import synthesis

__all__ = ("automata", "checks", "synthesis")
