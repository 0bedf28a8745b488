"""Finite and polycyclic models of inverse semigroup actions and their germ groupoids."""

from .errors import GermlabError, HypothesisFailed
from .semigroup import InverseSemigroup, load_semigroup, loads_semigroup, symmetric_inverse_monoid
from .clopen import ClopenSet, Point, cylinder, parse_point, parse_word
from .action import FiniteAction, PolycyclicAction, natural_action, empty_domain_action
from .groupoid import FiniteGroupoid, pair_groupoid

__version__ = "0.1.0"

__all__ = [
    "GermlabError", "HypothesisFailed",
    "InverseSemigroup", "load_semigroup", "loads_semigroup", "symmetric_inverse_monoid",
    "ClopenSet", "Point", "cylinder", "parse_point", "parse_word",
    "FiniteAction", "PolycyclicAction", "natural_action", "empty_domain_action",
    "FiniteGroupoid", "pair_groupoid",
]
