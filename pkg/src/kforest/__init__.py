"""k-forested list coloring of sparse graphs."""

from .coloring import (
    Parameters,
    VerificationReport,
    c_k_minus_1,
    lower_bound,
    neighbor_colors,
    params,
    upper_bound,
    verify,
    verify_partial,
)
from .colorer import ColoringFailure, ExtensionTrace, color
from .configurations import Configuration, applicable, deletion_set, find_configuration
from .discharging import R1, R2, R3, ChargeState, Rule, RuleSet, check_bound
from .generators import FamilySpec, generate
from .graph import Graph, girth, induced_subgraph, parse_edge_list, parse_graph6, to_graph6
from .mad import densest_subgraph, girth_mad_bound, mad, mad_brute
from .solvers import (
    BudgetExhausted,
    SolveBudget,
    kf_choice_number,
    kf_choosable,
    kf_chromatic,
    kf_list_color,
)

__version__ = "0.1.0"
