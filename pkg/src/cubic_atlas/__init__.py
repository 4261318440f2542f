"""Exact combinatorics of vanishing cycles on cubic surfaces.

The 72 roots of E6 inside the Picard lattice I^{1,6}, the 27 lines, Weyl
(sub)groups acting on the roots, and monodromy-orbit counts for every ADE
configuration of a singular cubic surface.
"""

__version__ = "0.1.0"

from .atlas import (
    PUBLISHED_TABLE1,
    Table1Row,
    a1_example_breakdown,
    eckardt_line_model,
    eckardt_search,
    effective_orbit_split,
    orbit_count,
    table1,
    transitivity_check,
)
from .config import SubsystemConfig, parse_config
from .errors import *  # noqa: F401,F403
from .lattice import (
    RootSystem72,
    enumerate_roots,
    hyperplane_class,
    is_root,
    pair,
    simple_roots,
)
from .lines import Line, decompose_root, enumerate_lines, incidence, root_from_pair, skew_pairs
from .weyl import (
    ClosedSubsystem,
    ReflectionGroup,
    WeylElement,
    classify,
    close_subsystem,
    generate_group,
    orbit_max,
    orbits,
    picard_lefschetz_word,
    realize,
    reflect,
    simple_system,
    weyl_e6,
)
