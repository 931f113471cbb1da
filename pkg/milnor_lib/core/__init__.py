"""
Core components of the link invariant library.

This module provides the diagram data model and its constructions:
- Arc, Crossing: Oriented arcs and signed crossings
- LinkDiagram: Validated multi-component diagram
- parse_pd, parse_braid: Diagram input
- apply_move and friends: Local moves and global constructions
- Config: Configuration parameters
"""

from .arc import Arc
from .crossing import Crossing, OVER, UNDER
from .diagram import LinkDiagram
from .pd import parse_pd, read_pd_file
from .braid import parse_braid, parse_braid_word
from .moves import (MoveKind, MoveSpec, apply_move, parse_move_spec, reverse_component,
                    double_component, band_sum, random_move, random_isotopy)
from .config import Config
from .errors import (MilnorLibError, DiagramError, PDSyntaxError, BraidError, MoveError,
                     InvariantError, ResourceGuardError, OracleBudgetError)
