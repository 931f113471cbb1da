"""
Link invariants.

This module provides the invariant computations:
- lk, linking_matrix: Pairwise linking numbers
- presentation: Wirtinger presentation and longitudes
- TruncatedSeries, expand: Magnus expansion
- MilnorEngine, milnor_table: Milnor mu, Delta and mu-bar
- oracle_mu: Independent fixed-point cross-check
"""

from .linking import lk, lk_symmetrized, writhe_component, linking_matrix, LinkingMatrix
from .wirtinger import WirtingerPresentation, presentation, raw_longitude, preferred_longitude
from .magnus import TruncatedSeries, expand
from .milnor import (MilnorEngine, MilnorTable, MilnorEntry, mu, delta, mu_bar, milnor_table,
                     first_nonvanishing, cabling_reduce, cable, check_relations)
from .oracle import oracle_mu
