"""
Milnor Link Invariants Library

An exact-arithmetic library for link diagrams featuring:
- PD code and braid closure input
- Reidemeister, crossing-change and Delta moves
- Linking numbers and Milnor mu-bar invariants
- A command line front end
"""

__version__ = "0.1.0"

# Import core components for easier access
from .core import LinkDiagram, Config, parse_pd, parse_braid
from .invariants import linking_matrix, milnor_table, mu, mu_bar, oracle_mu
