"""
Utility helpers for link invariants.

This module provides free group words and index-sequence combinatorics
used by other modules.
"""

from .words import FreeWord
from .sequences import gcd_all, rotations, deletions, shuffles, all_sequences
