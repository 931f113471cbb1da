"""
Command line interface for the link invariant library.
"""

from .main import main
