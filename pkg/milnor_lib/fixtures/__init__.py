"""
Bundled example diagrams.

Each fixture is a .pd file next to this module holding one PD code.
"""

import os

from ..core.pd import read_pd_file

FIXTURE_DIR = os.path.dirname(os.path.abspath(__file__))
FIXTURES = ('borromean', 'whitehead', 'hopf', 'trefoil')


def fixture_path(name):
    """Path of a bundled fixture file."""
    if name not in FIXTURES:
        raise KeyError(f"Unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    return os.path.join(FIXTURE_DIR, f"{name}.pd")


def load_fixture(name):
    """
    Parse a bundled fixture.

    Args:
        name (str): One of FIXTURES

    Returns:
        LinkDiagram: The fixture diagram
    """
    return read_pd_file(fixture_path(name))[0]
