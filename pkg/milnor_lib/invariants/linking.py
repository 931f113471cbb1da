"""
Linking numbers and writhe.

This module counts signed crossings between components of a diagram and
assembles them into a LinkingMatrix.
"""

import logging

import numpy as np

from ..core.errors import DiagramError, InvariantError

logger = logging.getLogger(__name__)


def _check_pair(diagram, i, j):
    diagram.check_component(i)
    diagram.check_component(j)
    if i == j:
        raise InvariantError(f"Linking number needs two distinct components, got {i} twice "
                             f"(use writhe_component for self-crossings)")


def lk(diagram, i, j):
    """
    Signed count of crossings where component i passes over component j.

    Args:
        diagram (LinkDiagram): Input diagram
        i (int): Over component
        j (int): Under component

    Returns:
        int: The linking number lk(L_i, L_j)
    """
    _check_pair(diagram, i, j)
    total = 0
    for crossing in diagram.crossings:
        if diagram.crossing_components(crossing.id) == (i, j):
            total += crossing.sign
    return total


def lk_symmetrized(diagram, i, j):
    """
    Half the signed count over all crossings between components i and j.

    Raises:
        DiagramError: If the total is odd, which no planar diagram produces
    """
    _check_pair(diagram, i, j)
    total = 0
    for crossing in diagram.crossings:
        if set(diagram.crossing_components(crossing.id)) == {i, j}:
            total += crossing.sign
    if total % 2:
        raise DiagramError(f"Crossings between components {i} and {j} sum to odd {total}")
    return total // 2


def writhe_component(diagram, i):
    """Signed count of the self-crossings of component i."""
    diagram.check_component(i)
    return sum(c.sign for c in diagram.crossings
               if diagram.crossing_components(c.id) == (i, i))


class LinkingMatrix:
    """
    Symmetric integer matrix of pairwise linking numbers.

    The diagonal holds the writhe of each component. It is a property of the
    diagram, not of the link, and is only there for inspection.

    Attributes:
        values (numpy.ndarray): n x n integer array, 0-based
    """

    def __init__(self, values):
        self.values = np.array(values, dtype=np.int64)
        n = self.values.shape[0]
        if self.values.shape != (n, n):
            raise InvariantError(f"Linking matrix must be square, got shape {self.values.shape}")
        off = ~np.eye(n, dtype=bool)
        if not np.array_equal(self.values[off], self.values.T[off]):
            raise InvariantError("Linking matrix is not symmetric off the diagonal")

    @property
    def size(self):
        return self.values.shape[0]

    def entry(self, i, j):
        """1-based access: lk(i, j) for i != j, writhe for i == j."""
        return int(self.values[i - 1, j - 1])

    def off_diagonal(self):
        """Copy with the writhe diagonal zeroed, the part that is a link invariant."""
        result = self.values.copy()
        np.fill_diagonal(result, 0)
        return result

    def writhes(self):
        return [int(v) for v in np.diag(self.values)]

    def to_list(self):
        return self.values.tolist()

    def __eq__(self, other):
        if not isinstance(other, LinkingMatrix):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"LinkingMatrix({self.to_list()})"


def linking_matrix(diagram):
    """
    Linking numbers of all component pairs.

    Returns:
        LinkingMatrix: lk off the diagonal, writhe on it
    """
    n = diagram.component_count
    values = np.zeros((n, n), dtype=np.int64)
    for crossing in diagram.crossings:
        over, under = diagram.crossing_components(crossing.id)
        values[over - 1, under - 1] += crossing.sign
    # over/under counts agree for planar diagrams; keep the over-count for both halves
    upper = np.triu(values, 1)
    result = upper + upper.T + np.diag(np.diag(values))
    lower = np.tril(values, -1)
    if not np.array_equal(lower.T, upper):
        logger.warning("Over- and under-counts of linking numbers disagree: %s", values.tolist())
    return LinkingMatrix(result)
