"""
Arc module for link diagrams.

An arc here is an edge of the diagram's 4-valent graph: a piece of one
component running from one crossing to the next (or, for a crossingless
component, the whole closed circle).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Arc:
    """
    A single oriented arc of a link diagram.

    Attributes:
        id (int): Unique arc label
        component (int): 1-based component index
        successor (int): Label of the arc that follows this one along the component
    """

    id: int
    component: int
    successor: int

    def is_loop(self):
        """
        Whether this arc closes up on itself.

        Returns:
            bool: True for the single arc of a crossingless component
        """
        return self.successor == self.id

    def __repr__(self):
        return f"Arc({self.id}, component={self.component}, next={self.successor})"
