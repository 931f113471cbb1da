"""
Crossing module for link diagrams.

This module defines the Crossing class, which records the four arc-ends
meeting at a crossing together with its sign.
"""

from dataclasses import dataclass

OVER = 'over'
UNDER = 'under'
ROLES = (OVER, UNDER)


@dataclass(frozen=True)
class Crossing:
    """
    A signed crossing between an over-strand and an under-strand.

    The sign is +1 when turning the under-strand direction a quarter turn
    counterclockwise gives the over-strand direction, -1 otherwise.

    Attributes:
        id (int): Unique crossing label
        over_in (int): Arc entering along the over-strand
        over_out (int): Arc leaving along the over-strand
        under_in (int): Arc entering along the under-strand
        under_out (int): Arc leaving along the under-strand
        sign (int): +1 or -1
    """

    id: int
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    def passage(self, role):
        """
        Return the (in, out) arcs of one strand through this crossing.

        Args:
            role (str): OVER or UNDER

        Returns:
            tuple: (incoming arc, outgoing arc)
        """
        if role == OVER:
            return self.over_in, self.over_out
        return self.under_in, self.under_out

    def slots(self):
        """
        Arc labels in PD order: counterclockwise from the incoming under-arc.

        Returns:
            tuple: (a, b, c, d) as written in X[a,b,c,d]
        """
        if self.sign > 0:
            return self.under_in, self.over_in, self.under_out, self.over_out
        return self.under_in, self.over_out, self.under_out, self.over_in

    def flipped(self):
        """
        Return the crossing with over and under exchanged (a crossing change).

        Returns:
            Crossing: Same arcs, strands swapped, opposite sign
        """
        return Crossing(self.id, self.under_in, self.under_out,
                        self.over_in, self.over_out, -self.sign)

    def __repr__(self):
        a, b, c, d = self.slots()
        return f"Crossing({self.id}, X[{a},{b},{c},{d}], sign={self.sign:+d})"
