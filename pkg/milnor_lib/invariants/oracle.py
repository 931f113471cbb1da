"""
Fixed-point oracle for Milnor numbers.

An independent route to mu(I) used to cross-check the rewriting engine.
Every strand gets a truncated series unknown, starting from its
component's meridian 1 + X_c. Sweeps over the crossing relations
b = o^e a o^-e overwrite b until nothing changes; base strands stay fixed.
The longitude is then multiplied out directly along the diagram.
"""

import logging

from ..core.config import Config
from ..core.crossing import UNDER
from ..core.errors import OracleBudgetError
from .linking import writhe_component
from .magnus import TruncatedSeries
from .milnor import check_sequence
from .wirtinger import presentation

logger = logging.getLogger(__name__)


def solve_relations(diagram, wirtinger, bound, max_sweeps):
    """
    Iterate the Wirtinger relations to a fixed point in truncated series.

    Args:
        diagram (LinkDiagram): The diagram
        wirtinger (WirtingerPresentation): Its presentation
        bound (int): Degree bound of the series
        max_sweeps (int): Sweep budget

    Returns:
        dict: Strand id -> TruncatedSeries

    Raises:
        OracleBudgetError: If the assignment is still changing after max_sweeps
    """
    n = diagram.component_count
    images = {s: TruncatedSeries.meridian(c, n, bound) for s, c in wirtinger.generators.items()}
    fixed = set(wirtinger.base.values())
    for sweep in range(1, max_sweeps + 1):
        changed = False
        for relation in wirtinger.relations:
            if relation.result in fixed:
                continue
            over = images[relation.over]
            if relation.sign < 0:
                over = over.inverse()
            updated = over * images[relation.source] * over.inverse()
            if updated != images[relation.result]:
                images[relation.result] = updated
                changed = True
        if not changed:
            logger.debug("Oracle stabilized after %d sweeps", sweep)
            return images
    raise OracleBudgetError(f"Relations still changing after {max_sweeps} sweeps")


def oracle_mu(diagram, sequence, config=None):
    """
    mu(I) from the fixed point of the crossing relations.

    Args:
        diagram (LinkDiagram): Input diagram
        sequence (tuple): Index sequence, length >= 2
        config (Config, optional): Supplies oracle.max_sweeps

    Returns:
        int: Coefficient of X_{i_1}..X_{i_p} in the longitude of component j
    """
    config = config or Config()
    sequence = check_sequence(diagram, sequence)
    bound = len(sequence)
    n, index = diagram.component_count, sequence[-1]
    wirtinger = presentation(diagram)
    images = solve_relations(diagram, wirtinger, bound, config.oracle['max_sweeps'])

    longitude = TruncatedSeries.one(n, bound)
    for arc_id in diagram.component_arcs(index):
        head = diagram.head(arc_id)
        if head is None or head[1] != UNDER:
            continue
        crossing = diagram.crossing(head[0])
        letter = images[wirtinger.strand_of[crossing.over_in]].power(crossing.sign)
        longitude = letter * longitude
    writhe = writhe_component(diagram, index)
    longitude = longitude * TruncatedSeries.meridian(index, n, bound).power(-writhe)
    return longitude.coefficient(sequence[:-1])
