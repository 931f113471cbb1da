"""
Wirtinger presentation of the link group.

Generators are the strands of the diagram: maximal runs of arcs that are
only interrupted by passing over crossings. A strand is identified by its
lowest arc id. Every crossing of sign e, with over-strand o, incoming
under-strand a and outgoing under-strand b, gives the relation

    b = o^e a o^-e

Walking a component from its base strand and chaining these relations
writes every strand generator as a conjugate C m C^-1 of the component's
meridian m (the base strand generator). Each conjugator is built by
multiplying the over-letter on the left of the previous one; the
conjugator accumulated over a full circuit is the raw longitude.
"""

import logging
from dataclasses import dataclass

from ..core.crossing import UNDER
from ..utils.words import FreeWord
from .linking import writhe_component

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relation:
    """
    One crossing relation: result = over^sign * source * over^-sign.

    Attributes:
        crossing (int): Crossing id
        result (int): Outgoing under-strand generator
        over (int): Over-strand generator
        source (int): Incoming under-strand generator
        sign (int): Crossing sign
    """

    crossing: int
    result: int
    over: int
    source: int
    sign: int

    def as_words(self):
        """Both sides of the relation as words in strand generators."""
        o = FreeWord.generator(self.over, self.sign)
        conjugate = o * FreeWord.generator(self.source) * o.inverse()
        return FreeWord.generator(self.result), conjugate


class WirtingerPresentation:
    """
    Wirtinger presentation with chosen base strands.

    Attributes:
        generators (dict): Strand id -> component index
        relations (list): One Relation per crossing, in crossing order
        base (dict): Component index -> base strand id (its meridian)
        strand_of (dict): Arc id -> strand id
        conjugators (dict): Strand id -> FreeWord C with strand = C m C^-1
        steps (dict): Component index -> walk as (over strand, sign, strand
            entered or None once the walk is back on the base strand)
        circuits (dict): Component index -> conjugator of a full circuit
    """

    def __init__(self, diagram, base_arcs=None):
        base_arcs = base_arcs or {}
        self.diagram = diagram
        self.generators = {}
        self.strand_of = {}
        self.base = {}
        self.conjugators = {}
        self.circuits = {}

        walks = {}
        for index in range(1, diagram.component_count + 1):
            arcs = diagram.component_arcs(index, base_arcs.get(index))
            walks[index] = arcs
            # a new strand starts after every under-passage
            starts = sorted({(k + 1) % len(arcs) for k, a in enumerate(arcs)
                             if diagram.head(a) is not None and diagram.head(a)[1] == UNDER})
            runs = [arcs] if not starts else []
            for position, start in enumerate(starts):
                stop = starts[(position + 1) % len(starts)]
                runs.append(arcs[start:stop] if start < stop else arcs[start:] + arcs[:stop])
            for run in runs:
                strand = min(run)
                self.generators[strand] = index
                for a in run:
                    self.strand_of[a] = strand
            self.base[index] = self.strand_of[arcs[0]]

        self.relations = []
        for crossing in diagram.crossings:
            self.relations.append(Relation(
                crossing=crossing.id,
                result=self.strand_of[crossing.under_out],
                over=self.strand_of[crossing.over_in],
                source=self.strand_of[crossing.under_in],
                sign=crossing.sign))

        self.steps = {}
        for index, arcs in walks.items():
            conjugator = FreeWord()
            self.conjugators[self.base[index]] = conjugator
            steps = []
            for k, a in enumerate(arcs):
                head = diagram.head(a)
                if head is None or head[1] != UNDER:
                    continue
                crossing = diagram.crossing(head[0])
                over = self.strand_of[crossing.over_in]
                conjugator = FreeWord.generator(over, crossing.sign) * conjugator
                following = self.strand_of[arcs[(k + 1) % len(arcs)]]
                if following in self.conjugators:
                    following = None
                else:
                    self.conjugators[following] = conjugator
                steps.append((over, crossing.sign, following))
            self.steps[index] = steps
            self.circuits[index] = conjugator

        logger.debug("Wirtinger presentation: %d generators, %d relations",
                     len(self.generators), len(self.relations))

    def component_of(self, strand):
        return self.generators[strand]

    def meridian(self, index):
        """Base strand generator of a component."""
        return self.base[index]

    def conjugator(self, strand):
        return self.conjugators[strand]

    def __repr__(self):
        return (f"WirtingerPresentation(generators={len(self.generators)}, "
                f"relations={len(self.relations)})")


def presentation(diagram, base_arcs=None):
    """
    Build the Wirtinger presentation of a diagram.

    Args:
        diagram (LinkDiagram): Input diagram
        base_arcs (dict, optional): Component index -> arc id whose strand is the
            base. Defaults to the lowest arc id of each component.

    Returns:
        WirtingerPresentation: Generators, relations and conjugators
    """
    return WirtingerPresentation(diagram, base_arcs)


def raw_longitude(diagram, wirtinger, index):
    """
    Longitude read along a component from its base arc, before framing.

    Returns:
        FreeWord: Word in strand generators, over-letters raised to the
            crossing signs, each new letter multiplied on the left
    """
    diagram.check_component(index)
    return wirtinger.circuits[index]


def preferred_longitude(diagram, wirtinger, index):
    """
    Raw longitude times m^-w, w the writhe of the component.

    Returns:
        FreeWord: Longitude with linking number zero with its own component
    """
    writhe = writhe_component(diagram, index)
    return raw_longitude(diagram, wirtinger, index) * FreeWord.power(wirtinger.meridian(index), -writhe)
