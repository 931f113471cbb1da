"""
Link diagram core module.

This module defines the LinkDiagram class, the central immutable value of
the library: oriented arcs, signed crossings and the component structure
implied by the arc successor cycles. Diagrams are built either directly from
arc and crossing records (the PD parser does this) or from per-component
Gauss sequences (braid closures and the move engine do this).
"""

import logging

from .arc import Arc
from .crossing import Crossing, OVER, UNDER, ROLES
from .errors import DiagramError

logger = logging.getLogger(__name__)


class LinkDiagram:
    """
    Oriented multi-component link diagram.

    Every arc begins and ends at a crossing passage, except the single arc
    of a crossingless component, which is its own successor. Component
    indices are 1-based; the base arc of a component is its lowest arc id.

    Attributes:
        arcs (tuple): Arc records sorted by id
        crossings (tuple): Crossing records sorted by id
        component_count (int): Number of components
    """

    def __init__(self, arcs, crossings, component_count=None):
        """
        Build and validate a diagram.

        Args:
            arcs (iterable): Arc records
            crossings (iterable): Crossing records
            component_count (int, optional): Expected number of components.
                Defaults to the largest component index among the arcs.

        Raises:
            DiagramError: If the records are inconsistent
        """
        self._arcs = tuple(sorted(arcs, key=lambda a: a.id))
        self._crossings = tuple(sorted(crossings, key=lambda c: c.id))
        self._arc_by_id = {a.id: a for a in self._arcs}
        self._crossing_by_id = {c.id: c for c in self._crossings}

        if len(self._arc_by_id) != len(self._arcs):
            raise DiagramError("Duplicate arc ids")
        if len(self._crossing_by_id) != len(self._crossings):
            raise DiagramError("Duplicate crossing ids")
        if not self._arcs:
            raise DiagramError("A diagram needs at least one arc")

        if component_count is None:
            component_count = max(a.component for a in self._arcs)
        self._component_count = component_count

        # arc -> (crossing id, role) where the arc ends / begins
        self._head = {}
        self._tail = {}
        for crossing in self._crossings:
            if crossing.sign not in (1, -1):
                raise DiagramError(f"Crossing {crossing.id} has sign {crossing.sign}")
            for role in ROLES:
                arc_in, arc_out = crossing.passage(role)
                for arc_id in (arc_in, arc_out):
                    if arc_id not in self._arc_by_id:
                        raise DiagramError(f"Crossing {crossing.id} references unknown arc {arc_id}")
                if arc_in in self._head:
                    raise DiagramError(f"Arc {arc_in} ends at more than one crossing")
                if arc_out in self._tail:
                    raise DiagramError(f"Arc {arc_out} begins at more than one crossing")
                self._head[arc_in] = (crossing.id, role)
                self._tail[arc_out] = (crossing.id, role)
                if self._arc_by_id[arc_in].successor != arc_out:
                    raise DiagramError(
                        f"Crossing {crossing.id}: {role}-strand goes {arc_in} -> {arc_out}, "
                        f"but arc {arc_in} is followed by {self._arc_by_id[arc_in].successor}")

        self._validate_components()

    def _validate_components(self):
        """Check that successor cycles are exactly the components."""
        members = {}
        for arc in self._arcs:
            if arc.successor not in self._arc_by_id:
                raise DiagramError(f"Arc {arc.id} has unknown successor {arc.successor}")
            if not 1 <= arc.component <= self._component_count:
                raise DiagramError(f"Arc {arc.id} has component {arc.component} "
                                   f"outside 1..{self._component_count}")
            members.setdefault(arc.component, set()).add(arc.id)

        for index in range(1, self._component_count + 1):
            if index not in members:
                raise DiagramError(f"Component {index} has no arcs")
            start = min(members[index])
            seen = []
            arc_id = start
            while True:
                seen.append(arc_id)
                arc = self._arc_by_id[arc_id]
                if arc.component != index:
                    raise DiagramError(f"Arc {arc_id} is followed by an arc of another component")
                arc_id = arc.successor
                if arc_id == start or len(seen) > len(members[index]):
                    break
            if arc_id != start or set(seen) != members[index]:
                raise DiagramError(f"Arcs of component {index} do not form a single cycle")

            passages = sum(1 for a in seen if a in self._head)
            if passages == 0 and len(seen) != 1:
                raise DiagramError(f"Crossingless component {index} must consist of one arc")
            if passages != 0 and passages != len(seen):
                raise DiagramError(f"Some arc of component {index} does not end at a crossing")
            if len(seen) == 1 and passages == 1:
                raise DiagramError(f"Component {index} passes through a single crossing")

    # ------------------------------------------------------------------
    # accessors

    @property
    def arcs(self):
        return self._arcs

    @property
    def crossings(self):
        return self._crossings

    @property
    def component_count(self):
        return self._component_count

    def arc(self, arc_id):
        """
        Look up an arc by id.

        Raises:
            DiagramError: If no such arc exists
        """
        try:
            return self._arc_by_id[arc_id]
        except KeyError:
            raise DiagramError(f"Unknown arc {arc_id}") from None

    def crossing(self, crossing_id):
        """
        Look up a crossing by id.

        Raises:
            DiagramError: If no such crossing exists
        """
        try:
            return self._crossing_by_id[crossing_id]
        except KeyError:
            raise DiagramError(f"Unknown crossing {crossing_id}") from None

    def has_arc(self, arc_id):
        return arc_id in self._arc_by_id

    def has_crossing(self, crossing_id):
        return crossing_id in self._crossing_by_id

    def check_component(self, index):
        """
        Validate a 1-based component index.

        Raises:
            DiagramError: If the index is out of range
        """
        if not isinstance(index, int) or not 1 <= index <= self._component_count:
            raise DiagramError(f"Component index {index} outside 1..{self._component_count}")
        return index

    def head(self, arc_id):
        """
        The passage an arc runs into.

        Returns:
            tuple or None: (crossing id, role), None for a crossingless component
        """
        return self._head.get(arc_id)

    def tail(self, arc_id):
        """
        The passage an arc leaves from.

        Returns:
            tuple or None: (crossing id, role), None for a crossingless component
        """
        return self._tail.get(arc_id)

    def base_arc(self, index):
        """Lowest arc id of a component."""
        self.check_component(index)
        return min(a.id for a in self._arcs if a.component == index)

    def component_arcs(self, index, start=None):
        """
        Arc ids of a component in traversal order.

        Args:
            index (int): Component index
            start (int, optional): First arc. Defaults to the base arc.

        Returns:
            list: Arc ids, starting at ``start``
        """
        if start is None:
            start = self.base_arc(index)
        elif self.arc(start).component != index:
            raise DiagramError(f"Arc {start} is not on component {index}")
        result = [start]
        arc_id = self._arc_by_id[start].successor
        while arc_id != start:
            result.append(arc_id)
            arc_id = self._arc_by_id[arc_id].successor
        return result

    def passage_component(self, crossing_id, role):
        """Component index of one strand of a crossing."""
        arc_in, _ = self.crossing(crossing_id).passage(role)
        return self._arc_by_id[arc_in].component

    def crossing_components(self, crossing_id):
        """
        Components of the two strands of a crossing.

        Returns:
            tuple: (over component, under component)
        """
        return self.passage_component(crossing_id, OVER), self.passage_component(crossing_id, UNDER)

    def is_self_crossing(self, crossing_id):
        over, under = self.crossing_components(crossing_id)
        return over == under

    # ------------------------------------------------------------------
    # Gauss sequences

    def to_gauss(self, starts=None):
        """
        Describe the diagram by per-component passage sequences.

        Each component contributes the list of (crossing id, role) passages
        met when walking it from its start arc; the first entry is the
        crossing the start arc runs into.

        Args:
            starts (dict, optional): Component index -> start arc. Defaults to base arcs.

        Returns:
            tuple: (list of passage lists, dict crossing id -> sign)
        """
        starts = starts or {}
        sequences = []
        for index in range(1, self._component_count + 1):
            arcs = self.component_arcs(index, starts.get(index))
            sequences.append([self._head[a] for a in arcs if a in self._head])
        signs = {c.id: c.sign for c in self._crossings}
        return sequences, signs

    @classmethod
    def from_gauss(cls, sequences, signs):
        """
        Build a diagram from per-component passage sequences.

        Crossing keys may be any hashable values; they are renumbered 1..N in
        order of first appearance. Arcs are numbered consecutively along each
        component, component by component, so the arc entering the first
        passage of a component is its base arc.

        Args:
            sequences (list): One list of (crossing key, role) per component
            signs (dict): Crossing key -> +1 or -1

        Returns:
            LinkDiagram: The assembled diagram

        Raises:
            DiagramError: If a crossing key lacks exactly one over and one under passage
        """
        ends = {}
        order = []
        arcs = []
        next_arc = 1
        for index, sequence in enumerate(sequences, start=1):
            count = len(sequence)
            if count == 0:
                arcs.append(Arc(next_arc, index, next_arc))
                next_arc += 1
                continue
            ids = list(range(next_arc, next_arc + count))
            next_arc += count
            for k, (key, role) in enumerate(sequence):
                if role not in ROLES:
                    raise DiagramError(f"Unknown passage role {role!r}")
                arc_in, arc_out = ids[k], ids[(k + 1) % count]
                arcs.append(Arc(arc_in, index, arc_out))
                slot = ends.setdefault(key, {})
                if role in slot:
                    raise DiagramError(f"Crossing {key!r} has two {role} passages")
                if key not in order:
                    order.append(key)
                slot[role] = (arc_in, arc_out)

        crossings = []
        for number, key in enumerate(order, start=1):
            slot = ends[key]
            if len(slot) != 2:
                raise DiagramError(f"Crossing {key!r} needs one over and one under passage")
            if key not in signs:
                raise DiagramError(f"Crossing {key!r} has no sign")
            (o_in, o_out), (u_in, u_out) = slot[OVER], slot[UNDER]
            crossings.append(Crossing(number, o_in, o_out, u_in, u_out, signs[key]))
        return cls(arcs, crossings, component_count=len(sequences))

    def canonical(self):
        """
        Relabel arcs and crossings canonically.

        Returns:
            LinkDiagram: Same diagram, arcs numbered consecutively along components
        """
        return LinkDiagram.from_gauss(*self.to_gauss())

    def to_pd(self):
        """
        Serialize the diagram in the PD dialect read by ``parse_pd``.

        A two-arc component that passes over at both of its crossings reads
        the same with either orientation, so those crossings are written
        Xp[...] or Xm[...] to carry their sign explicitly.

        Returns:
            str: e.g. ``PD[X[1,5,2,6], Loop[7]]``
        """
        canonical = self.canonical()
        items = []
        for crossing in canonical.crossings:
            kind = "X"
            if (canonical.arc(crossing.over_out).successor == crossing.over_in
                    and canonical.head(crossing.over_out)[1] == OVER):
                kind = "Xp" if crossing.sign > 0 else "Xm"
            items.append(kind + "[%d,%d,%d,%d]" % crossing.slots())
        for arc in canonical.arcs:
            if arc.is_loop():
                items.append(f"Loop[{arc.id}]")
        return "PD[" + ", ".join(items) + "]"

    # ------------------------------------------------------------------
    # planar structure

    def _arc_ends(self):
        """Map each non-loop arc to its (crossing id, slot) tail and head ends."""
        tails, heads = {}, {}
        for crossing in self._crossings:
            a, b, c, d = crossing.slots()
            over_out_slot = 3 if crossing.sign > 0 else 1
            for slot, arc_id in enumerate((a, b, c, d)):
                if slot == 2 or slot == over_out_slot:
                    tails[arc_id] = (crossing.id, slot)
                else:
                    heads[arc_id] = (crossing.id, slot)
        return tails, heads

    def faces(self):
        """
        Trace the faces of the diagram's planar graph.

        Each face is returned as a list of (arc id, direction) with the face
        on the left of travel; direction is +1 when travel follows the arc's
        orientation. Crossingless components do not take part.

        Returns:
            list: Faces in a deterministic order
        """
        tails, heads = self._arc_ends()
        visited = set()
        faces = []
        for crossing in self._crossings:
            for slot in range(4):
                if (crossing.id, slot) in visited:
                    continue
                face = []
                position = (crossing.id, slot)
                while position not in visited:
                    visited.add(position)
                    cid, s = position
                    arc_id = self._crossing_by_id[cid].slots()[s]
                    if tails[arc_id] == position:
                        face.append((arc_id, 1))
                        far_cid, far_slot = heads[arc_id]
                    else:
                        face.append((arc_id, -1))
                        far_cid, far_slot = tails[arc_id]
                    position = (far_cid, (far_slot - 1) % 4)
                faces.append(face)
        return faces

    def connected_pieces(self):
        """
        Group components that are tied together by crossings.

        Returns:
            list: Sorted lists of component indices, one per connected piece
        """
        parent = list(range(self._component_count + 1))

        def find(index):
            while parent[index] != index:
                parent[index] = parent[parent[index]]
                index = parent[index]
            return index

        for crossing in self._crossings:
            over, under = self.crossing_components(crossing.id)
            parent[find(over)] = find(under)
        groups = {}
        for index in range(1, self._component_count + 1):
            groups.setdefault(find(index), []).append(index)
        return sorted(groups.values())

    def is_planar(self):
        """
        Whether the Gauss data describes a diagram drawable in the plane.

        Each connected piece with crossings must satisfy Euler's formula,
        which for a 4-valent graph means crossings + 2 faces.

        Returns:
            bool: True if every piece is planar
        """
        piece_of = {}
        for number, piece in enumerate(self.connected_pieces()):
            for index in piece:
                piece_of[index] = number
        crossing_count, face_count = {}, {}
        for crossing in self._crossings:
            piece = piece_of[self.passage_component(crossing.id, UNDER)]
            crossing_count[piece] = crossing_count.get(piece, 0) + 1
        for face in self.faces():
            piece = piece_of[self._arc_by_id[face[0][0]].component]
            face_count[piece] = face_count.get(piece, 0) + 1
        return all(face_count.get(piece, 0) == count + 2
                   for piece, count in crossing_count.items())

    # ------------------------------------------------------------------
    # comparison

    def is_isomorphic(self, other):
        """
        Whether two diagrams agree up to relabeling of arcs and crossings.

        Component indices, orientations, roles and signs must be preserved.

        Args:
            other (LinkDiagram): Diagram to compare with

        Returns:
            bool: True if an isomorphism exists
        """
        if (self._component_count != other.component_count
                or len(self._crossings) != len(other.crossings)):
            return False
        mine, my_signs = self.to_gauss()
        theirs, their_signs = other.to_gauss()
        if [len(s) for s in mine] != [len(s) for s in theirs]:
            return False

        def extend(index, forward, backward):
            if index == len(mine):
                return True
            first, second = mine[index], theirs[index]
            if not first:
                return extend(index + 1, forward, backward)
            size = len(first)
            for shift in range(size):
                fwd, bwd = dict(forward), dict(backward)
                for k in range(size):
                    key, role = first[k]
                    image, image_role = second[(k + shift) % size]
                    if role != image_role or my_signs[key] != their_signs[image]:
                        break
                    if fwd.setdefault(key, image) != image or bwd.setdefault(image, key) != key:
                        break
                else:
                    if extend(index + 1, fwd, bwd):
                        return True
            return False

        return extend(0, {}, {})

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return (self._arcs == other.arcs and self._crossings == other.crossings
                and self._component_count == other.component_count)

    def __hash__(self):
        return hash((self._arcs, self._crossings, self._component_count))

    def __repr__(self):
        return (f"LinkDiagram(components={self._component_count}, "
                f"arcs={len(self._arcs)}, crossings={len(self._crossings)})")
