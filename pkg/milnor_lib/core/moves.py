"""
Local move engine.

Moves are applied to the Gauss-sequence view of a diagram: a component is
the cyclic list of passages met along it, and an arc is the gap in front of
one passage. Inserting passages into gaps, swapping neighbours and
exchanging roles covers Reidemeister moves, crossing changes and the
Delta-move; the global constructions (orientation reversal, zero-framed
doubling, band sum) are built the same way. Every operation returns a new
LinkDiagram; inputs are never modified.
"""

import enum
import logging
import random
from collections import deque
from dataclasses import dataclass

from .braid import thread_braid
from .crossing import OVER, UNDER
from .diagram import LinkDiagram
from .errors import DiagramError, MoveError

logger = logging.getLogger(__name__)

# (sigma_1 sigma_2^-1)^3: a pure braid whose closure is the Borromean rings
DELTA_WORD = (1, -2, 1, -2, 1, -2)


class MoveKind(enum.Enum):
    R1 = 'R1'
    R2 = 'R2'
    R3 = 'R3'
    CROSSING_CHANGE = 'CC'
    SELF_CROSSING_CHANGE = 'SCC'
    DELTA_MOVE = 'DELTA'


@dataclass(frozen=True)
class MoveSpec:
    """
    A local move and where to apply it.

    Sites by kind:
        R1: (arc,) -- sign and over_first choose the kink
        R2: (arc_e, arc_f) on a common face -- over_first: arc_e passes over
        R3: (arc, arc, arc) bounding a triangular face
        CC, SCC: (crossing,)
        DELTA: (left, middle, right) coherently oriented parallel arcs

    Attributes:
        kind (MoveKind): Which move
        site (tuple): Arc or crossing ids of the target diagram
        sign (int): Kink sign for R1
        over_first (bool): R1: the first pass through the kink is the over-pass;
            R2: the first arc goes over the second
    """

    kind: MoveKind
    site: tuple
    sign: int = 1
    over_first: bool = True

    def __str__(self):
        return format_move_spec(self)


def parse_move_spec(text):
    """
    Read a move written as KIND:SITE[:OPTIONS].

    Examples: "R1:3:+", "R1:3:-,under", "R2:3,7:under", "R3:2,5,9",
    "CC:4", "SCC:4", "DELTA:1,2,3".

    Returns:
        MoveSpec: The parsed move

    Raises:
        MoveError: On unknown kinds, bad sites or options
    """
    parts = text.strip().split(':')
    if len(parts) not in (2, 3):
        raise MoveError(f"Move {text!r} is not of the form KIND:SITE[:OPTIONS]")
    try:
        kind = MoveKind(parts[0].strip().upper())
    except ValueError:
        raise MoveError(f"Unknown move kind {parts[0]!r}") from None
    try:
        site = tuple(int(x) for x in parts[1].split(','))
    except ValueError:
        raise MoveError(f"Move site {parts[1]!r} is not a list of integers") from None

    sign, over_first = 1, True
    options = parts[2].split(',') if len(parts) == 3 else []
    for option in (o.strip().lower() for o in options):
        if option in ('+', '+1', 'pos'):
            sign = 1
        elif option in ('-', '-1', 'neg'):
            sign = -1
        elif option == 'over':
            over_first = True
        elif option == 'under':
            over_first = False
        elif option:
            raise MoveError(f"Unknown move option {option!r}")
    return MoveSpec(kind, site, sign, over_first)


def format_move_spec(spec):
    """Inverse of parse_move_spec."""
    text = f"{spec.kind.value}:{','.join(str(x) for x in spec.site)}"
    if spec.kind is MoveKind.R1:
        text += f":{'+' if spec.sign > 0 else '-'},{'over' if spec.over_first else 'under'}"
    elif spec.kind is MoveKind.R2 and not spec.over_first:
        text += ":under"
    return text


class _Workspace:
    """Mutable Gauss sequences of one diagram while a move is assembled."""

    def __init__(self, diagram, starts=None):
        starts = starts or {}
        self.diagram = diagram
        self.sequences, self.signs = diagram.to_gauss(starts)
        self.gap = {}
        for index in range(1, diagram.component_count + 1):
            for k, arc_id in enumerate(diagram.component_arcs(index, starts.get(index))):
                self.gap[arc_id] = (index - 1, k)
        self.inserts = {}
        self._fresh = 0

    def new_key(self):
        self._fresh += 1
        return ('new', self._fresh)

    def insert(self, arc_id, passages):
        """Queue passages to be placed, in order, along an arc."""
        if arc_id not in self.gap:
            raise MoveError(f"Unknown arc {arc_id}")
        self.inserts.setdefault(self.gap[arc_id], []).extend(passages)

    def assemble(self):
        """Passage sequences with the queued inserts in place."""
        sequences = []
        for c, sequence in enumerate(self.sequences):
            result = list(self.inserts.get((c, 0), [])) if not sequence else []
            for k, passage in enumerate(sequence):
                result.extend(self.inserts.get((c, k), []))
                result.append(passage)
            sequences.append(result)
        return sequences

    def build(self):
        return LinkDiagram.from_gauss(self.assemble(), self.signs)


def _face_occurrences(diagram):
    """Map arc id -> list of (face index, direction)."""
    faces = diagram.faces()
    occurrences = {}
    for index, face in enumerate(faces):
        for arc_id, direction in face:
            occurrences.setdefault(arc_id, []).append((index, direction))
    return faces, occurrences


def _check_arcs(diagram, arcs, count):
    if len(arcs) != count or len(set(arcs)) != count:
        raise MoveError(f"Move needs {count} distinct arcs, got {arcs}")
    for arc_id in arcs:
        if not diagram.has_arc(arc_id):
            raise MoveError(f"Unknown arc {arc_id}")


def _r1(diagram, spec):
    (arc_id,) = spec.site
    _check_arcs(diagram, spec.site, 1)
    if spec.sign not in (1, -1):
        raise MoveError(f"R1 sign must be +1 or -1, got {spec.sign}")
    work = _Workspace(diagram)
    key = work.new_key()
    work.signs[key] = spec.sign
    roles = (OVER, UNDER) if spec.over_first else (UNDER, OVER)
    work.insert(arc_id, [(key, roles[0]), (key, roles[1])])
    return work.build()


def _shared_face(diagram, first, second):
    """Travel directions of two arcs along a face they both bound."""
    first_loop, second_loop = diagram.arc(first).is_loop(), diagram.arc(second).is_loop()
    _, occurrences = _face_occurrences(diagram)
    if first_loop and second_loop:
        return 1, 1
    if first_loop:
        return 1, occurrences[second][0][1]
    if second_loop:
        return occurrences[first][0][1], 1
    for face, direction in occurrences[first]:
        for other_face, other_direction in occurrences[second]:
            if face == other_face:
                return direction, other_direction
    raise MoveError(f"Arcs {first} and {second} do not bound a common face")


def _r2(diagram, spec):
    _check_arcs(diagram, spec.site, 2)
    first, second = spec.site
    dir_first, dir_second = _shared_face(diagram, first, second)

    work = _Workspace(diagram)
    near, far = work.new_key(), work.new_key()
    # signs when both arcs are followed along the face, first arc on top
    base = (-1, 1) if spec.over_first else (1, -1)
    twist = dir_first * dir_second
    work.signs[near], work.signs[far] = base[0] * twist, base[1] * twist

    role_first = OVER if spec.over_first else UNDER
    role_second = UNDER if spec.over_first else OVER
    order_first = [near, far] if dir_first > 0 else [far, near]
    order_second = [far, near] if dir_second > 0 else [near, far]
    work.insert(first, [(k, role_first) for k in order_first])
    work.insert(second, [(k, role_second) for k in order_second])
    return work.build()


def _triangle(diagram, arcs):
    """Validate an R3 triangle and return the arcs with their end passages."""
    _check_arcs(diagram, arcs, 3)
    faces, _ = _face_occurrences(diagram)
    if not any(len(face) == 3 and {a for a, _ in face} == set(arcs) for face in faces):
        raise MoveError(f"Arcs {arcs} do not bound a triangular face")
    ends = [(diagram.tail(a), diagram.head(a)) for a in arcs]
    corners = {passage[0] for pair in ends for passage in pair}
    if len(corners) != 3 or any(t[0] == h[0] for t, h in ends):
        raise MoveError(f"Arcs {arcs} do not meet at three distinct crossings")
    if not any(t[1] == OVER and h[1] == OVER for t, h in ends):
        raise MoveError(f"No strand of triangle {arcs} passes over the other two")
    return ends


def _r3(diagram, spec):
    _triangle(diagram, spec.site)
    work = _Workspace(diagram)
    for arc_id in spec.site:
        c, k = work.gap[arc_id]
        sequence = work.sequences[c]
        j = (k - 1) % len(sequence)
        sequence[j], sequence[k] = sequence[k], sequence[j]
    return work.build()


def _crossing_change(diagram, spec, self_only):
    if len(spec.site) != 1 or not diagram.has_crossing(spec.site[0]):
        raise MoveError(f"Crossing change needs one existing crossing, got {spec.site}")
    (crossing_id,) = spec.site
    if self_only and not diagram.is_self_crossing(crossing_id):
        raise MoveError(f"Crossing {crossing_id} is between two different components")
    work = _Workspace(diagram)
    swap = {OVER: UNDER, UNDER: OVER}
    work.sequences = [[(k, swap[r]) if k == crossing_id else (k, r) for k, r in sequence]
                      for sequence in work.sequences]
    work.signs[crossing_id] = -work.signs[crossing_id]
    return work.build()


def _chords_apart(face, site):
    """Whether chords left -> middle and middle -> right across one face avoid each other."""
    left, middle, right = site
    position = {entry: k for k, entry in enumerate(face)}
    start, end = position[(left, -1)], position[(middle, 1)]
    size = len(face)

    def inside(entry):
        return 0 < (position[entry] - start) % size < (end - start) % size

    return inside((middle, -1)) == inside((right, 1))


def _delta(diagram, spec):
    _check_arcs(diagram, spec.site, 3)
    faces, occurrences = _face_occurrences(diagram)
    piece_of = {c: n for n, piece in enumerate(diagram.connected_pieces()) for c in piece}
    pieces = [piece_of[diagram.arc(a).component] for a in spec.site]
    left_piece, middle_piece, right_piece = pieces
    if left_piece == right_piece != middle_piece:
        # the middle strand would have to cross an outer one to close up
        raise MoveError(f"Arc {spec.site[1]} is not held between arcs "
                        f"{spec.site[0]} and {spec.site[2]}")
    shared = []
    for k, (left, right) in enumerate(zip(spec.site, spec.site[1:])):
        if pieces[k] != pieces[k + 1]:
            continue
        faces_left = {f for f, direction in occurrences[left] if direction < 0}
        faces_right = {f for f, direction in occurrences[right] if direction > 0}
        if not faces_left & faces_right:
            raise MoveError(f"Arcs {left} and {right} are not coherently oriented neighbours")
        shared.append(faces_left & faces_right)
    if len(shared) == 2 and not any(first != second or _chords_apart(faces[first], spec.site)
                                    for first in shared[0] for second in shared[1]):
        raise MoveError(f"Arcs {spec.site} cannot be grouped side by side across one face")

    work = _Workspace(diagram)
    passages, signs, _ = thread_braid(DELTA_WORD, list(spec.site), 'delta')
    work.signs.update(signs)
    for arc_id in spec.site:
        work.insert(arc_id, passages[arc_id])
    return work.build()


def apply_move(diagram, spec):
    """
    Apply a local move.

    Args:
        diagram (LinkDiagram): Diagram to move
        spec (MoveSpec): Move and site

    Returns:
        LinkDiagram: The moved diagram (canonically relabeled)

    Raises:
        MoveError: If the site is invalid for the move
    """
    handlers = {
        MoveKind.R1: _r1,
        MoveKind.R2: _r2,
        MoveKind.R3: _r3,
        MoveKind.CROSSING_CHANGE: lambda d, s: _crossing_change(d, s, False),
        MoveKind.SELF_CROSSING_CHANGE: lambda d, s: _crossing_change(d, s, True),
        MoveKind.DELTA_MOVE: _delta,
    }
    result = handlers[spec.kind](diagram, spec)
    logger.debug("Applied %s: %r -> %r", format_move_spec(spec), diagram, result)
    return result


def reverse_component(diagram, index):
    """
    Reverse the orientation of one component.

    Signs of crossings between this component and another flip; self-crossing
    signs are unchanged.

    Args:
        diagram (LinkDiagram): Input diagram
        index (int): 1-based component index

    Returns:
        LinkDiagram: Diagram with component ``index`` reversed
    """
    diagram.check_component(index)
    sequences, signs = diagram.to_gauss()
    sequences[index - 1] = list(reversed(sequences[index - 1]))
    for crossing in diagram.crossings:
        over, under = diagram.crossing_components(crossing.id)
        if (over == index) != (under == index):
            signs[crossing.id] = -signs[crossing.id]
    return LinkDiagram.from_gauss(sequences, signs)


def double_component(diagram, index):
    """
    Add a zero-framed parallel copy of a component as component n+1.

    The copy runs on the right of the component (blackboard framing); the
    writhe w of the component is then cancelled by |w| full twists of sign
    -sign(w) between the two copies, so the new pair has linking number zero.

    Args:
        diagram (LinkDiagram): Input diagram
        index (int): Component to double

    Returns:
        LinkDiagram: (n+1)-component diagram
    """
    diagram.check_component(index)
    sequences, signs = diagram.to_gauss()
    new_signs = dict(signs)
    components = {c.id: diagram.crossing_components(c.id) for c in diagram.crossings}

    doubled = []
    for c, sequence in enumerate(sequences, start=1):
        if c == index:
            doubled.append(sequence)
            continue
        result = []
        for key, role in sequence:
            over, under = components[key]
            if index not in (over, under):
                result.append((key, role))
                continue
            sign = signs[key]
            copy = ('parallel', key)
            new_signs[copy] = sign
            # the strand meets the copy first when it crosses from its right to its left
            copy_first = (under == index) == (sign > 0)
            pair = [(copy, role), (key, role)] if copy_first else [(key, role), (copy, role)]
            result.extend(pair)
        doubled.append(result)

    original, parallel = [], []
    writhe = 0
    for key, role in sequences[index - 1]:
        over, under = components[key]
        sign = signs[key]
        if over != under:
            copy = ('parallel', key)
            original.append((key, role))
            parallel.append((copy, role))
            continue
        if role == OVER:
            writhe += sign
        a_b2, a2_b, a2_b2 = ('ab2', key), ('a2b', key), ('a2b2', key)
        for k in (a_b2, a2_b, a2_b2):
            new_signs[k] = sign
        if role == OVER:
            if sign > 0:
                original += [(a_b2, OVER), (key, OVER)]
                parallel += [(a2_b2, OVER), (a2_b, OVER)]
            else:
                original += [(key, OVER), (a_b2, OVER)]
                parallel += [(a2_b, OVER), (a2_b2, OVER)]
        else:
            if sign < 0:
                original += [(a2_b, UNDER), (key, UNDER)]
                parallel += [(a2_b2, UNDER), (a_b2, UNDER)]
            else:
                original += [(key, UNDER), (a2_b, UNDER)]
                parallel += [(a_b2, UNDER), (a2_b2, UNDER)]

    if writhe:
        letter = -1 if writhe > 0 else 1
        twists, twist_signs, _ = thread_braid([letter] * (2 * abs(writhe)),
                                              ['original', 'parallel'], 'framing')
        new_signs.update(twist_signs)
        original = twists['original'] + original
        parallel = twists['parallel'] + parallel

    doubled[index - 1] = original
    doubled.append(parallel)
    result = LinkDiagram.from_gauss(doubled, new_signs)
    logger.debug("Doubled component %d (writhe %d): %r", index, writhe, result)
    return result


def _band_route(diagram, index, other):
    """
    Shortest untwisted band from component ``index`` to component ``other``.

    The band leaves its start arc and reaches its end arc on the same side
    (+1: left of the arc) and passes over every edge it meets. Components in
    different connected pieces need no crossing: the pieces are placed so
    that the faces next to the base arcs meet.

    Returns:
        tuple: (start arc, end arc, side, route) where route lists
            (arc id, direction of that arc in the face the band leaves)
    """
    piece_of = {c: n for n, piece in enumerate(diagram.connected_pieces()) for c in piece}
    if piece_of[index] != piece_of[other]:
        return diagram.base_arc(index), diagram.base_arc(other), 1, []

    faces = diagram.faces()
    face_at = {}
    for number, face in enumerate(faces):
        for arc_id, direction in face:
            face_at[(arc_id, direction)] = number

    best = None
    for side in (1, -1):
        sources, targets = {}, {}
        for arc_id in diagram.component_arcs(index):
            sources.setdefault(face_at[(arc_id, side)], arc_id)
        for arc_id in diagram.component_arcs(other):
            targets.setdefault(face_at[(arc_id, side)], arc_id)

        parent = {face: None for face in sources}
        queue = deque(sorted(sources))
        while queue:
            face = queue.popleft()
            if face in targets:
                break
            for arc_id, direction in faces[face]:
                neighbour = face_at[(arc_id, -direction)]
                if neighbour not in parent:
                    parent[neighbour] = (face, arc_id, direction)
                    queue.append(neighbour)

        end_face, route = face, []
        while parent[face] is not None:
            face, arc_id, direction = parent[face]
            route.append((arc_id, direction))
        route.reverse()
        if best is None or len(route) < len(best[3]):
            best = (sources[face], targets[end_face], side, route)
    return best


def _join_components(diagram, index, other):
    """Band component ``other`` into component ``index``; ``other`` is removed."""
    start, end, side, route = _band_route(diagram, index, other)
    work = _Workspace(diagram, {index: start, other: end})
    outgoing, returning = [], []
    for step, (arc_id, direction) in enumerate(route):
        out_key, back_key = ('band', step, 'out'), ('band', step, 'back')
        # the band edge running away from the start arc crosses from the
        # leaving face to the far side
        work.signs[out_key], work.signs[back_key] = -direction, direction
        pair = [(out_key, UNDER), (back_key, UNDER)]
        if side * direction > 0:
            pair.reverse()
        work.insert(arc_id, pair)
        outgoing.append((out_key, OVER))
        returning.append((back_key, OVER))

    sequences = work.assemble()
    sequences[index - 1] = (sequences[index - 1] + outgoing
                            + sequences[other - 1] + returning[::-1])
    del sequences[other - 1]
    logger.debug("Band from arc %d to arc %d crosses %d edges", start, end, len(route))
    return LinkDiagram.from_gauss(sequences, work.signs)


def band_sum(first, second):
    """
    Band-sum two diagrams with the same number of components.

    The diagrams start out split, and component i of ``first`` is joined
    to component i of ``second`` by an untwisted band, one pair at a time.
    Once the diagram is connected, later bands follow a shortest path
    through the faces and pass over the edges on the way, so the result is
    always a planar diagram. Milnor invariants do not depend on the choice
    of bands.

    Returns:
        LinkDiagram: The band sum

    Raises:
        DiagramError: If the component counts differ
    """
    if first.component_count != second.component_count:
        raise DiagramError(f"Band sum needs equal component counts, got "
                           f"{first.component_count} and {second.component_count}")
    count = first.component_count
    left, left_signs = first.to_gauss()
    right, right_signs = second.to_gauss()
    signs = {('L', k): s for k, s in left_signs.items()}
    signs.update({('R', k): s for k, s in right_signs.items()})
    sequences = ([[(('L', k), r) for k, r in a] for a in left]
                 + [[(('R', k), r) for k, r in b] for b in right])
    result = LinkDiagram.from_gauss(sequences, signs)
    for index in range(1, count + 1):
        # the next unjoined component of ``second`` always sits at count + 1
        result = _join_components(result, index, count + 1)
    return result


# ----------------------------------------------------------------------
# site finders and the random isotopy driver

def r2_sites(diagram):
    """
    All (arc, arc) pairs an R2 move can be applied to.

    Returns:
        list: Sorted pairs of distinct arcs sharing a face, plus pairs with a loop arc
    """
    sites = set()
    for face in diagram.faces():
        arcs = sorted({a for a, _ in face})
        sites.update((a, b) for a in arcs for b in arcs if a != b)
    loops = [a.id for a in diagram.arcs if a.is_loop()]
    for loop in loops:
        sites.update((loop, a.id) for a in diagram.arcs if a.id != loop)
        sites.update((a.id, loop) for a in diagram.arcs if a.id != loop)
    return sorted(sites)


def r3_sites(diagram):
    """
    Triangular faces on which an R3 move is possible.

    Returns:
        list: Sorted arc triples
    """
    sites = []
    for face in diagram.faces():
        arcs = tuple(a for a, _ in face)
        if len(arcs) != 3:
            continue
        try:
            _triangle(diagram, arcs)
        except MoveError:
            continue
        sites.append(arcs)
    return sorted(sites)


def random_move(diagram, rng=None, kinds=('R1', 'R2', 'R3')):
    """
    Pick a random applicable Reidemeister move.

    Args:
        diagram (LinkDiagram): Diagram to move
        rng (random.Random, optional): Source of randomness
        kinds (iterable): Move kinds to choose from

    Returns:
        MoveSpec: A move valid on ``diagram``
    """
    rng = rng or random.Random()
    options = []
    for kind in (MoveKind(k) for k in kinds):
        if kind is MoveKind.R1:
            options.append((kind, [(a.id,) for a in diagram.arcs]))
        elif kind is MoveKind.R2:
            options.append((kind, r2_sites(diagram)))
        elif kind is MoveKind.R3:
            options.append((kind, r3_sites(diagram)))
    options = [(kind, sites) for kind, sites in options if sites]
    if not options:
        raise MoveError("No applicable move of the requested kinds")
    kind, sites = rng.choice(options)
    return MoveSpec(kind, rng.choice(sites), rng.choice((1, -1)), rng.random() < 0.5)


def random_isotopy(diagram, length, rng=None, kinds=('R1', 'R2', 'R3')):
    """
    Apply a sequence of random Reidemeister moves.

    Returns:
        tuple: (final diagram, list of applied MoveSpecs)
    """
    rng = rng or random.Random()
    applied = []
    for _ in range(length):
        spec = random_move(diagram, rng, kinds)
        diagram = apply_move(diagram, spec)
        applied.append(spec)
    return diagram, applied
