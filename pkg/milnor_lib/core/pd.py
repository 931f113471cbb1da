"""
PD code parser.

Dialect: each crossing is written X[a,b,c,d] with arc labels listed
counterclockwise starting from the incoming under-arc, so the under-strand
runs a -> c. Arcs are numbered consecutively along each component, which is
what makes the orientation of every arc recoverable. When the over-strand
belongs to a two-arc component both orientations fit the numbering; such a
crossing may be written Xp[a,b,c,d] or Xm[a,b,c,d] to fix its sign, and an
explicit sign on any other crossing must agree with the labels. A
crossingless component is written Loop[a]. The whole list may be wrapped in
PD[...]; whitespace and commas between items are ignored.

Components are ordered by their smallest arc label.
"""

import logging
import re
from collections import Counter

from .arc import Arc
from .crossing import Crossing
from .diagram import LinkDiagram
from .errors import DiagramError, PDSyntaxError

logger = logging.getLogger(__name__)

_WRAPPER = re.compile(r'\s*PD\s*\[')
_ITEM = re.compile(r'(Xp|Xm|X|Loop)\s*\[([^\[\]]*)\]')
_SEPARATOR = re.compile(r'[\s,]*')


class _Components:
    """Union-find over arc labels, as used for grouping endpoints into components."""

    def __init__(self, labels):
        self.parent = {label: label for label in labels}

    def find(self, label):
        while self.parent[label] != label:
            self.parent[label] = self.parent[self.parent[label]]
            label = self.parent[label]
        return label

    def union(self, first, second):
        self.parent[self.find(first)] = self.find(second)

    def groups(self):
        result = {}
        for label in self.parent:
            result.setdefault(self.find(label), []).append(label)
        return sorted((sorted(g) for g in result.values()), key=lambda g: g[0])


def tokenize_pd(text):
    """
    Split PD text into items.

    Args:
        text (str): PD code

    Returns:
        list: (kind, labels) pairs where kind is 'X', 'Xp', 'Xm' or 'Loop'

    Raises:
        PDSyntaxError: On malformed input, with the character position
    """
    pos, end = 0, len(text.rstrip())
    wrapper = _WRAPPER.match(text)
    if wrapper:
        if end == 0 or text[end - 1] != ']':
            raise PDSyntaxError("PD[ wrapper is not closed", end)
        pos, end = wrapper.end(), end - 1

    items = []
    while True:
        pos = _SEPARATOR.match(text, pos, end).end()
        if pos >= end:
            break
        match = _ITEM.match(text, pos, end)
        if not match:
            raise PDSyntaxError("Expected X[a,b,c,d], Xp[...], Xm[...] or Loop[a]", pos)
        kind = match.group(1)
        labels = []
        for raw in match.group(2).split(','):
            raw = raw.strip()
            if not re.fullmatch(r'-?\d+', raw):
                raise PDSyntaxError(f"Arc label {raw!r} is not an integer", match.start(2))
            labels.append(int(raw))
        expected = 1 if kind == 'Loop' else 4
        if len(labels) != expected:
            raise PDSyntaxError(f"{kind}[...] needs {expected} labels, got {len(labels)}",
                                match.start())
        items.append((kind, labels))
        pos = match.end()
    return items


def parse_pd(text):
    """
    Parse PD code into a validated LinkDiagram.

    Arc ids of the result are the PD labels; crossing ids are 1..N in input order.

    Args:
        text (str): PD code in the dialect described in this module

    Returns:
        LinkDiagram: The parsed diagram

    Raises:
        PDSyntaxError: If the text cannot be tokenized
        DiagramError: If arc incidence or orientation is inconsistent
    """
    items = tokenize_pd(text)
    if not items:
        raise PDSyntaxError("Empty PD code", 0)

    crossings = [labels for kind, labels in items if kind != 'Loop']
    explicit = [{'Xp': 1, 'Xm': -1}.get(kind) for kind, _ in items if kind != 'Loop']
    loops = [labels[0] for kind, labels in items if kind == 'Loop']

    usage = Counter(label for labels in crossings for label in labels)
    for label, count in sorted(usage.items()):
        if count != 2:
            raise DiagramError(f"Arc {label} is used {count} times; every arc must be used exactly twice")
    loop_usage = Counter(loops)
    for label in loops:
        if label in usage or loop_usage[label] > 1:
            raise DiagramError(f"Loop arc {label} is used more than once")

    union = _Components(list(usage) + loops)
    for a, b, c, d in crossings:
        union.union(a, c)
        union.union(b, d)
    groups = union.groups()

    successor, component_of = {}, {}
    for index, group in enumerate(groups, start=1):
        low, high = group[0], group[-1]
        if group != list(range(low, high + 1)):
            raise DiagramError(f"Arcs {group} of one component are not numbered consecutively")
        for label in group:
            successor[label] = label + 1 if label < high else low
            component_of[label] = index

    used = set()
    records = [None] * len(crossings)
    deferred = []
    for number, (a, b, c, d) in enumerate(crossings):
        if successor[a] != c:
            raise DiagramError(f"Crossing {number + 1}: under-strand {a} -> {c} "
                               f"runs against the arc numbering")
        if b == d:
            raise DiagramError(f"Crossing {number + 1}: over-strand enters and leaves through arc {b}")
        used.add(a)
        forward, backward = successor[b] == d, successor[d] == b
        if forward and backward:
            if explicit[number] is None:
                deferred.append(number)
                continue
            records[number] = (b, d, +1) if explicit[number] > 0 else (d, b, -1)
        elif forward:
            records[number] = (b, d, +1)
        elif backward:
            records[number] = (d, b, -1)
        else:
            raise DiagramError(f"Crossing {number + 1}: over-strand {b}, {d} "
                               f"is not a pair of consecutive arcs")
        if explicit[number] is not None and explicit[number] != records[number][2]:
            raise DiagramError(f"Crossing {number + 1}: explicit sign {explicit[number]:+d} "
                               f"contradicts the arc numbering")
        used.add(records[number][0])

    # Unmarked two-arc over-strands: take the transition the rest of the
    # component has not used yet.
    for number in deferred:
        a, b, c, d = crossings[number]
        free = [x for x in (b, d) if x not in used]
        if not free:
            raise DiagramError(f"Crossing {number + 1}: cannot orient over-strand {b}, {d}")
        start = min(free)
        if len(free) > 1:
            logger.warning("Crossing %d: over-strand %d, %d has no explicit sign; reading it from %d",
                           number + 1, b, d, start)
        records[number] = (start, successor[start], +1 if start == b else -1)
        used.add(start)

    arcs = [Arc(label, component_of[label], successor[label]) for label in successor]
    result = []
    for number, ((a, b, c, d), (over_in, over_out, sign)) in enumerate(zip(crossings, records), start=1):
        result.append(Crossing(number, over_in, over_out, a, c, sign))

    diagram = LinkDiagram(arcs, result, component_count=len(groups))
    logger.debug("Parsed PD code: %r", diagram)
    return diagram


def read_pd_file(file_path):
    """
    Read diagrams from a file holding one PD code per line.

    Blank lines and lines starting with '#' are skipped.

    Args:
        file_path (str): Path to the file

    Returns:
        list: LinkDiagram per PD line
    """
    with open(file_path, 'r') as f:
        lines = [line.strip() for line in f]
    diagrams = [parse_pd(line) for line in lines if line and not line.startswith('#')]
    if not diagrams:
        raise DiagramError(f"No PD code found in {file_path}")
    return diagrams
