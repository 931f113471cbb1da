"""
Milnor invariants.

The engine rewrites every strand generator of the Wirtinger presentation as
a word in the meridians m_1..m_n, correct in the nilpotent quotient F/G_q F
after q rounds. The q-th round replaces each strand by C m C^-1, with C its
conjugator word rewritten at round q-1. The preferred longitude rewritten at
round q then gives the Magnus coefficients of degree below q exactly, so
mu(i_1 ... i_p j), the coefficient of X_{i_1}..X_{i_p} in E(longitude_j),
is read at round |I|.

Two routes share the memo: FreeWord rewriting (exact words, for inspection
and small cases) and TruncatedSeries images, which build the same Magnus
images letter by letter without ever forming the exponentially long words.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..core.config import Config
from ..core.errors import InvariantError, ResourceGuardError
from ..core.moves import double_component
from ..utils.sequences import all_sequences, deletions, gcd_all, rotations, shuffles
from ..utils.words import FreeWord
from .linking import writhe_component
from .magnus import TruncatedSeries
from .wirtinger import presentation, preferred_longitude

logger = logging.getLogger(__name__)


def check_sequence(diagram, sequence, minimum=2):
    """
    Validate an index sequence against a diagram.

    Returns:
        tuple: The sequence as a tuple of ints

    Raises:
        InvariantError: If it is too short or uses an unknown component
    """
    sequence = tuple(sequence)
    if len(sequence) < minimum:
        raise InvariantError(f"Sequence {sequence} must have length >= {minimum}")
    n = diagram.component_count
    for index in sequence:
        if not isinstance(index, int) or not 1 <= index <= n:
            raise InvariantError(f"Index {index!r} in {sequence} outside components 1..{n}")
    return sequence


class MilnorEngine:
    """
    Memoized meridian rewriting and Magnus coefficients for one diagram.

    The memo tables are guarded by a lock so one engine can serve several
    threads while a table is being filled.

    Attributes:
        diagram (LinkDiagram): The diagram
        wirtinger (WirtingerPresentation): Its presentation
        n (int): Number of components
    """

    def __init__(self, diagram, config=None, wirtinger=None, base_arcs=None):
        self.diagram = diagram
        self.config = config or Config()
        self.wirtinger = wirtinger or presentation(diagram, base_arcs)
        self.n = diagram.component_count
        self._lock = threading.Lock()
        self._words = {}
        self._levels = {}
        self._mu = {}

    def depth_for(self, length):
        return length + self.config.milnor.get('depth_offset', 0)

    def _strand(self, arc_id):
        if arc_id not in self.wirtinger.strand_of:
            raise InvariantError(f"Unknown arc {arc_id}")
        return self.wirtinger.strand_of[arc_id]

    # ------------------------------------------------------------------
    # words

    def meridian_rewrite(self, arc_id, depth):
        """
        The generator of an arc's strand as a word in meridians.

        Args:
            arc_id (int): Any arc of the strand
            depth (int): Rewriting round, >= 1

        Returns:
            FreeWord: Word over component indices
        """
        if depth < 1:
            raise InvariantError(f"Rewriting depth must be >= 1, got {depth}")
        strand = self._strand(arc_id)
        key = (strand, depth)
        with self._lock:
            if key in self._words:
                return self._words[key]
        m = FreeWord.generator(self.wirtinger.component_of(strand))
        if depth == 1:
            word = m
        else:
            conjugator = self._rewrite_word(self.wirtinger.conjugator(strand), depth - 1)
            word = conjugator * m * conjugator.inverse()
        with self._lock:
            self._words[key] = word
        return word

    def _rewrite_word(self, word, depth):
        images = {g: self.meridian_rewrite(g, depth) for g in word.generators()}
        return word.substitute(images)

    def longitude_word(self, index, depth):
        """Preferred longitude of a component rewritten at the given round."""
        self.diagram.check_component(index)
        if depth < 1:
            raise InvariantError(f"Rewriting depth must be >= 1, got {depth}")
        longitude = preferred_longitude(self.diagram, self.wirtinger, index)
        return self._rewrite_word(longitude, depth)

    # ------------------------------------------------------------------
    # series

    def _level(self, depth, bound):
        """Magnus images of all strand generators at one rewriting round."""
        key = (depth, bound)
        with self._lock:
            if key in self._levels:
                return self._levels[key]
        n = self.n
        if depth == 1:
            images = {s: TruncatedSeries.meridian(c, n, bound)
                      for s, c in self.wirtinger.generators.items()}
        else:
            previous = self._level(depth - 1, bound)
            images = {}
            for index in range(1, n + 1):
                meridian = TruncatedSeries.meridian(index, n, bound)
                images[self.wirtinger.meridian(index)] = meridian
                conjugator = TruncatedSeries.one(n, bound)
                for over, sign, entered in self.wirtinger.steps[index]:
                    letter = previous[over] if sign > 0 else previous[over].inverse()
                    conjugator = letter * conjugator
                    if entered is not None:
                        images[entered] = conjugator * meridian * conjugator.inverse()
        with self._lock:
            # a concurrent caller may have stored the same level first
            images = self._levels.setdefault(key, images)
        logger.debug("Series level depth=%d bound=%d: %d strands", depth, bound, len(images))
        return images

    def longitude_series(self, index, depth, bound):
        """
        Magnus expansion of the preferred longitude rewritten at round ``depth``.

        Equal to expand(longitude_word(index, depth), n, bound).
        """
        self.diagram.check_component(index)
        images = self._level(depth, bound)
        result = TruncatedSeries.one(self.n, bound)
        for over, sign, _ in self.wirtinger.steps[index]:
            letter = images[over] if sign > 0 else images[over].inverse()
            result = letter * result
        writhe = writhe_component(self.diagram, index)
        return result * TruncatedSeries.meridian(index, self.n, bound).power(-writhe)

    # ------------------------------------------------------------------
    # invariants

    def mu(self, sequence):
        """
        Milnor number mu(I): coefficient of X_{i_1}..X_{i_p} in E(longitude_j).

        Args:
            sequence (tuple): (i_1, ..., i_p, j), length >= 2

        Returns:
            int: The integer mu(I)
        """
        sequence = check_sequence(self.diagram, sequence)
        with self._lock:
            if sequence in self._mu:
                return self._mu[sequence]
        series = self.longitude_series(sequence[-1], self.depth_for(len(sequence)),
                                       len(sequence) - 1)
        value = series.coefficient(sequence[:-1])
        with self._lock:
            self._mu[sequence] = value
        return value

    def delta(self, sequence):
        """
        Indeterminacy Delta(I): gcd of mu over proper subsequences and their rotations.
        """
        sequence = check_sequence(self.diagram, sequence)
        values = []
        for sub in deletions(sequence):
            for candidate in [sub] + rotations(sub):
                values.append(self.mu(candidate))
        return gcd_all(values)

    def mu_bar(self, sequence):
        """
        Residue class of mu(I) modulo Delta(I).

        Returns:
            tuple: (value, modulus); value in [0, modulus) when modulus > 0
        """
        value, modulus = self.mu(sequence), self.delta(sequence)
        return (value % modulus if modulus else value), modulus

    def fill(self, k, workers=1):
        """Compute mu for every sequence of length 2..k at one rewriting round."""
        depth = self.depth_for(k)

        def component_values(index):
            series = self.longitude_series(index, depth, k - 1)
            return index, series

        indices = list(range(1, self.n + 1))
        if workers > 1 and self.n > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(component_values, indices))
        else:
            results = [component_values(i) for i in indices]

        with self._lock:
            for index, series in results:
                for length in range(1, k):
                    for prefix in all_sequences(self.n, length):
                        self._mu.setdefault(prefix + (index,), series.coefficient(prefix))


def meridian_rewrite(diagram, wirtinger, arc_id, depth):
    """Rewrite an arc generator as a meridian word (see MilnorEngine.meridian_rewrite)."""
    return MilnorEngine(diagram, wirtinger=wirtinger).meridian_rewrite(arc_id, depth)


def longitude_word(diagram, wirtinger, index, depth):
    """Preferred longitude of component ``index`` in meridian letters."""
    return MilnorEngine(diagram, wirtinger=wirtinger).longitude_word(index, depth)


def mu(diagram, sequence, config=None):
    return MilnorEngine(diagram, config).mu(sequence)


def delta(diagram, sequence, config=None):
    return MilnorEngine(diagram, config).delta(sequence)


def mu_bar(diagram, sequence, config=None):
    return MilnorEngine(diagram, config).mu_bar(sequence)


@dataclass(frozen=True)
class MilnorEntry:
    """
    One row of a Milnor table.

    Attributes:
        sequence (tuple): Index sequence I
        mu (int): mu(I)
        delta (int): Delta(I)
        mu_bar (int): Canonical residue, in [0, delta) unless delta == 0
        exact (bool): delta == 0
    """

    sequence: tuple
    mu: int
    delta: int
    mu_bar: int
    exact: bool

    def residue(self):
        return self.mu_bar, self.delta

    def to_dict(self):
        return {"I": list(self.sequence), "mu": self.mu, "delta": self.delta,
                "mu_bar": self.mu_bar, "exact": self.exact}


class MilnorTable:
    """
    All Milnor invariants of lengths 2..k of one diagram.

    Attributes:
        k (int): Maximum sequence length
        n (int): Number of components
        entries (dict): Sequence -> MilnorEntry, in lexicographic order
    """

    def __init__(self, k, n, entries):
        self.k = k
        self.n = n
        self.entries = dict(sorted(entries.items()))

    def entry(self, sequence):
        try:
            return self.entries[tuple(sequence)]
        except KeyError:
            raise InvariantError(f"Sequence {tuple(sequence)} is not in a table of length {self.k}") from None

    def at_length(self, length):
        return {s: e for s, e in self.entries.items() if len(s) == length}

    def first_nonvanishing(self):
        """Smallest length with a nonzero mu, or None."""
        for length in range(2, self.k + 1):
            if any(e.mu for e in self.at_length(length).values()):
                return length
        return None

    def residues(self):
        return {s: e.residue() for s, e in self.entries.items()}

    def to_dict(self):
        return {"k": self.k,
                "entries": [e.to_dict() for e in self.entries.values()],
                "first_nonvanishing": self.first_nonvanishing()}

    def __eq__(self, other):
        if not isinstance(other, MilnorTable):
            return NotImplemented
        return self.k == other.k and self.residues() == other.residues()

    def __repr__(self):
        return f"MilnorTable(k={self.k}, n={self.n}, entries={len(self.entries)})"


def sequence_count(n, k):
    return sum(n ** length for length in range(2, k + 1))


def milnor_table(diagram, k, config=None, force=False, base_arcs=None):
    """
    Tabulate mu, Delta and mu-bar for every sequence of length 2..k.

    Args:
        diagram (LinkDiagram): Input diagram
        k (int): Maximum length, >= 2
        config (Config, optional): Guard size, worker count and depth offset
        force (bool): Skip the resource guard
        base_arcs (dict, optional): Component -> base arc override

    Returns:
        MilnorTable: The table

    Raises:
        ResourceGuardError: If there are more sequences than milnor.max_sequences
    """
    config = config or Config()
    if not isinstance(k, int) or k < 2:
        raise InvariantError(f"Table length k must be an integer >= 2, got {k!r}")
    n = diagram.component_count
    count = sequence_count(n, k)
    limit = config.milnor['max_sequences']
    if count > limit and not force:
        raise ResourceGuardError(f"{count} sequences for n={n}, k={k} exceed the limit of {limit}; "
                                 f"use --force to compute anyway")

    engine = MilnorEngine(diagram, config, base_arcs=base_arcs)
    engine.fill(k, workers=config.milnor.get('workers', 1))
    entries = {}
    for length in range(2, k + 1):
        for sequence in all_sequences(n, length):
            value, modulus = engine.mu(sequence), engine.delta(sequence)
            residue = value % modulus if modulus else value
            entries[sequence] = MilnorEntry(sequence, value, modulus, residue, modulus == 0)
    logger.info("Milnor table for %r up to length %d: %d entries", diagram, k, len(entries))
    return MilnorTable(k, n, entries)


def first_nonvanishing(diagram, k_max, config=None, force=False):
    """
    Smallest length at which some Milnor invariant is nonzero.

    Returns:
        tuple or None: (length, {sequence: mu} at that length), None if all
            invariants vanish up to k_max

    Raises:
        InvariantError: If an entry at the first nonvanishing length has Delta != 0
    """
    table = milnor_table(diagram, k_max, config, force)
    length = table.first_nonvanishing()
    if length is None:
        return None
    entries = table.at_length(length)
    for sequence, entry in entries.items():
        if entry.delta != 0:
            raise InvariantError(f"Delta{sequence} = {entry.delta} at the first nonvanishing length")
    return length, {s: e.mu for s, e in entries.items()}


def cabling_reduce(sequence, n):
    """
    Trade the second occurrence of a repeated index for a new component.

    The first position whose index already appeared earlier is replaced by
    n + 1; that index names the component to double.

    Returns:
        tuple: (new sequence, component to double)

    Raises:
        InvariantError: If no index repeats
    """
    sequence = tuple(sequence)
    seen = set()
    for position, index in enumerate(sequence):
        if index in seen:
            return sequence[:position] + (n + 1,) + sequence[position + 1:], index
        seen.add(index)
    raise InvariantError(f"Sequence {sequence} has no repeated index")


def cable(diagram, sequence):
    """
    Apply cabling_reduce until the sequence has distinct indices.

    Returns:
        tuple: (doubled diagram, sequence with pairwise distinct indices)
    """
    sequence = check_sequence(diagram, sequence)
    while len(set(sequence)) < len(sequence):
        sequence, index = cabling_reduce(sequence, diagram.component_count)
        diagram = double_component(diagram, index)
    return diagram, sequence


def orientation_sign(sequence, index):
    """(-1) raised to the number of occurrences of ``index`` in the sequence."""
    return -1 if tuple(sequence).count(index) % 2 else 1


def residue_table(table):
    """Sequence -> (mu_bar, delta), for comparing tables."""
    return table.residues()


@dataclass(frozen=True)
class Violation:
    """
    A failed symmetry check.

    Attributes:
        kind (str): 'cyclic' or 'shuffle'
        sequences (tuple): Sequences involved
        detail (str): Values that failed
    """

    kind: str
    sequences: tuple
    detail: str


def check_relations(table):
    """
    Check cyclic symmetry and the shuffle relations on a table.

    Cyclic: mu(I) and mu of every rotation of I agree modulo Delta(I).
    Shuffle: for nonempty I, J and any j, the sum of mu(Hj) over all
    interleavings H of I and J vanishes modulo the gcd of the Delta(Hj).

    Returns:
        list: Violations, empty when the table is consistent
    """
    violations = []
    for sequence, entry in table.entries.items():
        for rotated in rotations(sequence):
            difference = entry.mu - table.entries[rotated].mu
            if (difference % entry.delta if entry.delta else difference) != 0:
                violations.append(Violation('cyclic', (sequence, rotated),
                                            f"{entry.mu} vs {table.entries[rotated].mu} mod {entry.delta}"))

    for first_length in range(1, table.k - 1):
        for second_length in range(1, table.k - first_length):
            for first in all_sequences(table.n, first_length):
                for second in all_sequences(table.n, second_length):
                    for last in range(1, table.n + 1):
                        rows = [table.entries[h + (last,)] for h in shuffles(first, second)]
                        total = sum(r.mu for r in rows)
                        modulus = gcd_all(r.delta for r in rows)
                        if (total % modulus if modulus else total) != 0:
                            violations.append(Violation(
                                'shuffle', (first, second, (last,)),
                                f"sum {total} mod {modulus}"))
    if violations:
        logger.warning("%d relation violations in %r", len(violations), table)
    return violations
