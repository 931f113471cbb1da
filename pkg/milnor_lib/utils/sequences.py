"""
Index-sequence helpers for Milnor invariants.

Sequences are tuples of 1-based component indices.
"""

import itertools
import math
from functools import reduce


def gcd_all(values):
    """
    Greatest common divisor of integers, 0 for an empty collection.

    Zero is the neutral element, so gcd_all([0, 0]) == 0.
    """
    return reduce(math.gcd, (abs(v) for v in values), 0)


def rotations(sequence):
    """Cyclic rotations of a sequence, the sequence itself excluded."""
    sequence = tuple(sequence)
    return [sequence[k:] + sequence[:k] for k in range(1, len(sequence))]


def deletions(sequence):
    """
    Order-preserving subsequences obtained by removing at least one index
    and keeping at least two.

    Returns:
        list: Distinct proper subsequences of length >= 2, in a stable order
    """
    sequence = tuple(sequence)
    seen, result = set(), []
    for size in range(len(sequence) - 1, 1, -1):
        for positions in itertools.combinations(range(len(sequence)), size):
            sub = tuple(sequence[p] for p in positions)
            if sub not in seen:
                seen.add(sub)
                result.append(sub)
    return result


def shuffles(first, second):
    """
    All interleavings of two sequences, with multiplicity.

    Returns:
        list: Sequences of length len(first) + len(second); an interleaving
            reachable in several ways appears several times
    """
    first, second = tuple(first), tuple(second)
    total = len(first) + len(second)
    result = []
    for slots in itertools.combinations(range(total), len(first)):
        chosen = set(slots)
        a, b = iter(first), iter(second)
        result.append(tuple(next(a) if p in chosen else next(b) for p in range(total)))
    return result


def all_sequences(n, length):
    """Every sequence of the given length over indices 1..n, lexicographically."""
    return list(itertools.product(range(1, n + 1), repeat=length))
