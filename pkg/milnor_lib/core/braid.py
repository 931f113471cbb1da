"""
Braid closures.

A braid word is a sequence of nonzero integers: i stands for the generator
sigma_i and -i for its inverse. For sigma_i the strand in position i+1
crosses over the strand in position i, giving a crossing of sign +1;
sigma_i^-1 is the mirror crossing with sign -1. Strands are oriented in
the direction the word is read.
"""

import logging
import re

from .crossing import OVER, UNDER
from .diagram import LinkDiagram
from .errors import BraidError

logger = logging.getLogger(__name__)


def parse_braid_word(text):
    """
    Read a braid word such as "1 1 -2" or "1, -2, 1".

    Args:
        text (str): Whitespace or comma separated signed generator indices

    Returns:
        list: Nonzero integers

    Raises:
        BraidError: On tokens that are not nonzero integers
    """
    letters = []
    for token in re.split(r'[\s,]+', text.strip()):
        if not token:
            continue
        if not re.fullmatch(r'[+-]?\d+', token):
            raise BraidError(f"Braid letter {token!r} is not an integer")
        value = int(token)
        if value == 0:
            raise BraidError("Braid letter 0 does not name a generator")
        letters.append(value)
    return letters


def thread_braid(letters, positions, tag):
    """
    Run strands through a braid word and record their passages.

    Args:
        letters (list): Signed generator indices
        positions (list): Strand keys, left to right
        tag: Prefix for crossing keys, so several braids can share a diagram

    Returns:
        tuple: (dict strand -> list of (key, role), dict key -> sign, final positions)

    Raises:
        BraidError: If a generator does not fit the number of positions
    """
    positions = list(positions)
    passages = {strand: [] for strand in positions}
    signs = {}
    for step, letter in enumerate(letters):
        index = abs(letter)
        if not 1 <= index < len(positions):
            raise BraidError(f"Generator {letter} out of range for {len(positions)} strands")
        left, right = positions[index - 1], positions[index]
        key = (tag, step)
        if letter > 0:
            over, under, sign = right, left, 1
        else:
            over, under, sign = left, right, -1
        passages[over].append((key, OVER))
        passages[under].append((key, UNDER))
        signs[key] = sign
        positions[index - 1], positions[index] = right, left
    return passages, signs, positions


def braid_permutation(letters, strands):
    """
    Final position of each strand.

    Returns:
        list: Entry p-1 is the starting position of the strand ending in position p
    """
    _, _, final = thread_braid(letters, list(range(1, strands + 1)), 'perm')
    return final


def parse_braid(text, strands):
    """
    Build the closure of a braid as a LinkDiagram.

    Components are ordered by the lowest starting position of their strands;
    each one starts at the bottom of that strand.

    Args:
        text (str or list): Braid word text, or a list of signed indices
        strands (int): Number of strands

    Returns:
        LinkDiagram: The braid closure

    Raises:
        BraidError: If the strand count is not positive or a generator is out of range
    """
    if not isinstance(strands, int) or strands < 1:
        raise BraidError(f"Strand count must be a positive integer, got {strands!r}")
    letters = parse_braid_word(text) if isinstance(text, str) else list(text)

    passages, signs, final = thread_braid(letters, list(range(1, strands + 1)), 'b')
    # the strand ending in position p continues as the strand starting at p
    follows = {final[p - 1]: p for p in range(1, strands + 1)}

    sequences, seen = [], set()
    for start in range(1, strands + 1):
        if start in seen:
            continue
        sequence, strand = [], start
        while strand not in seen:
            seen.add(strand)
            sequence.extend(passages[strand])
            strand = follows[strand]
        sequences.append(sequence)

    diagram = LinkDiagram.from_gauss(sequences, signs)
    logger.debug("Closed braid %s on %d strands: %r", letters, strands, diagram)
    return diagram
