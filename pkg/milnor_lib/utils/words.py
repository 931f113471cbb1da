"""
Free group words.

A word is a tuple of letters (generator, exponent) with exponent +1 or -1,
kept freely reduced: no letter is ever followed by its inverse.
"""


class FreeWord:
    """
    Freely reduced word in a free group.

    Generators are arbitrary hashable, orderable labels (strand ids for the
    Wirtinger group, component indices for the free group F(x_1..x_n)).

    Attributes:
        letters (tuple): Reduced (generator, +1/-1) pairs
    """

    __slots__ = ('_letters',)

    def __init__(self, letters=()):
        reduced = []
        for gen, exp in letters:
            if exp not in (1, -1):
                raise ValueError(f"Letter exponent must be +1 or -1, got {exp}")
            if reduced and reduced[-1] == (gen, -exp):
                reduced.pop()
            else:
                reduced.append((gen, exp))
        self._letters = tuple(reduced)

    @classmethod
    def generator(cls, gen, exp=1):
        """Word of length one (or zero when exp is 0), g^exp for exp in {-1, 0, 1}."""
        if exp == 0:
            return cls()
        return cls([(gen, exp)])

    @classmethod
    def power(cls, gen, exp):
        """g^exp for any integer exp."""
        step = 1 if exp > 0 else -1
        return cls([(gen, step)] * abs(exp))

    @property
    def letters(self):
        return self._letters

    def inverse(self):
        return FreeWord((gen, -exp) for gen, exp in reversed(self._letters))

    def __mul__(self, other):
        return FreeWord(self._letters + other.letters)

    def substitute(self, images):
        """
        Apply a homomorphism given on generators.

        Args:
            images (dict): Generator -> FreeWord

        Returns:
            FreeWord: Image of this word
        """
        result = []
        for gen, exp in self._letters:
            image = images[gen]
            result.extend(image.letters if exp > 0 else image.inverse().letters)
        return FreeWord(result)

    def generators(self):
        return {gen for gen, _ in self._letters}

    def __len__(self):
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self._letters == other.letters

    def __hash__(self):
        return hash(self._letters)

    def __repr__(self):
        if not self._letters:
            return "FreeWord(1)"
        body = " ".join(f"{gen}" if exp > 0 else f"{gen}^-1" for gen, exp in self._letters)
        return f"FreeWord({body})"
