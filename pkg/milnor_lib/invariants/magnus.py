"""
Truncated noncommutative power series and the Magnus expansion.

Series live in Z<<X_1, ..., X_n>> modulo terms of degree > k. A monomial
X_{i_1} ... X_{i_p} is stored as the index tuple (i_1, ..., i_p); the empty
tuple is the constant term. Coefficients are Python ints, so they never
overflow.
"""

from ..core.errors import InvariantError


class TruncatedSeries:
    """
    Element of Z<<X_1..X_n>> / (degree > k).

    Instances are treated as immutable; every operation returns a new series.

    Attributes:
        n (int): Number of variables
        k (int): Degree bound
        terms (dict): Index tuple -> nonzero int coefficient
    """

    __slots__ = ('n', 'k', '_terms')

    def __init__(self, n, k, terms=None):
        if n < 0 or k < 0:
            raise InvariantError(f"Series needs n >= 0 and k >= 0, got n={n}, k={k}")
        self.n = n
        self.k = k
        self._terms = {}
        for monomial, value in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) > k or not value:
                continue
            if any(not 1 <= i <= n for i in monomial):
                raise InvariantError(f"Monomial {monomial} uses a variable outside 1..{n}")
            self._terms[monomial] = value

    @classmethod
    def one(cls, n, k):
        return cls(n, k, {(): 1})

    @classmethod
    def meridian(cls, i, n, k, exp=1):
        """
        Magnus image of m_i^exp: 1 + X_i, or 1 - X_i + X_i^2 - ... for exp = -1.
        """
        if not 1 <= i <= n:
            raise InvariantError(f"Meridian {i} outside 1..{n}")
        if exp == 1:
            return cls(n, k, {(): 1, (i,): 1})
        if exp == -1:
            return cls(n, k, {(i,) * d: (-1) ** d for d in range(k + 1)})
        return cls.meridian(i, n, k).power(exp)

    @property
    def terms(self):
        return dict(self._terms)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise InvariantError(f"Cannot combine a series with {type(other).__name__}")
        if (self.n, self.k) != (other.n, other.k):
            raise InvariantError(f"Series shapes differ: (n={self.n}, k={self.k}) "
                                 f"vs (n={other.n}, k={other.k})")

    def __add__(self, other):
        self._check(other)
        terms = dict(self._terms)
        for monomial, value in other._terms.items():
            terms[monomial] = terms.get(monomial, 0) + value
        return TruncatedSeries(self.n, self.k, terms)

    def __neg__(self):
        return TruncatedSeries(self.n, self.k, {m: -v for m, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Product with every term of degree above k discarded."""
        self._check(other)
        terms = {}
        for left, a in self._terms.items():
            room = self.k - len(left)
            for right, b in other._terms.items():
                if len(right) > room:
                    continue
                monomial = left + right
                terms[monomial] = terms.get(monomial, 0) + a * b
        return TruncatedSeries(self.n, self.k, terms)

    def constant(self):
        return self._terms.get((), 0)

    def inverse(self):
        """
        Multiplicative inverse of a series with constant term +1 or -1.

        Raises:
            InvariantError: If the constant term is not a unit
        """
        c = self.constant()
        if c not in (1, -1):
            raise InvariantError(f"Series with constant term {c} is not invertible over Z")
        # s = c(1 + h)  =>  s^-1 = c(1 - h + h^2 - ...)
        scaled = TruncatedSeries(self.n, self.k, {m: c * v for m, v in self._terms.items()})
        h = scaled - TruncatedSeries.one(self.n, self.k)
        result = TruncatedSeries.one(self.n, self.k)
        term = TruncatedSeries.one(self.n, self.k)
        for _ in range(self.k):
            term = -(term * h)
            if not term._terms:
                break
            result = result + term
        return TruncatedSeries(self.n, self.k, {m: c * v for m, v in result._terms.items()})

    def power(self, exp):
        """Integer power; negative powers use the inverse."""
        base = self if exp >= 0 else self.inverse()
        result = TruncatedSeries.one(self.n, self.k)
        for _ in range(abs(exp)):
            result = result * base
        return result

    def truncate(self, k):
        """Forget terms above degree k (k may not exceed the current bound)."""
        if k > self.k:
            raise InvariantError(f"Cannot raise the truncation bound from {self.k} to {k}")
        return TruncatedSeries(self.n, k, self._terms)

    def coefficient(self, sequence):
        """
        Coefficient of X_{i_1} ... X_{i_p}.

        Raises:
            InvariantError: If the sequence is longer than the truncation bound
        """
        sequence = tuple(sequence)
        if len(sequence) > self.k:
            raise InvariantError(f"Sequence {sequence} is longer than the truncation bound {self.k}")
        return self._terms.get(sequence, 0)

    def degree_part(self, degree):
        """Terms of exactly the given degree."""
        return {m: v for m, v in self._terms.items() if len(m) == degree}

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.n, self.k, self._terms) == (other.n, other.k, other._terms)

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"TruncatedSeries(0, k={self.k})"
        parts = []
        for monomial in sorted(self._terms, key=lambda m: (len(m), m)):
            value = self._terms[monomial]
            name = "".join(f"X{i}" for i in monomial) or "1"
            parts.append(f"{value:+d}*{name}" if monomial else f"{value:+d}")
        return f"TruncatedSeries({' '.join(parts)}, k={self.k})"


def expand(word, n, k):
    """
    Magnus expansion of a word in the meridians m_1..m_n.

    Args:
        word (FreeWord): Word whose generators are component indices
        n (int): Number of meridians
        k (int): Degree bound

    Returns:
        TruncatedSeries: E(word) modulo degree > k

    Raises:
        InvariantError: If a letter is outside 1..n
    """
    images = {}
    result = TruncatedSeries.one(n, k)
    for gen, exp in word:
        if not isinstance(gen, int) or not 1 <= gen <= n:
            raise InvariantError(f"Letter {gen} is not a meridian index in 1..{n}")
        if (gen, exp) not in images:
            images[gen, exp] = TruncatedSeries.meridian(gen, n, k, exp)
        result = result * images[gen, exp]
    return result
