"""Generalized quaternion groups Q_4n and their integral/rational group rings.

Group elements are kept in the normal form ``x^i y^j`` with ``0 <= i < 2n``
and ``j in {0, 1}``, reduced with ``y x = x^-1 y`` and ``y^2 = x^n``.
Ring elements are dense coefficient tuples over the 4n normal forms, in
the basis order ``(j, i)`` lexicographic, i.e. index ``j*2n + i``.

>>> P = GroupParams(7)
>>> x, y = gens(P)
>>> (y * x) == x**13 * y
True
>>> (x + 1) * y == y * x**-1 * (x + 1)
True
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational

from ._kernels import convolve


class ParameterError(ValueError):
    """Operands built over different groups, or parameters out of range."""


@dataclass(frozen=True)
class GroupParams:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, Integral) or self.n < 2:
            raise ParameterError(f"need an integer n >= 2, got {self.n!r}")

    @property
    def order(self):
        return 4 * self.n

    def require_odd(self):
        if self.n % 2 == 0:
            raise ParameterError(f"n must be odd here, got n={self.n}")


@dataclass(frozen=True)
class GroupElement:
    params: GroupParams
    i: int
    j: int

    def __post_init__(self):
        if not (0 <= self.i < 2 * self.params.n) or self.j not in (0, 1):
            raise ParameterError(f"(i={self.i}, j={self.j}) is not a normal form")

    @classmethod
    def word(cls, params, i, j=0):
        """Normal form of ``x^i y^j`` for arbitrary integers i, j."""
        n = params.n
        j %= 4
        if j >= 2:
            i += n
            j -= 2
        return cls(params, i % (2 * n), j)

    @property
    def index(self):
        return self.j * 2 * self.params.n + self.i

    def __mul__(self, other):
        return mul_group(self, other)

    def inverse(self):
        n = self.params.n
        if self.j == 0:
            return GroupElement(self.params, (-self.i) % (2 * n), 0)
        # (x^i y)^-1 = y^-1 x^-i = x^n y x^-i = x^(n+i) y
        return GroupElement(self.params, (self.i + n) % (2 * n), 1)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = GroupElement(self.params, 0, 0)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __repr__(self):
        return _monomial_str(self.i, self.j) or "1"


def _mul_indices(n, i1, j1, i2, j2):
    if j1 == 0:
        return (i1 + i2) % (2 * n), j2
    i = i1 - i2
    j = 1 + j2
    if j == 2:
        i += n
        j = 0
    return i % (2 * n), j


def mul_group(g, h):
    if g.params != h.params:
        raise ParameterError("group elements from different groups")
    i, j = _mul_indices(g.params.n, g.i, g.j, h.i, h.j)
    return GroupElement(g.params, i, j)


@lru_cache(maxsize=None)
def elements(params):
    """All 4n group elements in basis order."""
    n = params.n
    return tuple(GroupElement(params, i, j) for j in (0, 1) for i in range(2 * n))


@lru_cache(maxsize=None)
def mult_table(params):
    """``table[a][b]`` = basis index of (element a)(element b)."""
    n = params.n
    m = 2 * n
    rows = []
    for a in range(4 * n):
        i1, j1 = a % m, a // m
        row = []
        for b in range(4 * n):
            i, j = _mul_indices(n, i1, j1, b % m, b // m)
            row.append(j * m + i)
        rows.append(tuple(row))
    return tuple(rows)


def _monomial_str(i, j):
    parts = []
    if i == 1:
        parts.append("x")
    elif i:
        parts.append(f"x^{i}")
    if j:
        parts.append("y")
    return "*".join(parts)


class RingElement:
    """Element of ZQ_4n (``rational=False``) or QQ_4n (``rational=True``)."""

    __slots__ = ("params", "coeffs", "rational")

    def __init__(self, params, coeffs, rational=False):
        coeffs = tuple(coeffs)
        if len(coeffs) != params.order:
            raise ParameterError(
                f"expected {params.order} coefficients, got {len(coeffs)}")
        if rational:
            coeffs = tuple(Fraction(c) for c in coeffs)
        else:
            for c in coeffs:
                if not isinstance(c, Integral):
                    raise TypeError(f"non-integer coefficient {c!r}; use rational=True")
            coeffs = tuple(int(c) for c in coeffs)
        self.params = params
        self.coeffs = coeffs
        self.rational = rational

    # construction helpers

    @classmethod
    def zero(cls, params, rational=False):
        return cls(params, [0] * params.order, rational)

    @classmethod
    def scalar(cls, params, c, rational=False):
        coeffs = [0] * params.order
        coeffs[0] = c
        return cls(params, coeffs, rational or not isinstance(c, Integral))

    @classmethod
    def monomial(cls, params, i, j=0, c=1):
        g = GroupElement.word(params, i, j)
        coeffs = [0] * params.order
        coeffs[g.index] = c
        return cls(params, coeffs, not isinstance(c, Integral))

    @classmethod
    def from_group(cls, g):
        return cls.monomial(g.params, g.i, g.j)

    @classmethod
    def from_triples(cls, params, triples, rational=False):
        """Inverse of :meth:`triples`; repeated monomials accumulate."""
        coeffs = [0] * params.order
        for c, i, j in triples:
            if isinstance(c, str):
                c = Fraction(c)
            coeffs[GroupElement.word(params, i, j).index] += c
        if not rational and any(isinstance(c, Fraction) and c.denominator != 1
                                for c in coeffs):
            rational = True
        if not rational:
            coeffs = [int(c) for c in coeffs]
        return cls(params, coeffs, rational)

    def triples(self):
        """Sparse encoding ``[[coefficient, i, j], ...]`` in basis order.

        Rational coefficients are written as strings such as ``"14/195"``.
        """
        m = 2 * self.params.n
        out = []
        for k, c in enumerate(self.coeffs):
            if c:
                if self.rational:
                    c = str(c)
                out.append([c, k % m, k // m])
        return out

    def to_rational(self):
        return RingElement(self.params, self.coeffs, rational=True)

    def to_integer(self):
        if any(Fraction(c).denominator != 1 for c in self.coeffs):
            raise ValueError("element has non-integral coefficients")
        return RingElement(self.params, [int(c) for c in self.coeffs])

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.params != self.params:
                raise ParameterError(
                    f"Q_{self.params.order} vs Q_{other.params.order}")
            if other.rational != self.rational:
                raise TypeError("mixing integral and rational group-ring elements")
            return other
        if isinstance(other, Rational):
            return RingElement.scalar(self.params, other, self.rational)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.params,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)],
                           self.rational)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.params, [-a for a in self.coeffs], self.rational)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, RingElement):
            return self._scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        zero = Fraction(0) if self.rational else 0
        prod = convolve(self.coeffs, other.coeffs, mult_table(self.params), zero)
        return RingElement(self.params, prod, self.rational)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self._scale(other)
        return NotImplemented

    def _scale(self, c):
        rational = self.rational or not isinstance(c, Integral)
        return RingElement(self.params, [c * a for a in self.coeffs], rational)

    def __pow__(self, k):
        if k < 0:
            support = [(idx, c) for idx, c in enumerate(self.coeffs) if c]
            if len(support) != 1 or support[0][1] not in (1, -1):
                raise ValueError("negative powers only for +-(group element)")
            idx, c = support[0]
            g = elements(self.params)[idx].inverse()
            base = RingElement.monomial(self.params, g.i, g.j, c)
            if self.rational:
                base = base.to_rational()
            k = -k
        else:
            base = self
        out = RingElement.scalar(self.params, 1, self.rational)
        for _ in range(k):
            out = out * base
        return out

    # comparisons / inspection

    def __eq__(self, other):
        if isinstance(other, Rational) and not isinstance(other, RingElement):
            other = RingElement.scalar(self.params, other, self.rational)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.params, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not self

    def augmentation(self):
        return sum(self.coeffs)

    def coefficient(self, i, j=0):
        return self.coeffs[GroupElement.word(self.params, i, j).index]

    def __repr__(self):
        m = 2 * self.params.n
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = _monomial_str(k % m, k // m)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def ring_add(p, q):
    return p + q


def ring_mul(p, q):
    return p * q


def augmentation(p):
    """Sum of coefficients; the ring map ZQ_4n -> Z."""
    return p.augmentation()


def gens(params, rational=False):
    """The generators ``(x, y)`` as ring elements."""
    x = RingElement.monomial(params, 1, 0)
    y = RingElement.monomial(params, 0, 1)
    if rational:
        return x.to_rational(), y.to_rational()
    return x, y


def one(params, rational=False):
    return RingElement.scalar(params, 1, rational)


def norm_element(params):
    """N, the sum of all group elements."""
    return RingElement(params, [1] * params.order)


def alternating_sum(params, terms):
    """``1 - x + x^2 - ... +/- x^(terms-1)``."""
    coeffs = [0] * params.order
    for k in range(terms):
        coeffs[GroupElement.word(params, k).index] += (-1) ** k
    return RingElement(params, coeffs)


def special_elements(params):
    """The named constants N, Sigma^- and psi_2n.

    ``sigma_minus`` runs over x^0..x^(2n-1); ``psi`` over x^0..x^(n-1).
    """
    return {
        "N": norm_element(params),
        "sigma_minus": alternating_sum(params, 2 * params.n),
        "psi": alternating_sum(params, params.n),
    }


def right_mult_matrix(p):
    """Integer matrix of ``v -> v*p`` on row vectors; row g is g*p."""
    if p.rational:
        raise TypeError("right_mult_matrix needs an integral element")
    table = mult_table(p.params)
    size = p.params.order
    mat = [[0] * size for _ in range(size)]
    support = [(b, c) for b, c in enumerate(p.coeffs) if c]
    for a in range(size):
        row = mat[a]
        ta = table[a]
        for b, c in support:
            row[ta[b]] += c
    return mat


def left_mult_matrix(p):
    """Integer matrix of ``v -> p*v`` on row vectors; row g is p*g."""
    if p.rational:
        raise TypeError("left_mult_matrix needs an integral element")
    table = mult_table(p.params)
    size = p.params.order
    mat = [[0] * size for _ in range(size)]
    support = [(b, c) for b, c in enumerate(p.coeffs) if c]
    for a in range(size):
        row = mat[a]
        for b, c in support:
            row[table[b][a]] += c
    return mat
