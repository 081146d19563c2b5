"""Exact integer linear algebra: HNF, SNF and lattices in Z^m.

Matrices are plain lists of lists of Python ints and act on row vectors
from the right.  An :class:`IntegerLattice` always stores its basis in
Hermite normal form, so two lattices are equal iff their bases are.
"""

from dataclasses import dataclass
from ._kernels import hnf_rows


class DimensionError(ValueError):
    pass


class ContainmentError(ValueError):
    pass


class Cancelled(Exception):
    """Raised from inside a long computation when the caller's check fires."""


# small matrix helpers

def identity(m):
    return [[int(i == j) for j in range(m)] for i in range(m)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    if len(a[0]) != inner:
        raise DimensionError(f"{len(a)}x{len(a[0])} times {inner}x?")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, v in enumerate(row):
            if v:
                brow = b[k]
                for j in range(cols):
                    acc[j] += v * brow[j]
        out.append(acc)
    return out


def vecmat(v, a, cols=None):
    if cols is None:
        cols = len(a[0]) if a else 0
    acc = [0] * cols
    for k, c in enumerate(v):
        if c:
            row = a[k]
            for j in range(cols):
                acc[j] += c * row[j]
    return acc


def transpose(a, cols=None):
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def rank(a):
    """Rank over Q, read off the HNF."""
    return len(hnf(a))


def determinant(a):
    """Exact determinant by Bareiss elimination."""
    m = [list(r) for r in a]
    size = len(m)
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if size else 1


def block_matrix(blocks):
    """Assemble a block matrix from a 2-d list of equally sized blocks."""
    out = []
    for brow in blocks:
        for r in range(len(brow[0])):
            line = []
            for blk in brow:
                line.extend(blk[r])
            out.append(line)
    return out


# normal forms

def _width(a, ncols):
    if ncols is not None:
        return ncols
    if not a:
        raise DimensionError("cannot infer the width of an empty matrix")
    return len(a[0])


def hnf(a, ncols=None):
    """Row-style Hermite normal form with zero rows removed."""
    return hnf_rows(a, _width(a, ncols))


@dataclass
class SnfResult:
    U: list
    D: list
    V: list
    invariant_factors: list
    V_inv: list = None


def snf(a, ncols=None, check=None):
    """Smith normal form ``U A V = D`` with unimodular U and V.

    ``invariant_factors`` lists the nonzero diagonal entries (d1 | d2 | ...).
    ``V_inv`` is carried along because quotient coordinates need it.
    ``check`` is an optional no-argument callable polled between pivots;
    raise :class:`Cancelled` (or anything) from it to abort.
    """
    m = len(a)
    n = _width(a, ncols)
    A = [list(r) for r in a]
    U = identity(m)
    VT = identity(n)      # rows of VT are the columns of V
    Vinv = identity(n)

    def row_addmul(M, dst, src, q):
        rs, rd = M[src], M[dst]
        M[dst] = [x - q * y for x, y in zip(rd, rs)]

    def col_addmul(dst, src, q):
        # column dst -= q * column src
        for row in A:
            if row[src]:
                row[dst] -= q * row[src]
        row_addmul(VT, dst, src, q)
        # inverse: row src += q * row dst of V^-1
        row_addmul(Vinv, src, dst, -q)

    def col_swap(c1, c2):
        for row in A:
            row[c1], row[c2] = row[c2], row[c1]
        VT[c1], VT[c2] = VT[c2], VT[c1]
        Vinv[c1], Vinv[c2] = Vinv[c2], Vinv[c1]

    t = 0
    while t < min(m, n):
        if check is not None:
            check()
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        U[t], U[i] = U[i], U[t]
        if j != t:
            col_swap(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = A[i][t]
                if v:
                    q = v // p
                    row_addmul(A, i, t, q)
                    row_addmul(U, i, t, q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                v = A[t][j]
                if v:
                    col_addmul(j, t, v // p)
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remainder in row/column t onto the pivot
                cands = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cands)
                if i != t:
                    A[t], A[i] = A[i], A[t]
                    U[t], U[i] = U[i], U[t]
                else:
                    col_swap(t, j)
                continue
            # divisibility: fold an offending row into row t and redo
            bad = None
            for i in range(t + 1, m):
                if any(v % p for v in A[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            row_addmul(A, t, bad, -1)
            row_addmul(U, t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]
        t += 1

    V = transpose(VT, n)
    factors = [A[k][k] for k in range(min(m, n)) if A[k][k]]
    # contract: U A V = D
    if m and n and matmul(matmul(U, a), V) != A:
        raise AssertionError("SNF transform check failed")
    return SnfResult(U, A, V, factors, Vinv)


# lattices

class IntegerLattice:
    """A subgroup of Z^m, stored by its HNF row basis."""

    __slots__ = ("dim", "basis")

    def __init__(self, dim, generators=(), canonical=False):
        self.dim = dim
        gens = [list(g) for g in generators]
        for g in gens:
            if len(g) != dim:
                raise DimensionError(f"vector of length {len(g)} in Z^{dim}")
        self.basis = tuple(tuple(r) for r in (gens if canonical else hnf_rows(gens, dim)))

    @classmethod
    def full(cls, dim):
        return cls(dim, identity(dim), canonical=True)

    @classmethod
    def zero(cls, dim):
        return cls(dim, (), canonical=True)

    @property
    def rank(self):
        return len(self.basis)

    def rows(self):
        return [list(r) for r in self.basis]

    def index(self):
        """|Z^m / L| for a full-rank lattice (product of HNF pivots)."""
        if self.rank != self.dim:
            return 0
        out = 1
        for k, row in enumerate(self.basis):
            out *= row[k]
        return out

    def __contains__(self, v):
        return membership(v, self)

    def __le__(self, other):
        return is_sublattice(self, other)

    def __eq__(self, other):
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __add__(self, other):
        return lattice_sum(self, other)

    def __and__(self, other):
        return lattice_intersect(self, other)

    def transform(self, a):
        """Image of the lattice under ``v -> v a``."""
        cols = len(a[0]) if a else 0
        return IntegerLattice(cols, [vecmat(r, a, cols) for r in self.basis])

    def __repr__(self):
        return f"IntegerLattice(dim={self.dim}, rank={self.rank})"


def image(a, ncols=None):
    """Lattice spanned by the rows of ``a``."""
    return IntegerLattice(_width(a, ncols), a)


def kernel(a, ncols=None):
    """Lattice of integer row vectors ``v`` with ``v a = 0``."""
    m = len(a)
    n = _width(a, ncols) if m else (ncols or 0)
    aug = [list(row) + [int(i == k) for k in range(m)] for i, row in enumerate(a)]
    h = hnf_rows(aug, n + m)
    ker = [row[n:] for row in h if not any(row[:n])]
    return IntegerLattice(m, ker)


def kernel_mod(a, moduli, ncols=None):
    """Lattice of ``v`` with ``(v a)[j] = 0 mod moduli[j]`` for each column j.

    A modulus of 0 means the column must vanish exactly.
    """
    m = len(a)
    n = _width(a, ncols) if m else len(moduli)
    if len(moduli) != n:
        raise DimensionError("one modulus per column")
    extra = [[d if k == j else 0 for k in range(n)] for j, d in enumerate(moduli) if d]
    k = kernel([list(r) for r in a] + extra, n)
    return IntegerLattice(m, [row[:m] for row in k.basis])


def _reduce(v, lattice):
    """Subtract basis rows pivot by pivot; returns (remainder, coefficients)."""
    v = list(v)
    coeffs = []
    for row in lattice.basis:
        c = next(k for k, x in enumerate(row) if x)
        for k in range(c):
            if v[k]:
                return v, None
        q, r = divmod(v[c], row[c])
        coeffs.append(q)
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return v, coeffs


def membership(v, lattice):
    if len(v) != lattice.dim:
        raise DimensionError(f"vector of length {len(v)} in Z^{lattice.dim}")
    rem, _ = _reduce(v, lattice)
    return not any(rem)


def coordinates(v, lattice):
    """Integer coefficients expressing ``v`` in the lattice basis, or None."""
    if len(v) != lattice.dim:
        raise DimensionError(f"vector of length {len(v)} in Z^{lattice.dim}")
    rem, coeffs = _reduce(v, lattice)
    if any(rem):
        return None
    return coeffs


def reduce_mod(v, lattice):
    """Canonical representative of the coset ``v + L``."""
    v = list(v)
    for row in lattice.basis:
        c = next(k for k, x in enumerate(row) if x)
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return v


def is_sublattice(l1, l2):
    if l1.dim != l2.dim:
        raise DimensionError(f"Z^{l1.dim} vs Z^{l2.dim}")
    return all(membership(r, l2) for r in l1.basis)


def lattice_sum(l1, l2):
    if l1.dim != l2.dim:
        raise DimensionError(f"Z^{l1.dim} vs Z^{l2.dim}")
    return IntegerLattice(l1.dim, list(l1.basis) + list(l2.basis))


def lattice_intersect(l1, l2):
    """Intersection of L1 and L2 from the relations s*B1 = t*B2 between the two bases."""
    if l1.dim != l2.dim:
        raise DimensionError(f"Z^{l1.dim} vs Z^{l2.dim}")
    if not l1.rank or not l2.rank:
        return IntegerLattice.zero(l1.dim)
    stacked = [list(r) for r in l1.basis] + [[-x for x in r] for r in l2.basis]
    rel = kernel(stacked, l1.dim)
    k1 = l1.rank
    return IntegerLattice(l1.dim, [vecmat(r[:k1], l1.basis, l1.dim) for r in rel.basis])


def quotient_invariants(sub, sup, check=None):
    """Invariant factors of ``sup / sub``, one per basis vector of ``sup``.

    Entries equal to 1 are trivial, 0 marks a free summand Z.
    """
    if sub.dim != sup.dim:
        raise DimensionError(f"Z^{sub.dim} vs Z^{sup.dim}")
    rel = []
    for r in sub.basis:
        c = coordinates(r, sup)
        if c is None:
            raise ContainmentError("first lattice is not contained in the second")
        rel.append(c)
    k = sup.rank
    factors = snf(rel, k, check=check).invariant_factors if rel else []
    return factors + [0] * (k - len(factors))


def nontrivial(factors):
    """Drop the unit factors from an invariant-factor list."""
    return [d for d in factors if d != 1]


# matrix file format: "rows cols" then row-major integers

def dump_matrix(a, fh, ncols=None):
    cols = _width(a, ncols) if a else (ncols or 0)
    fh.write(f"{len(a)} {cols}\n")
    for row in a:
        fh.write(" ".join(str(v) for v in row) + "\n")


def load_matrix(fh):
    tokens = fh.read().split()
    if len(tokens) < 2:
        raise ValueError("missing 'rows cols' header")
    rows, cols = int(tokens[0]), int(tokens[1])
    vals = [int(t) for t in tokens[2:]]
    if len(vals) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(vals)}")
    return [vals[r * cols:(r + 1) * cols] for r in range(rows)]
