"""Ideals of ZQ_4n as integer lattices in Z^(4n).

The main player is ``P = <a + b*y, x + 1>``.  Everything is extensional:
an ideal is the lattice spanned by ``g * generator`` over all group
elements g, and closure is checked on the generators x and y.
"""

from dataclasses import dataclass
from math import gcd, lcm

from .groupring import (GroupParams, ParameterError, RingElement, gens,
                        left_mult_matrix, norm_element, right_mult_matrix)
from .zlattice import IntegerLattice, nontrivial, quotient_invariants


@dataclass(frozen=True)
class IdealSpec:
    params: GroupParams
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise ValueError("an ideal needs at least one generator")
        for g in self.generators:
            if g.params != self.params:
                raise ParameterError("generator over a different group")
            if g.rational:
                raise TypeError("ideal generators must be integral")


@dataclass(frozen=True)
class IdealLattice:
    spec: IdealSpec
    lattice: IntegerLattice

    @property
    def params(self):
        return self.spec.params

    def elements_basis(self):
        """The HNF basis as ring elements."""
        return [RingElement(self.params, row) for row in self.lattice.basis]

    def __contains__(self, p):
        return p.coeffs in self.lattice


def ideal(params, *generators):
    return IdealSpec(params, tuple(generators))


def p_ideal(params, a, b):
    """The ideal ``<a + b*y, x + 1>``."""
    x, y = gens(params)
    return ideal(params, a + b * y, x + 1)


def _closed_under(lattice, mats):
    return all(lattice.transform(m) <= lattice for m in mats)


def left_ideal_lattice(spec, verify=True):
    """Z-span of ``{g * gen}``; closure under left mult by x, y is checked."""
    rows = []
    for gen in spec.generators:
        rows.extend(right_mult_matrix(gen))
    lat = IntegerLattice(spec.params.order, rows)
    if verify:
        x, y = gens(spec.params)
        if not _closed_under(lat, [left_mult_matrix(x), left_mult_matrix(y)]):
            raise AssertionError("left ideal lattice is not closed under ZG")
    return IdealLattice(spec, lat)


def is_two_sided(ideal_lat):
    x, y = gens(ideal_lat.params)
    return _closed_under(ideal_lat.lattice, [right_mult_matrix(x), right_mult_matrix(y)])


def quotient_structure(ideal_lat):
    """Nontrivial invariant factors of ``ZQ_4n / I`` (0 = free summand)."""
    full = IntegerLattice.full(ideal_lat.params.order)
    return nontrivial(quotient_invariants(ideal_lat.lattice, full))


def projectivity_criterion(params, a, b):
    """Arithmetic of the projectivity test for ``P = <a+by, x+1>``.

    k = a^2 + b^2 for odd n and a^2 - b^2 for even n; P is projective when
    gcd(k, 2n) = 1.  The quotient ZG/P is computed as well and, when the
    hypothesis holds, its exponent is checked to be prime to 4n.
    """
    n = params.n
    k = a * a + b * b if n % 2 else a * a - b * b
    d = gcd(a, b)
    t = k // d if d else 0
    coprime = gcd(k, 2 * n) == 1
    quotient = quotient_structure(left_ideal_lattice(p_ideal(params, a, b)))
    exponent = 0 if 0 in quotient else lcm(1, *quotient)
    out = {
        "n": n, "a": a, "b": b, "k": k, "d": d, "t": t,
        "coprime": coprime,
        "quotient": quotient,
        "exponent": exponent,
        "expected_quotient": sorted(nontrivial([abs(d), abs(t)])),
    }
    if coprime:
        out["exponent_coprime_to_4n"] = exponent != 0 and gcd(exponent, 4 * n) == 1
    return out


def norm_product_lattice(ideal_lat):
    """Lattice of ``N * I``, spanned by N times the basis of I."""
    N = norm_element(ideal_lat.params)
    rows = [(N * p).coeffs for p in ideal_lat.elements_basis()]
    return IntegerLattice(ideal_lat.params.order, rows)
