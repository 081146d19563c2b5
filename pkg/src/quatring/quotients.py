"""Quotient rings of ZQ_4n, the two Milnor squares, pullbacks and unit cosets.

For odd n the group ring splits along two pullback squares of rings::

    ZQ/<x^n+1> --> ZQ/<psi>            ZQ --------> ZQ/<x^n+1>
        |              |               |               |
    ZQ/<x+1> ---> Z_n[y]/(y^2+1)       ZD_2n -----> F_2 D_2n

A :class:`QuotientRing` is ``Z^(4n)`` modulo a two-sided ideal lattice;
its additive group is read off a Smith normal form, which also supplies
coordinates used to build pullback lattices.
"""

from dataclasses import asdict, dataclass, field
from math import gcd, prod

from .groupring import (GroupParams, ParameterError, RingElement, gens,
                        left_mult_matrix, right_mult_matrix, special_elements)
from .ideals import (IdealLattice, IdealSpec, ideal, is_two_sided,
                     left_ideal_lattice, p_ideal)
from .report import ReportBuilder
from .zlattice import (IntegerLattice, block_matrix, is_sublattice, kernel_mod,
                       lattice_intersect, lattice_sum, matmul, reduce_mod, snf,
                       vecmat)


class NotTwoSided(ValueError):
    pass


class NotAUnit(ValueError):
    pass


class QuotientRing:
    """``ZQ_4n / I`` with canonical representatives and SNF coordinates."""

    def __init__(self, modulus, name=None):
        if isinstance(modulus, IdealSpec):
            modulus = left_ideal_lattice(modulus)
        if not is_two_sided(modulus):
            raise NotTwoSided("quotient by a one-sided ideal is not a ring")
        self.ideal = modulus
        self.params = modulus.params
        self.name = name or "ZQ/<" + ", ".join(map(repr, modulus.spec.generators)) + ">"
        size = self.params.order
        basis = [list(r) for r in modulus.lattice.basis]
        res = snf(basis, size)
        k = len(res.invariant_factors)
        self._V = res.V
        self._Vinv = res.V_inv
        # coordinate slots: torsion positions (d > 1) then free positions
        self._slots = [(c, d) for c, d in enumerate(res.invariant_factors) if d != 1]
        self._slots += [(c, 0) for c in range(k, size)]
        self.moduli = [d for _, d in self._slots]

    @property
    def rank(self):
        """Free rank of the additive group."""
        return self.moduli.count(0)

    @property
    def additive_invariants(self):
        return list(self.moduli)

    @property
    def is_finite(self):
        return self.rank == 0

    def order(self):
        return prod(self.moduli) if self.is_finite else 0

    def coord_matrix(self):
        """``4n x len(moduli)`` matrix sending ZG vectors to coordinates."""
        return [[row[c] for c, _ in self._slots] for row in self._V]

    def free_coord_matrix(self):
        if not all(d == 0 for d in self.moduli):
            raise ValueError(f"{self.name} has torsion; no free coordinates")
        return self.coord_matrix()

    def coords(self, p):
        v = p.coeffs if isinstance(p, RingElement) else p
        w = vecmat(v, self._V, len(self._V))
        return tuple(w[c] % d if d else w[c] for c, d in self._slots)

    def lift(self, coords):
        w = [0] * self.params.order
        for (c, _), val in zip(self._slots, coords):
            w[c] = val
        return self.reduce(RingElement(self.params, vecmat(w, self._Vinv)))

    def reduce(self, p):
        return RingElement(self.params, reduce_mod(p.coeffs, self.ideal.lattice))

    def equal(self, p, q):
        return (p - q) in self.ideal

    def mul(self, p, q):
        return self.reduce(p * q)

    def add(self, p, q):
        return self.reduce(p + q)

    def is_unit(self, alpha):
        """For a finite quotient: is left multiplication by alpha injective?"""
        if not self.is_finite:
            raise ValueError("unit test implemented for finite quotients only")
        mat = matmul(left_mult_matrix(alpha), self.coord_matrix())
        pre = kernel_mod(mat, self.moduli)
        return pre == self.ideal.lattice

    def contains_ideal_of(self, other):
        """True when the projection other -> self is well defined."""
        return is_sublattice(other.ideal.lattice, self.ideal.lattice)

    def __repr__(self):
        return f"QuotientRing({self.name}, invariants={self.moduli})"


def quotient_ring(modulus, name=None):
    return QuotientRing(modulus, name)


def milnor_corners(params):
    """The seven rings of the two squares, keyed by role."""
    params.require_odd()
    n = params.n
    x, _ = gens(params)
    psi = special_elements(params)["psi"]
    xn = x ** n
    return {
        "ZG": QuotientRing(ideal(params, 0 * x), "ZQ"),
        "xn+1": QuotientRing(ideal(params, xn + 1), f"ZQ/<x^{n}+1>"),
        "dihedral": QuotientRing(ideal(params, xn - 1), f"ZD_{2 * n}"),
        "F2D": QuotientRing(ideal(params, xn + 1, xn - 1), f"F_2 D_{2 * n}"),
        "psi": QuotientRing(ideal(params, psi), "ZQ/<psi>"),
        "x+1": QuotientRing(ideal(params, x + 1), "ZQ/<x+1>"),
        "fiber": QuotientRing(ideal(params, psi, x + 1), f"Z_{n}[y]/(y^2+1)"),
    }


def _square_checks(rb, tag, top, left, right, fiber):
    """Ring-theoretic pullback conditions for the square top->(left,right)->fiber."""
    I0, I1, I2, J = (r.ideal.lattice for r in (top, left, right, fiber))
    rb.require(f"{tag}: top maps onto both sides", I0 <= I1 and I0 <= I2)
    rb.require(f"{tag}: sides map onto fiber", I1 <= J and I2 <= J)
    # both composites are the canonical projection ZG -> ZG/J
    rb.require(f"{tag}: square commutes (fiber ideal = I1 + I2)",
               lattice_sum(I1, I2) == J)
    rb.require(f"{tag}: pullback (I1 meet I2 = I0)", lattice_intersect(I1, I2) == I0)
    rb.record(f"{tag}_corners", {
        r.name: {"rank": r.rank, "torsion": [d for d in r.moduli if d]}
        for r in (top, left, right, fiber)})


def verify_milnor_squares(params):
    rb = ReportBuilder("milnor-squares", "prop22: the two Milnor squares")
    R = milnor_corners(params)
    n = params.n
    _square_checks(rb, "square I", R["ZG"], R["xn+1"], R["dihedral"], R["F2D"])
    _square_checks(rb, "square II", R["xn+1"], R["psi"], R["x+1"], R["fiber"])
    rb.record("square_II_ranks", [R["xn+1"].rank, R["psi"].rank, R["x+1"].rank])
    rb.require("ZQ/<x^n+1> has rank 2n", R["xn+1"].rank == 2 * n)
    rb.require("ZQ/<x+1> has rank 2 (Gaussian integers)", R["x+1"].rank == 2)
    rb.require(f"fiber Z_{n}[y]/(y^2+1) has {n * n} elements", R["fiber"].order() == n * n)
    rb.require(f"F_2 D_{2 * n} has 2^{2 * n} elements", R["F2D"].order() == 2 ** (2 * n))
    gaussian = GaussianResidues(n)
    fiber = R["fiber"]
    x, y = gens(params)
    # the explicit model agrees with the quotient on generators and relations
    ok = all(gaussian.from_group_ring(g) == gaussian.from_group_ring(fiber.reduce(g))
             for g in (x, y, x * y))
    ok = ok and all(gaussian.from_group_ring(r) == gaussian.zero
                    for r in fiber.ideal.elements_basis())
    ok = ok and {gaussian.from_group_ring(x ** 0), gaussian.from_group_ring(y)} == {
        (1, 0), (0, 1)}
    rb.require("fiber matches Z_n[y]/(y^2+1) via x -> -1", ok)
    return rb.finish()


# finite fiber ring Z_p[y]/(y^2+1)

class FiniteRing:
    """Minimal protocol: ``elements``, ``add``, ``mul``, ``zero``, ``one``."""

    zero = None
    one = None

    def elements(self):
        raise NotImplementedError

    def add(self, u, v):
        raise NotImplementedError

    def mul(self, u, v):
        raise NotImplementedError


class GaussianResidues(FiniteRing):
    """``Z_m[y]/(y^2+1)``, elements are pairs ``(a, b)`` meaning a + b*y."""

    def __init__(self, m):
        self.m = m
        self.zero = (0, 0)
        self.one = (1 % m, 0)

    def __call__(self, a, b=0):
        return (a % self.m, b % self.m)

    def elements(self):
        return [(a, b) for a in range(self.m) for b in range(self.m)]

    def add(self, u, v):
        return ((u[0] + v[0]) % self.m, (u[1] + v[1]) % self.m)

    def mul(self, u, v):
        a, b = u
        c, d = v
        return ((a * c - b * d) % self.m, (a * d + b * c) % self.m)

    def from_group_ring(self, p):
        """Image under x -> -1, y -> y (so x^n -> -1 = y^2 for odd n)."""
        n2 = 2 * p.params.n
        a = b = 0
        for k, c in enumerate(p.coeffs):
            if c:
                s = c if (k % n2) % 2 == 0 else -c
                if k < n2:
                    a += s
                else:
                    b += s
        return (a % self.m, b % self.m)


@dataclass
class UnitGroup:
    ring: FiniteRing
    elements: list
    inverse: dict
    order: int
    cyclic: bool
    generator: object = None

    def element_order(self, u):
        k, v = 1, u
        while v != self.ring.one:
            v = self.ring.mul(v, u)
            k += 1
        return k


def finite_units(ring):
    """Brute-force unit group of a finite (commutative) ring."""
    elems = ring.elements()
    inverse = {}
    for u in elems:
        for v in elems:
            if ring.mul(u, v) == ring.one:
                inverse[u] = v
                break
    units = [u for u in elems if u in inverse]
    group = UnitGroup(ring, units, inverse, len(units), False)
    for u in units:
        if group.element_order(u) == len(units):
            group.cyclic = True
            group.generator = u
            break
    return group


def generated_subgroup(ring, generators):
    sub = {ring.one}
    frontier = [ring.one]
    while frontier:
        nxt = []
        for h in frontier:
            for g in generators:
                hg = ring.mul(h, g)
                if hg not in sub:
                    sub.add(hg)
                    nxt.append(hg)
        frontier = nxt
    return sub


@dataclass
class CosetCertificate:
    target: tuple
    unit_group_order: int
    unit_group_cyclic: bool
    subgroup_generators: list
    subgroup_order: int
    coset_group_order: int
    coset_group_generator: tuple
    generator_coset_order: int
    coset_group_cyclic: bool
    class_of_target: int
    fiber: str = "Z_7[y]/(y^2+1)"
    conclusion: str = ""
    notes: list = field(default_factory=list)

    @property
    def nontrivial(self):
        return self.class_of_target != 0

    def to_dict(self):
        d = asdict(self)
        d["nontrivial"] = self.nontrivial
        for key in ("target", "coset_group_generator"):
            d[key] = list(d[key])
        d["subgroup_generators"] = [list(g) for g in d["subgroup_generators"]]
        return d


PSI_NOTE = ("the corner written ZQ28/<phi_14> is taken to be ZQ28/<psi_14>, "
            "psi_14 = 1 - x + x^2 - x^3 + x^4 - x^5 + x^6")


def coset_classification(a, b, n=7):
    """Class of ``[a + b*y]`` in ``(Z_7[y]/(y^2+1))^* / <3, y>``.

    Returns the exponent e with ``[a+by] = [1+2y]^e``.
    """
    if n != 7:
        raise ParameterError("the four-class coset picture is specific to n = 7")
    F = GaussianResidues(7)
    units = finite_units(F)
    target = F(a, b)
    if target not in units.inverse:
        raise NotAUnit(f"{a}+{b}y is not a unit mod 7; gcd(a^2+b^2, 14) != 1")
    sub_gens = [F(3), F(0, 1)]
    H = generated_subgroup(F, sub_gens)

    def coset(u):
        return frozenset(F.mul(u, h) for h in H)

    cosets = {coset(u) for u in units.elements}
    gen = F(1, 2)
    powers = [coset(F.one)]
    g = gen
    while coset(g) != powers[0]:
        powers.append(coset(g))
        g = F.mul(g, gen)
    cls = powers.index(coset(target))
    return CosetCertificate(
        target=target,
        unit_group_order=units.order,
        unit_group_cyclic=units.cyclic,
        subgroup_generators=sub_gens,
        subgroup_order=len(H),
        coset_group_order=len(cosets),
        coset_group_generator=gen,
        generator_coset_order=len(powers),
        coset_group_cyclic=len(powers) == len(cosets),
        class_of_target=cls,
        notes=[PSI_NOTE],
    )


CONDITIONAL = ("Conditional on Swan's classification of these pullbacks (an external "
               "result, cited and not recomputed here): the coset class is nontrivial, "
               "so P/<x^7+1> is not free over ZQ28/<x^7+1>; hence P is not free and "
               "P/NP is not isomorphic to ZQ28/<N>.")


def nonfreeness_certificate(params, a, b):
    if params.n != 7:
        raise ParameterError("nonfreeness certificate is specific to Q_28")
    cert = coset_classification(a, b, params.n)
    if cert.nontrivial:
        cert.conclusion = CONDITIONAL
    else:
        cert.conclusion = "trivial coset class: no nonfreeness conclusion is drawn"
    return cert


# pullbacks

def _image_rows(ring, sub):
    """Rows of ``sub`` (a lattice in ZG coordinates, or None) in ring coordinates."""
    C = ring.free_coord_matrix()
    basis = (IntegerLattice.full(ring.params.order) if sub is None else sub).basis
    return [vecmat(r, C, len(ring.moduli)) for r in basis], basis


def pullback_lattice(R1, R2, fiber, alpha, sub1=None, sub2=None):
    """``{(e, f) in L1 + L2 : e = alpha*f in the fiber}`` in coordinates of R1 + R2.

    ``sub1``/``sub2`` are lattices in ZG whose images in R1/R2 are L1/L2
    (whole rings by default).  R1 and R2 must be torsion-free.
    """
    if not (fiber.contains_ideal_of(R1) and fiber.contains_ideal_of(R2)):
        raise ValueError("both rings must map onto the fiber")
    if fiber.is_finite and not fiber.is_unit(alpha):
        raise NotAUnit(f"{alpha!r} is not a unit of {fiber.name}")
    img1, b1 = _image_rows(R1, sub1)
    img2, b2 = _image_rows(R2, sub2)
    CF = fiber.coord_matrix()
    width = len(fiber.moduli)
    amul = left_mult_matrix(alpha)
    rel = [vecmat(r, CF, width) for r in b1]
    rel += [[-v for v in vecmat(vecmat(r, amul), CF, width)] for r in b2]
    K = kernel_mod(rel, fiber.moduli, width)
    r1, r2 = len(R1.moduli), len(R2.moduli)
    emb = [row + [0] * r2 for row in img1] + [[0] * r1 + row for row in img2]
    return IntegerLattice(r1 + r2, [vecmat(k, emb, r1 + r2) for k in K.basis])


def pair_module_lattice(R1, R2, pairs):
    """Z-span of ``{(g*e, g*f)}`` over group elements g, in R1 + R2 coordinates."""
    C1, C2 = R1.free_coord_matrix(), R2.free_coord_matrix()
    rows = []
    for e, f in pairs:
        rows.extend(block_matrix([[matmul(right_mult_matrix(e), C1),
                                   matmul(right_mult_matrix(f), C2)]]))
    return IntegerLattice(len(R1.moduli) + len(R2.moduli), rows)


def verify_prop22(params, a, b):
    params.require_odd()
    n = params.n
    if gcd(a * a + b * b, 2 * n) != 1:
        raise ParameterError("need gcd(a^2 + b^2, 2n) = 1")
    rb = ReportBuilder("prop22-pullbacks", "prop22: P/<x^n+1> and P as pullbacks")
    R = milnor_corners(params)
    x, y = gens(params)
    psi = special_elements(params)["psi"]
    one = x ** 0
    u = a + b * y
    P = left_ideal_lattice(p_ideal(params, a, b)).lattice

    # square II
    R0, R1, R2, F = R["xn+1"], R["psi"], R["x+1"], R["fiber"]
    rb.require("a+by is a unit of the fiber", F.is_unit(u))
    Pbar = pullback_lattice(R1, R2, F, u)
    two = pair_module_lattice(R1, R2, [(u, one), (x + 1, 0 * x)])
    five = pair_module_lattice(R1, R2, [(u, one), (0 * x, psi), (x + 1, 0 * x),
                                        (0 * x, n * one), (n * one, 0 * x)])
    rb.require("(a+by, 1), (x+1, 0) generate Pbar", two == Pbar,
               rank_generated=two.rank, rank_pullback=Pbar.rank)
    rb.require("five-element generating set spans Pbar", five == Pbar)
    lhs = (R1.coords(psi * u), R2.coords(psi))
    rhs = (R1.coords(0 * x), R2.coords(psi))
    rb.require("(0, psi) = psi*(a+by, 1)", lhs == rhs)
    rb.require("n = psi mod <x+1>", R2.equal(psi, n * one))
    rb.require("<x^n+1> inside P", R0.ideal.lattice <= P)
    P_mod = P.transform(R0.free_coord_matrix())
    rb.record("rank_Pbar", Pbar.rank)
    rb.record("rank_P_mod_xn+1", P_mod.rank)
    rb.require("rank Pbar = rank P/<x^n+1> = 2n", Pbar.rank == P_mod.rank == 2 * n)

    # square I
    RD, F2 = R["dihedral"], R["F2D"]
    Pprime = pullback_lattice(R0, RD, F2, one, sub1=P)
    gens3 = pair_module_lattice(R0, RD, [(u, u), (x + 1, x + 1), (0 * x, 2 * one)])
    tau = IntegerLattice(R0.rank + RD.rank,
                         [list(R0.coords(r)) + list(RD.coords(r)) for r in P.basis])
    xn1 = x ** n + 1
    rb.require("(0, 2) = tau(x^n+1)",
               (R0.coords(xn1), RD.coords(xn1)) == (R0.coords(0 * x), RD.coords(2 * one)))
    rb.require("{(a+by,a+by), (x+1,x+1), (0,2)} generate P'", gens3 == Pprime)
    rb.require("tau(P) = P'", tau == Pprime)
    rb.record("rank_Pprime", Pprime.rank)
    rb.require("rank P' = rank P = 4n", Pprime.rank == P.rank == 4 * n)
    full = pullback_lattice(R0, RD, F2, one)
    diag = pair_module_lattice(R0, RD, [(one, one)])
    rb.require("square I with alpha=1 rebuilds ZQ", full == diag and full.rank == 4 * n)
    return rb.finish()
