"""Conics in P^3: canonical forms, residuals, intersection numbers.

A conic is stored as (plane, quadric) in K[z0..z3], both homogeneous.  The
canonical form makes equality testable: the plane is scaled so its first
nonzero coefficient (in z0, z1, z2, z3 order) is 1, the quadric is reduced
modulo the plane by eliminating that pivot variable and then made monic in
degrevlex.  Two pairs cut out the same conic iff their canonical fields agree,
because the plane of a plane conic is unique and the reduced quadric is unique
up to the scalar that monic-ization fixes.

Intersection numbers between members of the census follow the plane geometry:
equal conics have self-intersection -2 (smooth rational curve on a K3),
coplanar distinct conics meet with multiplicity 4 (Bezout in their plane), and
conics in distinct planes meet only along the common line, where the count is
the degree of the gcd of the two restricted binary quadratics (0, 1 or 2,
decided by a resultant and a proportionality test).
"""

from .errors import CommonComponent, DegenerateConic, NotOnSurface
from .field import ONE as K1, ZERO as K0, KElem, kelem
from .linalg import mat_det, nullspace
from .poly import DEGREVLEX, Poly, PolyRing, divide_exact

ZRING = PolyRing(("z0", "z1", "z2", "z3"), DEGREVLEX)

_QUAD_FIELDS = tuple(f"a{i}{j}" for i in range(4) for j in range(i, 4))
_PLANE_FIELDS = ("b0", "b1", "b2", "b3")
RECORD_FIELDS = _QUAD_FIELDS + _PLANE_FIELDS


def _unit(i):
    m = [0] * 4
    m[i] = 1
    return tuple(m)


def _pair(i, j):
    m = [0] * 4
    m[i] += 1
    m[j] += 1
    return tuple(m)


class Conic:
    """An irreducible-or-not plane conic in canonical form."""

    __slots__ = ("plane", "quadric", "pivot", "key")

    def __init__(self, plane, quadric):
        if plane.ring.names != ZRING.names or quadric.ring.names != ZRING.names:
            raise ValueError("conic data must live in K[z0..z3]")
        if not plane or plane.total_degree() != 1 or not plane.is_homogeneous():
            raise DegenerateConic("plane must be a nonzero linear form")
        if not quadric or quadric.total_degree() != 2 or not quadric.is_homogeneous():
            raise DegenerateConic("quadric must be a nonzero quadratic form")
        plane = Poly(ZRING, plane.terms)
        quadric = Poly(ZRING, quadric.terms)
        pivot = min(i for i in range(4) if plane.coeff(_unit(i)))
        plane = plane * plane.coeff(_unit(pivot)).inverse()
        q = quadric.substitute(pivot, ZRING.var(pivot) - plane)
        if not q:
            raise DegenerateConic("quadric vanishes on the plane")
        q = q.monic()
        self.plane = plane
        self.quadric = q
        self.pivot = pivot
        self.key = tuple(
            q.coeff(_pair(i, j)).to_text() for i in range(4) for j in range(i, 4)
        ) + tuple(plane.coeff(_unit(i)).to_text() for i in range(4))

    def __eq__(self, other):
        return isinstance(other, Conic) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Conic({self.plane}; {self.quadric})"

    # -- record form -----------------------------------------------------------

    def fields(self):
        """The 14 canonical coefficient fields a00..a33, b0..b3 as text."""
        return list(self.key)

    @classmethod
    def from_fields(cls, fields):
        if len(fields) != 14:
            raise ValueError(f"expected 14 fields, got {len(fields)}")
        vals = [KElem.from_text(t) for t in fields]
        qterms = {}
        pos = 0
        for i in range(4):
            for j in range(i, 4):
                if vals[pos]:
                    qterms[_pair(i, j)] = vals[pos]
                pos += 1
        pterms = {}
        for i in range(4):
            if vals[10 + i]:
                pterms[_unit(i)] = vals[10 + i]
        return cls(Poly(ZRING, pterms), Poly(ZRING, qterms))

    # -- geometry ---------------------------------------------------------------

    def gram3(self):
        """Symmetric 3x3 matrix of the reduced quadric in the non-pivot variables."""
        others = [i for i in range(4) if i != self.pivot]
        half = kelem(1) / kelem(2)
        m = []
        for i in others:
            row = []
            for j in others:
                if i == j:
                    row.append(self.quadric.coeff(_pair(i, i)))
                else:
                    row.append(self.quadric.coeff(_pair(min(i, j), max(i, j))) * half)
            m.append(row)
        return m

    def is_irreducible(self):
        """Smooth conic test: the 3x3 symmetric matrix is nondegenerate."""
        return bool(mat_det(self.gram3()))

    def on_surface(self, f):
        """Whether the conic is a component of the plane section of V(f)."""
        return self._section_quotient(f) is not None

    def residual(self, f):
        """The other half of the plane section: f|plane = quadric * residual."""
        q = self._section_quotient(f)
        if q is None:
            raise NotOnSurface("conic does not lie on the surface")
        return Conic(self.plane, q)

    def _section_quotient(self, f):
        sect = f.substitute(self.pivot, ZRING.var(self.pivot) - self.plane)
        if not sect:
            return None
        return divide_exact(sect, self.quadric)

    def plane_coeffs(self):
        return [self.plane.coeff(_unit(i)) for i in range(4)]

    def point_on_plane_line(self, other):
        """Two independent points spanning the line plane(self) = plane(other) = 0."""
        rows = [self.plane_coeffs(), other.plane_coeffs()]
        basis = nullspace(rows, 4)
        if len(basis) != 2:
            raise CommonComponent("planes coincide; no unique common line")
        return basis


def _restrict_to_line(q, s, t):
    """Binary quadratic (c_uu, c_uv, c_vv) of q on the line u*s + v*t."""
    qs = q.evaluate(s)
    qt = q.evaluate(t)
    st = [a + b for a, b in zip(s, t)]
    qst = q.evaluate(st)
    return (qs, qst - qs - qt, qt)


def _sylvester2(a, b):
    z = K0
    rows = [
        [a[0], a[1], a[2], z],
        [z, a[0], a[1], a[2]],
        [b[0], b[1], b[2], z],
        [z, b[0], b[1], b[2]],
    ]
    return mat_det(rows)


def intersection_number(c1, c2):
    """Intersection number of two irreducible census conics on the surface.

    Both conics must be irreducible; reducible inputs can share a line, which
    is reported as CommonComponent rather than a number.
    """
    if c1.key == c2.key:
        return -2
    if tuple(c1.plane_coeffs()) == tuple(c2.plane_coeffs()):
        # Distinct irreducible conics in one plane: Bezout, no common part.
        return 4
    s, t = c1.point_on_plane_line(c2)
    q1 = _restrict_to_line(c1.quadric, s, t)
    q2 = _restrict_to_line(c2.quadric, s, t)
    if not any(q1) or not any(q2):
        raise CommonComponent("conic contains the common line of the two planes")
    if _sylvester2(q1, q2):
        return 0
    prop = (
        not (q1[0] * q2[1] - q1[1] * q2[0])
        and not (q1[0] * q2[2] - q1[2] * q2[0])
        and not (q1[1] * q2[2] - q1[2] * q2[1])
    )
    return 2 if prop else 1


def hypersurface_smooth(f, budget=None):
    """Whether the projective hypersurface V(f) in P^3 is smooth.

    Chart by chart, checks that f and its partials generate the unit ideal.
    """
    from .groebner import buchberger

    ring = f.ring
    sys_full = [f] + [f.partial_derivative(i) for i in range(ring.n)]
    for chart in range(ring.n):
        eqs = [p.substitute(chart, K1) for p in sys_full]
        eqs = [p for p in eqs if p]
        if not eqs:
            return False
        G = buchberger(eqs, budget=budget)
        if not G.is_trivial():
            return False
    return True
