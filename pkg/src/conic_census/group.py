"""Finite matrix groups acting on P^3 and on conics.

Elements are exact 4x4 matrices over K.  The group is generated by BFS
closure with exact deduplication, so the element list is deterministic for a
fixed generator list.  Conics are moved by substituting M*z into their
equations; the moved conic is the preimage of the original under z -> M*z,
which composes contravariantly (act(M*N) = act(N) then act(M)).  Orbits and
stabilizers only ever compare canonical conic keys, so the convention drops
out of every reported result.
"""

from .errors import ResourceBudgetExceeded
from .field import KElem, ONE as K1, kelem
from .geometry import Conic
from .linalg import mat_inv, mat_mul
from .poly import substitute_linear


class GroupMatrix:
    """An exact invertible 4x4 matrix over K, hashable by its entries."""

    __slots__ = ("rows", "key")

    def __init__(self, rows):
        self.rows = tuple(tuple(kelem(x) for x in r) for r in rows)
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise ValueError("need a 4x4 matrix")
        self.key = tuple(x for r in self.rows for x in r)

    def __mul__(self, other):
        return GroupMatrix(mat_mul([list(r) for r in self.rows],
                                   [list(r) for r in other.rows]))

    def __eq__(self, other):
        return isinstance(other, GroupMatrix) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GroupMatrix({[[str(x) for x in r] for r in self.rows]})"

    def inverse(self):
        return GroupMatrix(mat_inv([list(r) for r in self.rows]))

    def projective_key(self):
        """Entries scaled so the first nonzero one (row-major) is 1."""
        first = next(x for x in self.key if x)
        inv = first.inverse()
        return tuple(x * inv for x in self.key)

    def fields(self):
        """Row-major list of the 16 entries as text."""
        return [x.to_text() for x in self.key]

    @classmethod
    def from_fields(cls, fields):
        if len(fields) != 16:
            raise ValueError(f"expected 16 fields, got {len(fields)}")
        vals = [KElem.from_text(t) for t in fields]
        return cls([vals[4 * i : 4 * i + 4] for i in range(4)])

    @classmethod
    def identity(cls):
        return cls([[1 if i == j else 0 for j in range(4)] for i in range(4)])


def generate_group(gens, max_size=100000):
    """BFS closure of the generators; deterministic element order."""
    gens = list(gens)
    seen = {}
    order = []
    frontier = [GroupMatrix.identity()]
    for m in frontier:
        seen[m.key] = m
        order.append(m)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m * g
                if p.key not in seen:
                    seen[p.key] = p
                    order.append(p)
                    nxt.append(p)
                    if len(order) > max_size:
                        raise ResourceBudgetExceeded(
                            f"group closure exceeded {max_size} elements"
                        )
        frontier = nxt
    return order


def projective_classes(elements):
    """One representative per scalar class, in first-seen order."""
    seen = set()
    reps = []
    for m in elements:
        k = m.projective_key()
        if k not in seen:
            seen.add(k)
            reps.append(m)
    return reps


def act_on_conic(m, conic):
    rows = [list(r) for r in m.rows]
    return Conic(
        substitute_linear(conic.plane, rows),
        substitute_linear(conic.quadric, rows),
    )


def orbit_of_conic(gens, conic):
    """BFS orbit of a conic under the group generated by gens.

    Returns the orbit as a dict canonical-key -> Conic in discovery order
    (dicts preserve insertion order).
    """
    orbit = {conic.key: conic}
    frontier = [conic]
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                c2 = act_on_conic(g, c)
                if c2.key not in orbit:
                    orbit[c2.key] = c2
                    nxt.append(c2)
        frontier = nxt
    return orbit


def stabilizer(elements, conic):
    """Elements fixing the conic setwise (by canonical key)."""
    key = conic.key
    return [m for m in elements if act_on_conic(m, conic).key == key]
