"""Exact arithmetic in K = Q(i, sqrt(2), sqrt(5)).

K is a degree-8 extension of Q, represented on the fixed Q-basis

    B = (1, i, s2, i*s2, s5, i*s5, s10, i*s10)

where s2 = sqrt(2), s5 = sqrt(5) and s10 = s2*s5 = sqrt(10).  An element is
stored as eight integer coordinates over a single positive denominator, kept
in lowest terms.  The basis is closed under multiplication up to the integer
scalars produced by i^2 = -1, s2^2 = 2, s5^2 = 5, so products reduce to a
small table lookup.  Basis index j encodes the exponent triple: bit 0 is the
power of i, bit 1 of s2, bit 2 of s5; the product of basis elements j and k
lands on index j XOR k with scale (-1|2|5)^(j AND k bitwise).

The eight Galois automorphisms are the sign choices on (i, s2, s5); the
inverse of x is the product of its seven nontrivial images divided by the
rational norm.  Square roots are found by descending the quadratic tower
Q < Q(s2) < Q(s2, s5) < K, solving y = a + b*gen coordinatewise at each
level.  All values are immutable and hashable.
"""

from fractions import Fraction
from math import gcd, isqrt

Rat = Fraction

_N = 8
_ZERO8 = (0,) * _N

# _MUL[(j << 3) | k] = (index, scale) with basis_j * basis_k = scale * basis_index.
_MUL = []
for _j in range(_N):
    for _k in range(_N):
        _both = _j & _k
        _s = 1
        if _both & 1:
            _s = -_s
        if _both & 2:
            _s *= 2
        if _both & 4:
            _s *= 5
        _MUL.append((_j ^ _k, _s))
_MUL = tuple(_MUL)

# _BITS[mask] = indices of the set bits, for sparse iteration.
_BITS = tuple(tuple(j for j in range(_N) if m >> j & 1) for m in range(1 << _N))

# _SIGNS[t][j] = sign of basis_j under the automorphism flipping the
# generators selected by the bits of t (bit 0: i, bit 1: s2, bit 2: s5).
_SIGNS = tuple(
    tuple(-1 if bin(t & j).count("1") & 1 else 1 for j in range(_N))
    for t in range(_N)
)

_SYM = ("", "i", "s2", "i*s2", "s5", "i*s5", "s10", "i*s10")


class KElem:
    """An element of K: eight integer coordinates over one denominator."""

    __slots__ = ("num", "den", "mask")

    def __init__(self, num, den, mask):
        # Internal constructor; use the factory helpers below.
        self.num = num
        self.den = den
        self.mask = mask

    # -- factories ---------------------------------------------------------

    @staticmethod
    def from_coords(coords):
        """Build from an iterable of 8 rationals (int or Fraction) in basis order."""
        cs = [Fraction(c) for c in coords]
        if len(cs) != _N:
            raise ValueError(f"expected 8 coordinates, got {len(cs)}")
        den = 1
        for c in cs:
            den = den * c.denominator // gcd(den, c.denominator)
        return _make([int(c * den) for c in cs], den)

    @staticmethod
    def rational(n, d=1):
        if d == 0:
            raise ZeroDivisionError("rational with zero denominator")
        return _make([n, 0, 0, 0, 0, 0, 0, 0], d)

    @staticmethod
    def from_text(text):
        """Parse the 8-comma-joined rational form produced by :meth:`to_text`."""
        parts = text.split(",")
        if len(parts) != _N:
            raise ValueError(f"expected 8 comma-separated rationals, got {len(parts)}")
        return KElem.from_coords(Fraction(p.strip()) for p in parts)

    # -- views -------------------------------------------------------------

    def coords(self):
        """Coordinates over B as a tuple of 8 reduced Fractions."""
        d = self.den
        return tuple(Fraction(n, d) for n in self.num)

    def to_text(self):
        """Canonical textual form: 8 reduced rationals joined by commas."""
        d = self.den
        return ",".join(str(Fraction(n, d)) for n in self.num)

    @property
    def is_rational(self):
        return self.mask <= 1

    def as_fraction(self):
        if self.mask > 1:
            raise ValueError(f"not rational: {self}")
        return Fraction(self.num[0], self.den)

    # -- ring operations ----------------------------------------------------

    def __bool__(self):
        return self.mask != 0

    def __eq__(self, other):
        if isinstance(other, KElem):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == _coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return KElem(tuple(-n for n in self.num), self.den, self.mask)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        if da == db:
            return _make([x + y for x, y in zip(self.num, other.num)], da)
        return _make([x * db + y * da for x, y in zip(self.num, other.num)], da * db)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        if da == db:
            return _make([x - y for x, y in zip(self.num, other.num)], da)
        return _make([x * db - y * da for x, y in zip(self.num, other.num)], da * db)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        ma, mb = self.mask, other.mask
        if ma == 0 or mb == 0:
            return ZERO
        a, b = self.num, other.num
        if ma == 1 and mb == 1:
            return _make1(a[0] * b[0], self.den * other.den)
        if ma == 1:
            n0 = a[0]
            return _make([n0 * y for y in b], self.den * other.den)
        if mb == 1:
            m0 = b[0]
            return _make([x * m0 for x in a], self.den * other.den)
        res = [0] * _N
        mul = _MUL
        for j in _BITS[ma]:
            nj = a[j]
            j8 = j << 3
            for k in _BITS[mb]:
                idx, s = mul[j8 | k]
                res[idx] += s * nj * b[k]
        return _make(res, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse via the product of Galois conjugates."""
        if self.mask == 0:
            raise ZeroDivisionError("inverse of zero in K")
        if self.mask == 1:
            return _make1(self.den, self.num[0])
        y = self.galois(1)
        for t in range(2, _N):
            y = y * self.galois(t)
        n = self * y
        if n.mask > 1:  # product of all conjugates is the rational norm
            raise ArithmeticError("norm computation left irrational part")
        return y * _make1(n.den, n.num[0])

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.mask == 0:
            raise ZeroDivisionError("division by zero in K")
        if other.mask == 1:
            return self * _make1(other.den, other.num[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    # -- Galois structure ----------------------------------------------------

    def galois(self, t):
        """Image under the automorphism flipping generators per bits of t (0..7)."""
        if t == 0:
            return self
        signs = _SIGNS[t]
        return KElem(
            tuple(s * n for s, n in zip(signs, self.num)), self.den, self.mask
        )

    def galois_images(self):
        """All 8 Galois images, identity first."""
        return tuple(self.galois(t) for t in range(_N))

    def norm_to_q(self):
        """Product of all 8 Galois images, as a Fraction."""
        p = self
        for t in range(1, _N):
            p = p * self.galois(t)
        return p.as_fraction()

    # -- display -------------------------------------------------------------

    def __str__(self):
        if self.mask == 0:
            return "0"
        parts = []
        for j in _BITS[self.mask]:
            c = Fraction(self.num[j], self.den)
            sym = _SYM[j]
            if not sym:
                body = str(abs(c))
            elif abs(c) == 1:
                body = sym
            else:
                body = f"{abs(c)}*{sym}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"K({self})"


def _make(nums, den):
    if den < 0:
        den = -den
        nums = [-n for n in nums]
    g = gcd(den, *nums)
    if g > 1:
        den //= g
        nums = [n // g for n in nums]
    mask = 0
    for j in range(_N):
        if nums[j]:
            mask |= 1 << j
    return KElem(tuple(nums), den, mask)


def _make1(n, d):
    # Fast path for rational elements.
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return KElem((n, 0, 0, 0, 0, 0, 0, 0), d, 1 if n else 0)


def _coerce(x):
    if isinstance(x, KElem):
        return x
    if isinstance(x, int):
        return _make1(x, 1)
    if isinstance(x, Fraction):
        return _make1(x.numerator, x.denominator)
    return None


def kelem(x):
    """Coerce an int, Fraction or KElem to KElem."""
    v = _coerce(x)
    if v is None:
        raise TypeError(f"cannot coerce {type(x).__name__} to KElem")
    return v


ZERO = KElem(_ZERO8, 1, 0)
ONE = KElem((1, 0, 0, 0, 0, 0, 0, 0), 1, 1)
I = KElem((0, 1, 0, 0, 0, 0, 0, 0), 1, 2)
SQRT2 = KElem((0, 0, 1, 0, 0, 0, 0, 0), 1, 4)
I_SQRT2 = KElem((0, 0, 0, 1, 0, 0, 0, 0), 1, 8)
SQRT5 = KElem((0, 0, 0, 0, 1, 0, 0, 0), 1, 16)
I_SQRT5 = KElem((0, 0, 0, 0, 0, 1, 0, 0), 1, 32)
SQRT10 = KElem((0, 0, 0, 0, 0, 0, 1, 0), 1, 64)
I_SQRT10 = KElem((0, 0, 0, 0, 0, 0, 0, 1), 1, 128)

BASIS = (ONE, I, SQRT2, I_SQRT2, SQRT5, I_SQRT5, SQRT10, I_SQRT10)


class GaloisMap:
    """One of the 8 automorphisms of K, a sign choice on (i, s2, s5)."""

    __slots__ = ("t",)

    def __init__(self, t):
        self.t = t

    @property
    def signs(self):
        t = self.t
        return (-1 if t & 1 else 1, -1 if t & 2 else 1, -1 if t & 4 else 1)

    def __call__(self, x):
        return kelem(x).galois(self.t)

    def __repr__(self):
        ei, e2, e5 = self.signs
        return f"GaloisMap(i->{ei:+d}i, s2->{e2:+d}s2, s5->{e5:+d}s5)"


def galois_maps():
    """The 8 automorphisms of K/Q; index 0 is the identity."""
    return tuple(GaloisMap(t) for t in range(_N))


def complex_conjugation():
    return GaloisMap(1)


# -- square roots via the quadratic tower ------------------------------------

# Tower levels: 0 = Q, 1 = Q(s2), 2 = Q(s2, s5), 3 = K = Q(s2, s5)(i).
_GENBIT = (None, 2, 4, 1)  # basis-index bit introduced at each level
_GENELT = (None, SQRT2, SQRT5, I)
_GENSQ = (None, 2, 5, -1)  # square of the level generator


def _level_split(x, genbit):
    na = [0] * _N
    nb = [0] * _N
    for j in _BITS[x.mask]:
        if j & genbit:
            nb[j ^ genbit] = x.num[j]
        else:
            na[j] = x.num[j]
    return _make(na, x.den), _make(nb, x.den)


def _sqrt_rat(x):
    n, d = x.num[0], x.den
    if n < 0:
        return None
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return _make1(rn, rd)


def _sqrt_level(x, level):
    if x.mask == 0:
        return ZERO
    if level == 0:
        return _sqrt_rat(x)
    genbit = _GENBIT[level]
    a, b = _level_split(x, genbit)
    d = _GENSQ[level]
    if b.mask == 0:
        r = _sqrt_level(a, level - 1)
        if r is not None:
            return r
        r = _sqrt_level(a / d, level - 1)
        if r is not None:
            return r * _GENELT[level]
        return None
    # y = ay + by*gen with ay^2 + d*by^2 = a and 2*ay*by = b.
    n = a * a - d * (b * b)
    s = _sqrt_level(n, level - 1)
    if s is None:
        return None
    for t in (a + s, a - s):
        ay = _sqrt_level(t / 2, level - 1)
        if ay is not None and ay.mask:
            y = ay + (b / (ay + ay)) * _GENELT[level]
            if y * y == x:
                return y
    return None


def sqrt_in_k(x):
    """A square root of x in K, or None if none exists.

    When both roots lie in K the one whose first nonzero coordinate (in basis
    order B) is positive is returned.
    """
    x = kelem(x)
    r = _sqrt_level(x, 3)
    if r is None or r.mask == 0:
        return r
    for j in range(_N):
        if r.num[j]:
            return r if r.num[j] > 0 else -r
    return r


def square_class(x):
    """Label d in {1,2,5,10,-1,-2,-5,-10} with x/d a square in K, or None.

    Every nonzero square of K lands in one of these eight rational square
    classes; returns None when x is not d times a square for any of them.
    """
    x = kelem(x)
    if x.mask == 0:
        return None
    for d in (1, 2, 5, 10, -1, -2, -5, -10):
        if sqrt_in_k(x / d) is not None:
            return d
    return None
