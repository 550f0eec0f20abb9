"""Exact arithmetic over the rings used to realize incidence configurations.

Five ring families are supported:

* ``RationalField`` -- the rationals, backed by ``gmpy2.mpq``;
* ``PrimeField(p)`` -- residues modulo a prime;
* ``QuaternionAlgebra`` -- Hamilton quaternions with rational coordinates;
* ``DualNumbers`` -- ``a + b*eps`` with ``eps**2 == 0`` over the rationals;
* ``MatrixRing(k, base)`` -- ``k x k`` matrices over a rational or prime field.

A ring object describes the ring and implements arithmetic on raw *payloads*;
user code manipulates :class:`RingValue` wrappers, which are immutable and
hashable.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction

from gmpy2 import mpq
from functools import cached_property

from .errors import DescriptorMismatch, NotAUnit

__all__ = [
    "Ring",
    "RingValue",
    "RationalField",
    "PrimeField",
    "QuaternionAlgebra",
    "DualNumbers",
    "MatrixRing",
    "NormalSubgroup",
    "QQ",
    "HH",
    "DUAL",
    "commutator",
    "try_invert",
    "in_subgroup",
    "parse_ring",
    "ring_from_json",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _frac(x):
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return mpq(x)


_EXACT = (int, Fraction, type(mpq(0)))


def _frac_json(x) -> str:
    return f"{x.numerator}/{x.denominator}"


class Ring:
    """Descriptor plus payload arithmetic for one ring.

    Subclasses define ``kind``, the two structural flags, the base field the
    ring is a finite-dimensional algebra over, and payload-level operations.
    """

    kind: str = ""
    is_commutative: bool = False
    is_division_ring: bool = False

    # -- identity --------------------------------------------------------
    @property
    def key(self) -> tuple:
        return (self.kind,)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return self.name

    @property
    def name(self) -> str:
        raise NotImplementedError

    # -- payload hooks ---------------------------------------------------
    def _coerce(self, x):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        """Return the two-sided inverse payload or raise :class:`NotAUnit`."""
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        return a == self._zero

    def _coords(self, a) -> tuple:
        """Coordinates over :attr:`base` (a tuple of base payloads)."""
        raise NotImplementedError

    def _from_coords(self, coords):
        raise NotImplementedError

    def _is_central(self, a) -> bool:
        return self.is_commutative

    def _is_scalar(self, a) -> bool:
        return True

    def _to_json(self, a):
        raise NotImplementedError

    def _from_json(self, obj):
        raise NotImplementedError

    def _str(self, a) -> str:
        return str(a)

    # -- public helpers --------------------------------------------------
    @property
    def base(self) -> Ring:
        return self

    @property
    def dim(self) -> int:
        """Dimension over :attr:`base`."""
        return 1

    @cached_property
    def zero(self) -> RingValue:
        return RingValue(self, self._zero)

    @cached_property
    def one(self) -> RingValue:
        return RingValue(self, self._one)

    def __call__(self, x=0) -> RingValue:
        if isinstance(x, RingValue):
            if x.ring == self:
                return x
            if x.ring == self.base and self.base is not self:
                return self.from_base(x)
            raise DescriptorMismatch(f"cannot coerce {x.ring} value into {self}")
        return RingValue(self, self._coerce(x))

    def from_base(self, x: RingValue) -> RingValue:
        """Embed a base-field value as a central scalar."""
        return RingValue(self, self._from_coords(self._scalar_coords(x.data)))

    def _scalar_coords(self, b):
        coords = [self.base._zero] * self.dim
        coords[0] = b
        return coords

    def basis(self) -> list[RingValue]:
        """Basis of the ring as a vector space over :attr:`base`."""
        out = []
        for i in range(self.dim):
            coords = [self.base._zero] * self.dim
            coords[i] = self.base._one
            out.append(RingValue(self, self._from_coords(coords)))
        return out

    def from_coords(self, coords) -> RingValue:
        return RingValue(self, self._from_coords([self.base._coerce(c) if not isinstance(c, RingValue) else c.data for c in coords]))

    def from_json(self, obj) -> RingValue:
        return RingValue(self, self._from_json(obj))

    def descriptor(self) -> dict:
        return {"kind": self.kind}

    def prime_subfield_element(self, n: int) -> RingValue:
        """Image of the integer ``n`` (always central)."""
        return self(n)

    @property
    def characteristic(self) -> int:
        return 0

    def candidate_units(self) -> list[RingValue]:
        """Documented candidate list used by defect searches."""
        return [self(2), self(3), self(-1)]

    def unit_pool(self) -> list[RingValue]:
        """Finite pool of units used when sampling connections and gauges."""
        return [self(1), self(-1), self(2), self(Fraction(1, 2)), self(3), self(Fraction(-2, 3))]


class RingValue:
    """An immutable element of a :class:`Ring`."""

    __slots__ = ("ring", "data")

    def __init__(self, ring: Ring, data):
        self.ring = ring
        self.data = data

    def _other(self, other):
        if isinstance(other, RingValue):
            if other.ring != self.ring:
                raise DescriptorMismatch(f"{self.ring} vs {other.ring}")
            return other.data
        if isinstance(other, _EXACT):
            return self.ring._coerce(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingValue(self.ring, self.ring._add(self.data, o))

    def __radd__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingValue(self.ring, self.ring._add(o, self.data))

    def __neg__(self):
        return RingValue(self.ring, self.ring._neg(self.data))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingValue(self.ring, self.ring._add(self.data, self.ring._neg(o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingValue(self.ring, self.ring._add(o, self.ring._neg(self.data)))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingValue(self.ring, self.ring._mul(self.data, o))

    def __rmul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingValue(self.ring, self.ring._mul(o, self.data))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> RingValue:
        """Two-sided inverse; raises :class:`NotAUnit` when none exists."""
        return RingValue(self.ring, self.ring._inv(self.data))

    def is_unit(self) -> bool:
        try:
            self.ring._inv(self.data)
        except NotAUnit:
            return False
        return True

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.data)

    def is_one(self) -> bool:
        return self.data == self.ring._one

    def is_central(self) -> bool:
        return self.ring._is_central(self.data)

    def coords(self) -> tuple:
        return tuple(RingValue(self.ring.base, c) for c in self.ring._coords(self.data))

    def to_json(self):
        return self.ring._to_json(self.data)

    def __eq__(self, other):
        if isinstance(other, RingValue):
            return self.ring == other.ring and self.data == other.data
        if isinstance(other, _EXACT):
            return self.data == self.ring._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.key, self.data))

    def __repr__(self):
        return f"{self.ring.name}({self.ring._str(self.data)})"

    def __str__(self):
        return self.ring._str(self.data)


class RationalField(Ring):
    kind = "rational"
    is_commutative = True
    is_division_ring = True
    _zero = mpq(0)
    _one = mpq(1)

    @property
    def name(self):
        return "QQ"

    def _coerce(self, x):
        return _frac(x)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return 1 / a

    def _coords(self, a):
        return (a,)

    def _from_coords(self, coords):
        return coords[0]

    def _to_json(self, a):
        return _frac_json(a)

    def _from_json(self, obj):
        return _frac(obj)


class PrimeField(Ring):
    kind = "prime_field"
    is_commutative = True
    is_division_ring = True
    _zero = 0
    _one = 1

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def key(self):
        return (self.kind, self.p)

    @property
    def name(self):
        return f"F{self.p}"

    @property
    def characteristic(self):
        return self.p

    def _coerce(self, x):
        x = _frac(x)
        num = int(x.numerator) % self.p
        den = int(x.denominator) % self.p
        if den == 0:
            raise NotAUnit(f"denominator divisible by {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not invertible")
        return pow(a, -1, self.p)

    def _coords(self, a):
        return (a,)

    def _from_coords(self, coords):
        return coords[0]

    def _to_json(self, a):
        return a

    def _from_json(self, obj):
        return int(obj) % self.p

    def descriptor(self):
        return {"kind": self.kind, "p": self.p}

    def elements(self) -> list[RingValue]:
        return [RingValue(self, a) for a in range(self.p)]

    def candidate_units(self):
        return [RingValue(self, a) for a in range(2, self.p)] or [self.one]

    def unit_pool(self):
        return [RingValue(self, a) for a in range(1, self.p)]


_Q0 = mpq(0)
_Q1 = mpq(1)


class QuaternionAlgebra(Ring):
    """Hamilton quaternions ``a + b i + c j + d k`` over the rationals."""

    kind = "quaternion_over_rational"
    is_commutative = False
    is_division_ring = True
    _zero = (_Q0, _Q0, _Q0, _Q0)
    _one = (_Q1, _Q0, _Q0, _Q0)

    @property
    def name(self):
        return "HH"

    @property
    def base(self):
        return QQ

    @property
    def dim(self):
        return 4

    def _coerce(self, x):
        if isinstance(x, (tuple, list)):
            if len(x) != 4:
                raise ValueError("quaternion needs 4 coordinates")
            return tuple(_frac(c) for c in x)
        if isinstance(x, str) and re.search(r"[ijk]", x):
            return self._parse(x)
        return (_frac(x), _Q0, _Q0, _Q0)

    @staticmethod
    def _parse(text: str):
        coords = [_Q0] * 4
        index = {"": 0, "i": 1, "j": 2, "k": 3}
        for sign, num, unit in re.findall(r"([+-]?)\s*([0-9/]*)\s*([ijk]?)", text.replace(" ", "")):
            if not num and not unit:
                continue
            value = _frac(num) if num else _Q1
            if sign == "-":
                value = -value
            coords[index[unit]] += value
        return tuple(coords)

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    def _neg(self, a):
        return (-a[0], -a[1], -a[2], -a[3])

    def _mul(self, x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def _inv(self, x):
        norm = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]
        if norm == 0:
            raise NotAUnit("0 is not invertible")
        return (x[0] / norm, -x[1] / norm, -x[2] / norm, -x[3] / norm)

    def _coords(self, a):
        return a

    def _from_coords(self, coords):
        return tuple(coords)

    def _is_central(self, a):
        return a[1] == 0 and a[2] == 0 and a[3] == 0

    _is_scalar = _is_central

    def _to_json(self, a):
        return [_frac_json(c) for c in a]

    def _from_json(self, obj):
        return tuple(_frac(c) for c in obj)

    def _str(self, a):
        parts = []
        for c, unit in zip(a, ("", "i", "j", "k")):
            if c == 0:
                continue
            mag = abs(c)
            body = unit if (mag == 1 and unit) else f"{mag}{unit}"
            parts.append(("-" if c < 0 else "+") + body)
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s

    @cached_property
    def i(self):
        return RingValue(self, (_Q0, _Q1, _Q0, _Q0))

    @cached_property
    def j(self):
        return RingValue(self, (_Q0, _Q0, _Q1, _Q0))

    @cached_property
    def k(self):
        return RingValue(self, (_Q0, _Q0, _Q0, _Q1))

    def candidate_units(self):
        return [self.i, self.j, self.k, self.one + self.i, self.one + self.j]

    def unit_pool(self):
        return [self.one] + self.candidate_units()


class DualNumbers(Ring):
    """``a + b*eps`` with ``eps**2 == 0``, rational coefficients."""

    kind = "dual_over_rational"
    is_commutative = True
    is_division_ring = False
    _zero = (_Q0, _Q0)
    _one = (_Q1, _Q0)

    @property
    def name(self):
        return "DD"

    @property
    def base(self):
        return QQ

    @property
    def dim(self):
        return 2

    def _coerce(self, x):
        if isinstance(x, (tuple, list)):
            if len(x) != 2:
                raise ValueError("dual number needs 2 coordinates")
            return (_frac(x[0]), _frac(x[1]))
        return (_frac(x), _Q0)

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, x, y):
        return (x[0] * y[0], x[0] * y[1] + x[1] * y[0])

    def _inv(self, x):
        if x[0] == 0:
            raise NotAUnit(f"{self._str(x)} is not invertible")
        inv = 1 / x[0]
        return (inv, -x[1] * inv * inv)

    def _coords(self, a):
        return a

    def _from_coords(self, coords):
        return tuple(coords)

    def _is_scalar(self, a):
        return a[1] == 0

    def _to_json(self, a):
        return [_frac_json(a[0]), _frac_json(a[1])]

    def _from_json(self, obj):
        return (_frac(obj[0]), _frac(obj[1]))

    def _str(self, a):
        if a[1] == 0:
            return str(a[0])
        sign = "-" if a[1] < 0 else "+"
        return f"{a[0]}{sign}{abs(a[1])}ε"

    @cached_property
    def eps(self):
        return RingValue(self, (_Q0, _Q1))

    def candidate_units(self):
        return [self((1, 1)), self(2), self((2, -1))]

    def unit_pool(self):
        return [self.one, self((1, 1)), self(2), self((1, -2)), self((Fraction(1, 2), 3))]


class MatrixRing(Ring):
    """``k x k`` matrices over a rational or prime field."""

    kind = "matrix_ring"
    is_division_ring = False

    def __init__(self, k: int, base: Ring):
        if k < 1:
            raise ValueError("matrix size must be positive")
        if not isinstance(base, (RationalField, PrimeField)):
            raise ValueError("matrix rings are built over QQ or a prime field")
        self.k = k
        self._base = base
        self.is_commutative = k == 1
        self._zero = tuple(tuple(base._zero for _ in range(k)) for _ in range(k))
        self._one = tuple(tuple(base._one if i == j else base._zero for j in range(k)) for i in range(k))

    @property
    def key(self):
        return (self.kind, self.k, self._base.key)

    @property
    def name(self):
        return f"M{self.k}({self._base.name})"

    @property
    def base(self):
        return self._base

    @property
    def dim(self):
        return self.k * self.k

    @property
    def characteristic(self):
        return self._base.characteristic

    def _coerce(self, x):
        if isinstance(x, (tuple, list)):
            rows = tuple(tuple(self._base._coerce(v) for v in row) for row in x)
            if len(rows) != self.k or any(len(r) != self.k for r in rows):
                raise ValueError(f"expected a {self.k}x{self.k} matrix")
            return rows
        s = self._base._coerce(x)
        z = self._base._zero
        return tuple(tuple(s if i == j else z for j in range(self.k)) for i in range(self.k))

    def _add(self, a, b):
        add = self._base._add
        return tuple(tuple(add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    def _neg(self, a):
        neg = self._base._neg
        return tuple(tuple(neg(x) for x in r) for r in a)

    def _mul(self, a, b):
        B = self._base
        k = self.k
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                s = B._zero
                for t in range(k):
                    s = B._add(s, B._mul(a[i][t], b[t][j]))
                row.append(s)
            out.append(tuple(row))
        return tuple(out)

    def _inv(self, a):
        B = self._base
        k = self.k
        aug = [list(a[i]) + [B._one if i == j else B._zero for j in range(k)] for i in range(k)]
        for col in range(k):
            piv = next((r for r in range(col, k) if not B._is_zero(aug[r][col])), None)
            if piv is None:
                raise NotAUnit("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            s = B._inv(aug[col][col])
            aug[col] = [B._mul(s, v) for v in aug[col]]
            for r in range(k):
                if r != col and not B._is_zero(aug[r][col]):
                    f = aug[r][col]
                    aug[r] = [B._add(v, B._neg(B._mul(f, w))) for v, w in zip(aug[r], aug[col])]
        return tuple(tuple(row[k:]) for row in aug)

    def _coords(self, a):
        return tuple(x for row in a for x in row)

    def _from_coords(self, coords):
        k = self.k
        return tuple(tuple(coords[i * k:(i + 1) * k]) for i in range(k))

    def _scalar_coords(self, b):
        k = self.k
        return [b if i % (k + 1) == 0 else self._base._zero for i in range(k * k)]

    def _is_scalar(self, a):
        d = a[0][0]
        return all(a[i][j] == (d if i == j else self._base._zero) for i in range(self.k) for j in range(self.k))

    def _is_central(self, a):
        return self._is_scalar(a)

    def _to_json(self, a):
        return [[self._base._to_json(x) for x in row] for row in a]

    def _from_json(self, obj):
        return tuple(tuple(self._base._from_json(x) for x in row) for row in obj)

    def _str(self, a):
        return "[" + ",".join("[" + ",".join(self._base._str(x) for x in row) + "]" for row in a) + "]"

    def descriptor(self):
        return {"kind": self.kind, "k": self.k, "base": self._base.descriptor()}

    def candidate_units(self):
        """Elementary transvections, then permutation and diagonal matrices."""
        k = self.k
        B = self._base
        out = []
        for i in range(k):
            for j in range(k):
                if i != j:
                    m = [list(r) for r in self._one]
                    m[i][j] = B._one
                    out.append(RingValue(self, tuple(tuple(r) for r in m)))
        for i in range(k - 1):
            m = [list(r) for r in self._one]
            m[i][i], m[i][i + 1], m[i + 1][i], m[i + 1][i + 1] = B._zero, B._one, B._one, B._zero
            out.append(RingValue(self, tuple(tuple(r) for r in m)))
        two = B._coerce(2)
        if not B._is_zero(two):
            m = [list(r) for r in self._one]
            m[0][0] = two
            out.append(RingValue(self, tuple(tuple(r) for r in m)))
        return out or [self.one]

    def unit_pool(self):
        return [self.one] + self.candidate_units()


QQ = RationalField()
HH = QuaternionAlgebra()
DUAL = DualNumbers()


class NormalSubgroup(str, enum.Enum):
    """Normal subgroups of the unit group used for relative coherence."""

    TRIVIAL = "trivial"
    CENTRAL = "central_units"
    REAL_PART = "real_part_units"
    SCALAR = "scalar_matrices"
    ALL = "all_units"

    def contains(self, g: RingValue) -> bool:
        return in_subgroup(g, self)


def try_invert(a: RingValue) -> RingValue | None:
    """Return ``a**-1``, or ``None`` when ``a`` is not a unit."""
    try:
        return a.inverse()
    except NotAUnit:
        return None


def commutator(a: RingValue, b: RingValue) -> RingValue:
    """``a b a^-1 b^-1``; raises :class:`NotAUnit` unless both are units."""
    return a * b * a.inverse() * b.inverse()


def in_subgroup(g: RingValue, G: NormalSubgroup | str) -> bool:
    """Membership of the unit ``g`` in the normal subgroup ``G``."""
    G = NormalSubgroup(G)
    if not g.is_unit():
        raise NotAUnit(f"{g} is not a unit")
    ring = g.ring
    if G is NormalSubgroup.TRIVIAL:
        return g.is_one()
    if G is NormalSubgroup.ALL:
        return True
    if G is NormalSubgroup.CENTRAL:
        return ring._is_central(g.data)
    return ring._is_scalar(g.data)


_FIELD_RE = re.compile(r"^(?:F|GF|F_)(\d+)$", re.IGNORECASE)
_MAT_RE = re.compile(r"^M(\d+)\s*[\(_]?\s*([A-Za-z_0-9]+?)\s*\)?$")


def parse_ring(name: str) -> Ring:
    """Ring from a short name: ``Q``, ``F7``, ``quat``, ``dual``, ``M2(F3)``."""
    text = name.strip()
    low = text.lower()
    if low in {"q", "qq", "rational", "rationals"}:
        return QQ
    if low in {"h", "hh", "quat", "quaternion", "quaternions", "quaternion_over_rational"}:
        return HH
    if low in {"dual", "dd", "dual_over_rational"}:
        return DUAL
    m = _FIELD_RE.match(text)
    if m:
        return PrimeField(int(m.group(1)))
    m = _MAT_RE.match(text)
    if m:
        return MatrixRing(int(m.group(1)), parse_ring(m.group(2)))
    raise ValueError(f"unknown ring {name!r}")


def ring_from_json(obj: dict) -> Ring:
    kind = obj["kind"]
    if kind == "rational":
        return QQ
    if kind == "prime_field":
        return PrimeField(int(obj["p"]))
    if kind == "quaternion_over_rational":
        return HH
    if kind == "dual_over_rational":
        return DUAL
    if kind == "matrix_ring":
        return MatrixRing(int(obj["k"]), ring_from_json(obj["base"]))
    raise ValueError(f"unknown ring kind {kind!r}")
