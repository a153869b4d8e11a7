"""Exact arithmetic in the ring Z[2cos(pi/L)] adjoined rational denominators.

Every bilinear-form value and root coordinate in this package lives in the
real field generated by c = 2cos(pi/L), where L is the least common multiple
of the finite edge labels >= 3 of the Coxeter graph (L = 1 when there are
none, with the convention c = 2).  A scalar is stored as the unique residue
of a polynomial in c modulo the minimal polynomial of c, with integer or
Fraction coefficients, so equality is coefficient equality and there is no
floating point anywhere.

Signs are certified: zero is decided exactly from the coefficient vector,
and the sign of a nonzero scalar is decided by interval arithmetic on c with
the working precision doubled until the enclosing interval excludes zero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import InputError, InternalError

#: Marker for an infinite Coxeter label / infinite order.  Compares correctly
#: against every int, which keeps cap logic simple.
INFINITY = math.inf

_MAX_SIGN_PREC = 1 << 20


def _norm(q):
    """Collapse integral Fractions to int, keeping arithmetic on the fast path."""
    if isinstance(q, Fraction) and q.denominator == 1:
        return int(q)
    return q


@lru_cache(maxsize=None)
def doubled_chebyshev(k: int) -> tuple[int, ...]:
    """Coefficients of p_k = 2*T_k(x/2), satisfying p_k(2cos t) = 2cos(kt).

    The recurrence p_{k+1} = x*p_k - p_{k-1} keeps everything in Z, and the
    result is monic of degree k for k >= 1.
    """
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    p1 = doubled_chebyshev(k - 1)
    p0 = doubled_chebyshev(k - 2)
    out = [0] + list(p1)
    for i, c in enumerate(p0):
        out[i] -= c
    return tuple(out)


def _interval_context(prec: int):
    ctx = mpmath.ctx_iv.MPIntervalContext()
    ctx.prec = prec
    return ctx


def _eval_interval(coeffs, level: int, prec: int):
    """Enclosing interval of sum(coeffs[k] * c^k) at c = 2cos(pi/level)."""
    ctx = _interval_context(prec)
    c = 2 * ctx.cos(ctx.pi / level)
    acc = ctx.mpf(0)
    for q in reversed(coeffs):
        q = Fraction(q)
        acc = acc * c + ctx.mpf(q.numerator) / ctx.mpf(q.denominator)
    return acc


def _certified_sign(coeffs, level: int) -> int:
    """Sign of a provably nonzero polynomial value at c, by refining intervals."""
    prec = 64
    while prec <= _MAX_SIGN_PREC:
        v = _eval_interval(coeffs, level, prec)
        if (v > 0) is True:
            return 1
        if (v < 0) is True:
            return -1
        prec *= 2
    raise InternalError("interval sign determination failed to converge")


def _select_vanishing_factor(factors, level: int) -> tuple[int, ...]:
    """Pick the unique factor whose value at c = 2cos(pi/level) is zero.

    All other factors are nonzero at c, so at high enough precision exactly
    one interval still straddles zero.
    """
    prec = 64
    while prec <= _MAX_SIGN_PREC:
        hits = [f for f in factors
                if 0 in _eval_interval(f, level, prec)]
        if len(hits) == 1:
            return hits[0]
        prec *= 2
    raise InternalError("could not isolate the minimal polynomial factor")


@lru_cache(maxsize=None)
def _minimal_polynomial(level: int) -> tuple[int, ...]:
    """Minimal polynomial of c = 2cos(pi/L) over Z, monic, low degree first.

    Built by factoring the integer polynomial 2*T_L(x/2) + 2, which vanishes
    at c, and selecting the irreducible factor that contains c among its
    roots.  For L = 1 the package convention is c = 2 (the value never enters
    any bilinear form), so the polynomial is x - 2.
    """
    if level == 1:
        return (-2, 1)
    import sympy

    base = list(doubled_chebyshev(level))
    base[0] += 2
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(base)), x)
    factors = []
    for fac, _mult in poly.factor_list()[1]:
        coeffs = tuple(int(c) for c in reversed(fac.all_coeffs()))
        if coeffs[-1] < 0:
            coeffs = tuple(-c for c in coeffs)
        factors.append(coeffs)
    return _select_vanishing_factor(tuple(factors), level)


class ScalarRing:
    """The ring Z[2cos(pi/L)] (with rational denominators when division occurs).

    Two rings compare equal when they have the same level, so scalars built
    from independent parses of the same graph interoperate.
    """

    __slots__ = ("level", "minpoly", "degree", "_zero", "_one")

    def __init__(self, level: int):
        if level < 1:
            raise InputError(f"ring level must be >= 1, got {level}")
        self.level = level
        self.minpoly = _minimal_polynomial(level)
        self.degree = len(self.minpoly) - 1
        self._zero = Scalar(self, (0,) * self.degree)
        self._one = self.from_int(1)

    def __eq__(self, other):
        return isinstance(other, ScalarRing) and other.level == self.level

    def __hash__(self):
        return hash(("ScalarRing", self.level))

    def __repr__(self):
        return f"ScalarRing(level={self.level}, degree={self.degree})"

    @property
    def zero(self) -> Scalar:
        return self._zero

    @property
    def one(self) -> Scalar:
        return self._one

    def from_int(self, n) -> Scalar:
        return self.reduce([n])

    def generator(self) -> Scalar:
        """The scalar c itself (reduced, so rational in degree-1 rings)."""
        return self.reduce([0, 1])

    def reduce(self, coeffs) -> Scalar:
        """Reduce an arbitrary-length coefficient list modulo the minimal polynomial."""
        work = [_norm(Fraction(q)) for q in coeffs]
        return Scalar(self, _reduce_into(self, work))

    def two_cos_pi_over(self, m) -> Scalar:
        """The scalar 2cos(pi/m) for a finite label m of the graph.

        Finite labels >= 3 divide the level by construction; m = 2 gives 0.
        """
        if m == 2:
            return self.zero
        if not isinstance(m, int) or m < 2 or self.level % m != 0:
            raise InputError(f"label {m} does not belong to a ring of level {self.level}")
        return self.reduce(doubled_chebyshev(self.level // m))


def _reduce_into(ring: ScalarRing, work: list) -> tuple:
    """Synthetic division by the monic minimal polynomial, in place."""
    d = ring.degree
    mp = ring.minpoly
    for k in range(len(work) - 1, d - 1, -1):
        lead = work.pop()
        if lead:
            for i in range(d):
                if mp[i]:
                    work[k - d + i] -= lead * mp[i]
    while len(work) < d:
        work.append(0)
    return tuple(_norm(q) for q in work)


class Scalar:
    """An element of a ScalarRing: the reduced residue of a polynomial in c.

    Immutable and hashable; equality is exact coefficient equality.
    """

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: ScalarRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs
        self._hash = None

    def _check(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise InputError("scalars belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.from_int(other) if isinstance(other, int) else self.ring.reduce([other])
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.ring, tuple(_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.ring, tuple(_norm(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Scalar(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero
            return Scalar(self.ring, tuple(_norm(a * other) for a in self.coeffs))
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        conv = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return Scalar(self.ring, _reduce_into(self.ring, conv))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._check(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.level, self.coeffs))
        return self._hash

    def sign(self) -> int:
        """-1, 0 or +1 under the real embedding c -> 2cos(pi/L), certified."""
        if not any(self.coeffs):
            return 0
        if not any(self.coeffs[1:]):
            q = self.coeffs[0]
            return 1 if q > 0 else -1
        return _certified_sign(self.coeffs, self.ring.level)

    def inverse(self) -> Scalar:
        """Multiplicative inverse in Q(c), via the extended Euclidean algorithm."""
        if not any(self.coeffs):
            raise ZeroDivisionError("scalar is zero")
        a = [Fraction(c) for c in self.ring.minpoly]
        b = [Fraction(c) for c in self.coeffs]
        # Invariants: r0 = s0*minpoly + t0*self (t coefficients tracked only).
        t0, t1 = [Fraction(0)], [Fraction(1)]
        r0, r1 = a, _trim(b)
        while _poly_degree(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        if _poly_degree(r1) != 0:
            raise InternalError("minimal polynomial is not coprime to a nonzero residue")
        scale = Fraction(1) / r1[0]
        return self.ring.reduce([c * scale for c in t1])

    def __repr__(self):
        return f"Scalar({self!s})"

    def __str__(self):
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            q = self.coeffs[k]
            if not q:
                continue
            mag = abs(q)
            if k == 0:
                body = f"{mag}"
            else:
                var = "c" if k == 1 else f"c^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if q > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if q > 0 else f" - {body}")
        return "".join(parts) if parts else "0"


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _poly_degree(p):
    return len(_trim(p)) - 1


def _poly_sub(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] -= c
    return _trim(out)


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return _trim(out)


def _poly_divmod(p, q):
    q = _trim(q)
    r = _trim(p)
    if not q:
        raise ZeroDivisionError
    quo = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    inv_lead = Fraction(1) / q[-1]
    while len(r) >= len(q) and r:
        k = len(r) - len(q)
        coeff = r[-1] * inv_lead
        quo[k] = coeff
        for i, c in enumerate(q):
            r[i + k] -= coeff * c
        r = _trim(r)
    return _trim(quo), r


def make_ring(labels) -> ScalarRing:
    """Ring for the given set of Coxeter labels (ints >= 2 or INFINITY).

    The level is the lcm of the finite labels >= 3; with none present the
    level is 1 and the ring is plain Z.
    """
    level = 1
    for m in labels:
        if m == INFINITY:
            continue
        if not isinstance(m, int) or m < 2:
            raise InputError(f"invalid Coxeter label {m!r}")
        if m >= 3:
            level = math.lcm(level, m)
    return ScalarRing(level)
