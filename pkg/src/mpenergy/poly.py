"""Exact univariate polynomials with certified real-root isolation.

Coefficients are held as exact rationals (``int`` when integral, otherwise
``Fraction``).  Float inputs are converted exactly, so every algebraic
identity on integer families is testable without tolerance.  Floating point
appears only when a refined root is reported.

Real roots are counted with Sturm sequences on the square-free parts of a
polynomial and refined by bisection on a dyadic grid, which keeps the whole
pipeline deterministic.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


# Grid used for root refinement: points are m / 2**GRID_BITS.
GRID_BITS = 44
ROOT_WIDTH = 1e-12
MAX_CHARPOLY_DIM = 16


class NoRealRootError(ValueError):
    """Raised when a polynomial has no real root to report."""


class PreconditionError(ValueError):
    """Raised when a certified root count contradicts a caller's precondition."""


def _exact(c) -> int | Fraction:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, numbers.Integral):
        return int(c)
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, numbers.Rational):
        q = Fraction(c.numerator, c.denominator)
        return int(q) if q.denominator == 1 else q
    if isinstance(c, numbers.Real):
        f = float(c)
        if not math.isfinite(f):
            raise ValueError(f"non-finite coefficient {c!r}")
        q = Fraction(f)
        return int(q) if q.denominator == 1 else q
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients listed highest degree first.

    The zero polynomial has ``coeffs == ()`` and ``degree == -1``.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        cs = [_exact(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x(cls) -> Poly:
        return cls((1, 0))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        p = cls((1,))
        for r in roots:
            p = p * cls((1, -_exact(r)))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def coeff(self, power: int):
        """Coefficient of ``x**power``."""
        if power < 0 or power > self.degree:
            return 0
        return self.coeffs[self.degree - power]

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly((other,))

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = (0,) * (n - len(self.coeffs)) + self.coeffs
        b = (0,) * (n - len(other.coeffs)) + other.coeffs
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = Poly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = self._lift(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = Fraction(other.leading)
        if len(rem) - 1 < d:
            return Poly(), self
        quot = []
        for k in range(len(rem) - d):
            c = rem[k] / lead
            quot.append(c)
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[len(rem) - d:] if d > 0 else ())

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division leaves a remainder")
        return q

    # -- evaluation and transforms ------------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments, float otherwise."""
        if isinstance(x, float):
            acc = 0.0
            for c in self.coeffs:
                acc = acc * x + float(c)
            return acc
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        d = self.degree
        return Poly(c * (d - k) for k, c in enumerate(self.coeffs[:-1]))

    def scale(self, k) -> Poly:
        """Return ``p(k*x)``."""
        k = _exact(k)
        d = self.degree
        return Poly(c * k ** (d - j) for j, c in enumerate(self.coeffs))

    def monic(self) -> Poly:
        lead = Fraction(self.leading)
        return Poly(Fraction(c) / lead for c in self.coeffs)

    def primitive(self) -> Poly:
        """Integer multiple with unit content and positive leading coefficient."""
        if self.is_zero:
            return self
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = math.lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        sign = 1 if ints[0] > 0 else -1
        return Poly(sign * c // g for c in ints)

    def eval_surd(self, a, b, d) -> tuple[Fraction, Fraction]:
        """Exact value of ``p(a + b*sqrt(d))`` as ``(A, B)`` meaning ``A + B*sqrt(d)``."""
        a, b, d = Fraction(_exact(a)), Fraction(_exact(b)), Fraction(_exact(d))
        acc_a, acc_b = Fraction(0), Fraction(0)
        for c in self.coeffs:
            acc_a, acc_b = acc_a * a + acc_b * b * d + c, acc_a * b + acc_b * a
        return acc_a, acc_b

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = d - k
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            body = "" if (mag == 1 and p > 0) else str(mag)
            if p >= 1:
                body += "x" if p == 1 else f"x^{p}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def surd_sign(a, b, d) -> int:
    """Exact sign of ``a + b*sqrt(d)`` for rational a, b and d >= 0."""
    a, b, d = Fraction(a), Fraction(b), Fraction(d)
    if d < 0:
        raise ValueError("negative radicand")
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or d == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 d
    diff = a * a - b * b * d
    if diff == 0:
        return 0
    return sa if diff > 0 else sb


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor over the rationals (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.primitive()
    return a.monic() if not a.is_zero else a


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = c * prod f_k**k`` with square-free, pairwise coprime f_k."""
    if p.is_zero:
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree < 1:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.primitive(), k))
        k += 1
    return out


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of a square-free polynomial, each member scaled to a primitive integer form.

    Positive rescaling keeps sign patterns intact.
    """
    seq = [p.primitive(), p.derivative().primitive()]
    while seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if r.is_zero:
            break
        # primitive() forces a positive leading coefficient; undo that if needed
        sign = 1 if r.leading > 0 else -1
        seq.append(r.primitive() * sign)
    return seq


class _GridPoly:
    """Integer polynomial evaluated exactly at grid points m / 2**bits."""

    __slots__ = ("scaled",)

    def __init__(self, p: Poly, bits: int):
        q = p.primitive() if not p.is_integral else p
        d = q.degree
        # p(m/S) * S**d = sum c_k m**(d-k) S**k  (coefficients highest first)
        self.scaled = [c << (bits * k) for k, c in enumerate(q.coeffs)] if d >= 0 else []

    def sign(self, m: int) -> int:
        acc = 0
        for c in self.scaled:
            acc = acc * m + c
        return (acc > 0) - (acc < 0)


def _variations(signs: Iterable[int]) -> int:
    prev = 0
    v = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def root_bound(p: Poly) -> float:
    """Fujiwara bound: every complex root has modulus at most the returned value."""
    d = p.degree
    if d < 1:
        return 0.0
    lead = abs(Fraction(p.leading))
    terms = []
    for k in range(1, d + 1):
        c = abs(Fraction(p.coeffs[k])) / lead
        if k == d:
            c /= 2
        if c:
            terms.append(float(c) ** (1.0 / k))
    return 2.0 * max(terms) if terms else 0.0


def _isolate_squarefree(p: Poly, bits: int) -> list[tuple[int, int]]:
    """Brackets (lo, hi] on the 2**-bits grid, one per distinct real root of square-free p."""
    seq = [_GridPoly(s, bits) for s in sturm_sequence(p)]
    main = seq[0]

    def var(m: int) -> int:
        return _variations(g.sign(m) for g in seq)

    bound = root_bound(p) * 1.001 + 1.0
    hi = 1 << max(1, math.ceil(math.log2(bound)) + bits)
    lo = -hi - 1
    out: list[tuple[int, int]] = []
    stack = [(lo, hi, var(lo), var(hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count <= 0:
            continue
        if count == 1:
            out.append(_refine(main, a, b))
            continue
        if b - a <= 1:
            # distinct roots closer than one grid step
            out.extend([(a, b)] * count)
            continue
        mid = (a + b) // 2
        vm = var(mid)
        stack.append((mid, b, vm, vb))
        stack.append((a, mid, va, vm))
    out.sort()
    return out


def _refine(p: _GridPoly, a: int, b: int) -> tuple[int, int]:
    s_hi = p.sign(b)
    if s_hi == 0:
        return (b, b)
    while b - a > 1:
        mid = (a + b) // 2
        s = p.sign(mid)
        if s == 0:
            return (mid, mid)
        if s == s_hi:
            b = mid
        else:
            a = mid
    return (a, b)


@dataclass(frozen=True)
class RootSet:
    """Real roots (ascending, repeated by multiplicity) with the certified count."""

    real_roots: tuple[float, ...]
    certified_count: int
    width: float

    @property
    def largest(self) -> float:
        if not self.real_roots:
            raise NoRealRootError("polynomial has no real root")
        return self.real_roots[-1]


def real_roots(p: Poly, bits: int = GRID_BITS) -> RootSet:
    """All real roots of ``p`` with multiplicity, each within a 2**-bits bracket."""
    if p.is_zero:
        raise ValueError("zero polynomial has infinitely many roots")
    roots: list[float] = []
    scale = 2.0 ** -(bits + 1)
    for factor, mult in squarefree_decomposition(p):
        if factor.degree == 1:
            r = -Fraction(factor.coeffs[1]) / factor.coeffs[0]
            roots.extend([float(r)] * mult)
            continue
        for a, b in _isolate_squarefree(factor, bits):
            roots.extend([math.ldexp(a + b, -(bits + 1))] * mult)
    roots.sort()
    return RootSet(tuple(roots), len(roots), 2.0 * scale)


def count_roots(p: Poly, lo, hi) -> int:
    """Number of real roots in the half-open interval (lo, hi], counted with multiplicity."""
    lo, hi = Fraction(_exact(lo)), Fraction(_exact(hi))
    if lo >= hi:
        return 0
    total = 0
    for factor, mult in squarefree_decomposition(p):
        seq = sturm_sequence(factor)

        def var(x):
            return _variations(((v > 0) - (v < 0)) for v in (s(x) for s in seq))

        total += mult * (var(lo) - var(hi))
    return total


def count_signed_roots(p: Poly) -> tuple[int, int, int]:
    """(negative, zero, positive) real-root counts with multiplicity."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    zeros = 0
    q = p
    while q.coeff(0) == 0 and q.degree > 0:
        q = Poly(q.coeffs[:-1])
        zeros += 1
    bound = Fraction(math.ceil(root_bound(q) * 1.001 + 1.0))
    return count_roots(q, -bound, 0), zeros, count_roots(q, 0, bound)


def largest_real_root(p: Poly) -> float:
    """tau(p): the largest real root, accurate to the refinement grid."""
    return real_roots(p).largest


def char_poly(m: Sequence[Sequence]) -> Poly:
    """det(xI - M) by the Faddeev-LeVerrier recurrence in exact rational arithmetic."""
    rows = [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n > MAX_CHARPOLY_DIM:
        raise ValueError(f"dimension {n} exceeds {MAX_CHARPOLY_DIM}")
    a = [[Fraction(_exact(v)) for v in r] for r in rows]
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c_prev
        mk = prod
        tr = sum(sum(a[i][l] * mk[l][i] for l in range(n)) for i in range(n))
        c_prev = -tr / k
        coeffs.append(c_prev)
    return Poly(coeffs)


# -- closed-form families -----------------------------------------------------


def resolvent_sextic(a, b, c) -> Poly:
    """Sextic whose roots are 2(x_p + x_q) over root pairs of x^4 + a x^2 + b x + c."""
    a, b, c = _exact(a), _exact(b), _exact(c)
    return Poly((1, 0, 8 * a, 0, 16 * (a * a - 4 * c), 0, -64 * b * b))


def quartic_energy(a, b, c) -> float:
    """Sum of |roots| of x^4 + a x^2 + b x + c via the largest root of its resolvent.

    The quartic must have four real roots, exactly two of them positive.
    """
    f = Poly((1, 0, a, b, c))
    neg, zero, pos = count_signed_roots(f)
    if neg + zero + pos != 4:
        raise PreconditionError(f"quartic {f} has {neg + zero + pos} real roots, need 4")
    if pos != 2:
        raise PreconditionError(f"quartic {f} has {pos} positive roots, need exactly 2")
    return largest_real_root(resolvent_sextic(a, b, c))


def tripartite_quotient_poly(i: int, t: int) -> Poly:
    """Characteristic polynomial of the part quotient of K_{1,i,t}."""
    return Poly((1, 0, -(t * i + i + t), -2 * t * i))


def deleted_quotient_poly(i: int, t: int) -> Poly:
    """Characteristic polynomial of the split quotient of K_{1,i,t} minus a 1-part/i-part edge."""
    return Poly((1, 0, -t * i - i - t + 1, -2 * (t * i - t), t * i - t))


def tripartite_g(i: int, t: int) -> Poly:
    """Cubic whose largest root is E(K_{1,i,t})."""
    _check_it(i, t)
    return Poly((1, 0, -4 * (t * i + i + t), -16 * t * i))


def tripartite_h(i: int, t: int) -> Poly:
    """Sextic whose largest root is E(K_{1,i,t} - e) for e between the 1-part and the i-part."""
    _check_it(i, t)
    return Poly((
        1, 0,
        -8 * (t * i + t + i - 1), 0,
        16 * ((t * i + t) ** 2 + (i - 1) ** 2 * (2 * t + 1)), 0,
        -256 * (t * i - t) ** 2,
    ))


def tripartite_q_r(i: int, t: int) -> tuple[Poly, Poly]:
    """Quotient and remainder pair with h = q*g + r."""
    _check_it(i, t)
    q = Poly((1, 0, -4 * ((i + 1) * t + i - 2), 16 * t * i))
    r = Poly((4 * t * i - 4 * t - 1, -8 * t * i, -16 * (2 * i - 1) * t * t)) * -16
    return q, r


def case_one_factors(t: int) -> tuple[Poly, Poly]:
    """The two cubic factors of tripartite_h(2, t)."""
    h1 = Poly((1, 4, -(12 * t - 4), -16 * t))
    h2 = Poly((1, -4, -(12 * t - 4), 16 * t))
    return h1, h2


def _check_it(i: int, t: int) -> None:
    if i < 1 or t < 1:
        raise ValueError(f"need i >= 1 and t >= 1, got i={i}, t={t}")


def f_a(n, i, a):
    """Growth condition polynomial; exact when ``a`` is rational, float otherwise."""
    return n * (a * i * i - 2 * (1 - a) * i - 1) - a * i ** 3 + (1 - a) * i * i - (a - 2) * i


def bound_polys(n: int, i: int) -> tuple[Poly, Poly, Poly]:
    """Spectral-radius bound polynomials for given order n and large-part size i.

    Returns the cubic for K_{1,i,n-i-1}, the quadratic for K_{1,i,1,...,1}
    (all 1-parts merged) and the quartic for K_{1,2,2,n-5}.
    """
    cubic = Poly((1, 0, -((n - i) * (i + 1) - 1), -2 * (n - i - 1) * i))
    quadratic = Poly((1, -(n - i - 1), -i * (n - i)))
    quartic = Poly((1, 0, -(5 * n - 17), -8 * (2 * n - 9), -6 * (2 * n - 10)))
    return cubic, quadratic, quartic
