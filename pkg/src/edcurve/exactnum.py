"""Exact rational scalar and polynomial arithmetic.

Everything downstream (cameras, critical polynomials, certificates, root
isolation) reduces to a handful of primitives implemented here over
arbitrary-precision rationals:

* ``UniPoly`` — univariate polynomials over Q, dense ascending coefficients;
* ``HomPoly2`` — homogeneous binary forms of a *formal* degree, so leading-zero
  coefficient data (roots at [0:1] or [1:0]) is never silently lost;
* gcd / squarefree part / distinct-root counts via an integer primitive
  polynomial-remainder sequence (clears denominators once, divides out content
  at every step — no rational-coefficient blow-up);
* Sylvester resultants and discriminants via fraction-free (Bareiss)
  determinant elimination on integer matrices;
* Sturm-sequence real-root isolation with certified bisection refinement.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share between threads.

Rationals are ``fractions.Fraction`` (always lowest terms, positive
denominator); ``rat_from_str``/``rat_to_str`` fix the "a/b" wire format used
by every JSON schema in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Sequence

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

# Fixed large primes for the one-directional modular fast paths.  For p not
# dividing the integer leading coefficients, deg gcd mod p >= deg gcd over Q,
# so a constant modular gcd *proves* coprimality; likewise a nonzero modular
# resultant proves nonvanishing.  Inconclusive answers fall through to the
# exact algorithm, so these are never a source of approximation.
_PRIMES = (2305843009213693951, 2147483647, 999999999999999989)


def rat_from_str(s: str) -> Rat:
    """Parse a rational literal "a/b" or "a" (optional sign, decimal digits)."""
    if not isinstance(s, str) or not _RAT_RE.match(s.strip()):
        raise ValueError(f"not a rational literal: {s!r}")
    try:
        return Fraction(s.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {s!r}") from None


def rat_to_str(x: Rat) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _as_rat(x) -> Rat:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return rat_from_str(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


# ---------------------------------------------------------------------------
# integer-coefficient helpers (dense ascending lists, no trailing zeros)
# ---------------------------------------------------------------------------

def _int_content(a: Sequence[int]) -> int:
    c = 0
    for x in a:
        c = _int_gcd(c, abs(x))
        if c == 1:
            return 1
    return c


def _int_primitive(a: list[int]) -> list[int]:
    """Divide by the (positive) content; keeps every sign."""
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return a
    c = _int_content(a)
    if c > 1:
        a = [x // c for x in a]
    return a


def _int_prem_clean(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^k * a mod b by exact long division, k even.

    Multiplying by an even power of lc(b) at least delta+1 keeps every
    elimination step integral and the scaling factor positive, so sign
    patterns survive — required for Sturm chains.
    """
    da, db = len(a) - 1, len(b) - 1
    delta = da - db
    lc = b[-1]
    k = delta + 1
    if k % 2:
        k += 1
    r = [x * lc**k for x in a]
    # classical long division, quotient discarded; all arithmetic exact because
    # each elimination step uses quotient coef // lc which is exact after the
    # lc^k premultiplication
    for i in range(delta, -1, -1):
        coef = r[db + i]
        if coef:
            q, rem = divmod(coef, lc)
            if rem:
                raise AssertionError("pseudo-remainder premultiplication too small")
            for j in range(db + 1):
                r[i + j] -= q * b[j]
    del r[db:]
    while r and r[-1] == 0:
        r.pop()
    return r


def _int_prs_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive polynomial-remainder-sequence gcd of integer polynomials.

    Content is stripped after every pseudo-remainder, which keeps coefficient
    growth subresultant-bounded at the degrees the pipeline reaches (~60).
    """
    a = _int_primitive(list(a))
    b = _int_primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem_clean(a, b)
        a, b = b, _int_primitive(r)
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _mod_gcd_degree(a: Sequence[int], b: Sequence[int], p: int) -> int | None:
    """Degree of gcd(a mod p, b mod p), or None if p kills a leading coefficient."""
    if a[-1] % p == 0 or b[-1] % p == 0:
        return None
    fa = [x % p for x in a]
    fb = [x % p for x in b]
    while fb and any(fb):
        while fb and fb[-1] == 0:
            fb.pop()
        if not fb:
            break
        inv = pow(fb[-1], p - 2, p)
        fb = [x * inv % p for x in fb]
        da, db = len(fa) - 1, len(fb) - 1
        if da < db:
            fa, fb = fb, fa
            continue
        for i in range(da - db, -1, -1):
            coef = fa[db + i]
            if coef:
                fa[db + i] = 0
                for j in range(db):
                    fa[i + j] = (fa[i + j] - coef * fb[j]) % p
        while fa and fa[-1] == 0:
            fa.pop()
        fa, fb = fb, fa
    while fa and fa[-1] == 0:
        fa.pop()
    return len(fa) - 1 if fa else None


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (exact divisions only)."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# UniPoly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over Q; coeffs[k] is the coefficient of t^k.

    Trailing zeros are stripped at construction; the zero polynomial has an
    empty coefficient tuple and its ``degree`` is the sentinel ``None`` rather
    than any integer, so degree formulas can never silently absorb it.
    """

    coeffs: tuple[Rat, ...] = ()

    def __post_init__(self):
        cs = tuple(_as_rat(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None (sentinel) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lc(self) -> Rat:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Rat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UniPoly(tuple(out))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero or other.is_zero:
                return UniPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return UniPoly(tuple(out))
        return self.scale(_as_rat(other))

    __rmul__ = __mul__

    def scale(self, c: Rat) -> "UniPoly":
        c = _as_rat(c)
        return UniPoly(tuple(c * x for x in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def evaluate(self, x: Rat) -> Rat:
        x = _as_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        lc = other.lc
        for i in range(len(rem) - db - 1, -1, -1):
            c = rem[db + i]
            if c:
                q = c / lc
                quo[i] = q
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        return UniPoly(tuple(quo)), UniPoly(tuple(rem[:db]))

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        if self.lc == 1:
            return self
        return self.scale(1 / self.lc)

    # -- conversions ---------------------------------------------------------

    def int_coeffs(self) -> tuple[list[int], int]:
        """(integer coefficient list, positive denominator D) with D*self integral."""
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // _int_gcd(d, c.denominator)
        return [int(c * d) for c in self.coeffs], d

    def to_strs(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_strs(cls, items: Iterable[str]) -> "UniPoly":
        return cls(tuple(rat_from_str(s) for s in items))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                parts.append(rat_to_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{rat_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


UNI_ZERO = UniPoly()
UNI_ONE = UniPoly((Fraction(1),))


def poly_from_roots(roots: Iterable[Rat]) -> UniPoly:
    p = UNI_ONE
    for r in roots:
        p = p * UniPoly((-_as_rat(r), Fraction(1)))
    return p


# ---------------------------------------------------------------------------
# gcd / squarefree / resultants
# ---------------------------------------------------------------------------

def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor.

    Integer primitive-PRS after clearing denominators; a constant gcd modulo a
    fixed 61-bit prime short-circuits the (overwhelmingly common) coprime case
    exactly — see module docstring for why that direction is proof-grade.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return UNI_ONE
    a, _ = p.int_coeffs()
    b, _ = q.int_coeffs()
    for prime in _PRIMES:
        d = _mod_gcd_degree(a, b, prime)
        if d is not None:
            if d == 0:
                return UNI_ONE
            break
    g = _int_prs_gcd(a, b)
    return UniPoly(tuple(Fraction(x) for x in g)).monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic p / gcd(p, p'): same roots, every multiplicity one."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return UNI_ONE
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    return p.exact_div(g).monic()


def distinct_root_count(p: UniPoly) -> int:
    """Number of distinct complex roots (degree of the squarefree part)."""
    if p.is_zero:
        raise ValueError("root count of the zero polynomial")
    d = squarefree_part(p).degree
    assert d is not None
    return d


def _sylvester_matrix(a: Sequence[int], b: Sequence[int], m: int, n: int) -> list[list[int]]:
    """Classical Sylvester matrix for coefficient lists of formal degrees m, n.

    ``a``/``b`` are ascending with length m+1 / n+1 (leading zeros allowed:
    this is what makes the binary-form resultant see roots at infinity).
    """
    size = m + n
    rows = []
    ad = list(reversed(a))  # descending
    bd = list(reversed(b))
    for i in range(n):
        rows.append([0] * i + ad + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + bd + [0] * (size - n - 1 - i))
    return rows


def resultant(p: UniPoly, q: UniPoly) -> Rat:
    """Sylvester resultant w.r.t. the actual degrees; 0 iff a common root exists."""
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of a zero polynomial")
    m, n = p.degree, q.degree
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    a, da = p.int_coeffs()
    b, db = q.int_coeffs()
    det = _bareiss_det(_sylvester_matrix(a, b, m, n))
    return Fraction(det, da**n * db**m)


def discriminant(p: UniPoly) -> Rat:
    """(-1)^(d(d-1)/2) * res(p, p') / lc(p); 0 iff p has a repeated root."""
    if p.is_zero or p.degree == 0:
        raise ValueError("discriminant requires degree >= 1")
    d = p.degree
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


# ---------------------------------------------------------------------------
# HomPoly2
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomPoly2:
    """Homogeneous binary form of *formal* degree e; coeffs[k] multiplies s^(e-k) t^k.

    The coefficient tuple always has length e+1 — zero entries anywhere are
    meaningful (they encode roots at [1:0]/[0:1]), and the zero form of formal
    degree e is allowed and flagged by ``is_zero``.
    """

    degree: int
    coeffs: tuple[Rat, ...] = ()

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("formal degree must be nonnegative")
        cs = tuple(_as_rat(c) for c in self.coeffs)
        if len(cs) < self.degree + 1:
            cs = cs + (Fraction(0),) * (self.degree + 1 - len(cs))
        if len(cs) != self.degree + 1:
            raise ValueError("coefficient count must be formal degree + 1")
        object.__setattr__(self, "coeffs", cs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "HomPoly2") -> "HomPoly2":
        if self.degree != other.degree:
            raise ValueError("formal degrees differ")
        return HomPoly2(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HomPoly2":
        return HomPoly2(self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "HomPoly2") -> "HomPoly2":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomPoly2):
            e = self.degree + other.degree
            out = [Fraction(0)] * (e + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return HomPoly2(e, tuple(out))
        c = _as_rat(other)
        return HomPoly2(self.degree, tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def partial_s(self) -> "HomPoly2":
        if self.degree == 0:
            return HomPoly2(0, (Fraction(0),))
        e = self.degree
        return HomPoly2(e - 1, tuple((e - k) * self.coeffs[k] for k in range(e)))

    def partial_t(self) -> "HomPoly2":
        if self.degree == 0:
            return HomPoly2(0, (Fraction(0),))
        e = self.degree
        return HomPoly2(e - 1, tuple(k * self.coeffs[k] for k in range(1, e + 1)))

    def evaluate(self, s: Rat, t: Rat) -> Rat:
        s, t = _as_rat(s), _as_rat(t)
        e = self.degree
        return sum((c * s ** (e - k) * t**k for k, c in enumerate(self.coeffs)), Fraction(0))

    def dehom(self) -> UniPoly:
        """Restriction to the chart s = 1 (same coefficient list, as t-poly)."""
        return UniPoly(self.coeffs)

    @property
    def s_valuation(self) -> int:
        """Multiplicity of the root [0:1] (s-adic valuation); form must be nonzero."""
        if self.is_zero:
            raise ValueError("valuation of the zero form")
        d = self.dehom().degree
        assert d is not None
        return self.degree - d

    @classmethod
    def homogenize(cls, p: UniPoly, degree: int) -> "HomPoly2":
        """s-pad p(t) to a form of the given formal degree (>= deg p)."""
        if not p.is_zero and degree < len(p.coeffs) - 1:
            raise ValueError("formal degree below actual degree")
        return cls(degree, p.coeffs)

    def to_strs(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_strs(cls, degree: int, items: Sequence[str]) -> "HomPoly2":
        return cls(degree, tuple(rat_from_str(s) for s in items))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        e = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            sm, tm = e - k, k
            mono = "*".join(
                ([f"s^{sm}" if sm > 1 else "s"] if sm else [])
                + ([f"t^{tm}" if tm > 1 else "t"] if tm else [])
            ) or "1"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{rat_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def hom_distinct_root_count(h: HomPoly2) -> int:
    """Distinct zeros of a nonzero binary form on P^1 (chart count + [0:1] if s | h)."""
    if h.is_zero:
        raise ValueError("root count of the zero form")
    d = h.dehom()
    cnt = distinct_root_count(d)
    if d.degree < h.degree:  # s divides h: the extra root at [0:1]
        cnt += 1
    return cnt


def hom_resultant(f: HomPoly2, g: HomPoly2) -> Rat:
    """Resultant of two binary forms w.r.t. their formal degrees.

    Vanishes exactly when the (nonzero) forms share a zero on P^1, including
    at [0:1] — which the actual-degree univariate resultant would miss.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of a zero form")
    m, n = f.degree, g.degree
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    a, da = f.dehom().int_coeffs()
    b, db = g.dehom().int_coeffs()
    a = a + [0] * (m + 1 - len(a))
    b = b + [0] * (n + 1 - len(b))
    det = _bareiss_det(_sylvester_matrix(a, b, m, n))
    return Fraction(det, da**n * db**m)


def hom_resultant_is_nonzero(f: HomPoly2, g: HomPoly2) -> bool:
    """Exact nonvanishing test with a modular shortcut (nonzero mod p => nonzero)."""
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of a zero form")
    m, n = f.degree, g.degree
    if m == 0 or n == 0:
        return hom_resultant(f, g) != 0
    a, _ = f.dehom().int_coeffs()
    b, _ = g.dehom().int_coeffs()
    a = a + [0] * (m + 1 - len(a))
    b = b + [0] * (n + 1 - len(b))
    p = _PRIMES[0]
    rows = _sylvester_matrix([x % p for x in a], [x % p for x in b], m, n)
    if _det_mod(rows, p) != 0:
        return True
    return hom_resultant(f, g) != 0


def _det_mod(m: list[list[int]], p: int) -> int:
    n = len(m)
    det = 1
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if m[i][k] % p:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        inv = pow(m[k][k], p - 2, p)
        det = det * m[k][k] % p
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                for j in range(k, n):
                    m[i][j] = (m[i][j] - f * m[k][j]) % p
    return det % p


def hom_discriminant(f: HomPoly2) -> Rat:
    """Resultant of the two partials; vanishes iff the form has a repeated zero on P^1."""
    if f.is_zero:
        raise ValueError("discriminant of the zero form")
    if f.degree == 0:
        raise ValueError("discriminant requires degree >= 1")
    if f.degree == 1:
        return Fraction(1)  # a single simple zero, never repeated
    fs, ft = f.partial_s(), f.partial_t()
    if fs.is_zero or ft.is_zero:
        # only c*t^e / c*s^e with e >= 2 get here: an e-fold zero
        return Fraction(0)
    return hom_resultant(fs, ft)


def hom_gcd(f: HomPoly2, g: HomPoly2) -> HomPoly2:
    """Greatest common divisor of two binary forms (monic chart part, exact s-power)."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero forms")
    if f.is_zero:
        return _hom_monicish(g)
    if g.is_zero:
        return _hom_monicish(f)
    u = poly_gcd(f.dehom(), g.dehom())
    sval = min(f.s_valuation, g.s_valuation)
    du = u.degree
    assert du is not None
    return HomPoly2(du + sval, u.coeffs)


def _hom_monicish(f: HomPoly2) -> HomPoly2:
    d = f.dehom()
    return HomPoly2(f.degree, d.monic().coeffs)


def hom_gcd_many(forms: Sequence[HomPoly2]) -> HomPoly2:
    """gcd of a family of binary forms, ignoring zero members; all-zero is an error."""
    alive = [f for f in forms if not f.is_zero]
    if not alive:
        raise ValueError("gcd of an all-zero family")
    g = _hom_monicish(alive[0])
    for f in alive[1:]:
        if g.degree == 0:
            break
        g = hom_gcd(g, f)
    return g


# ---------------------------------------------------------------------------
# Sturm isolation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsolatingInterval:
    """Open rational interval certified to contain exactly one real root.

    Endpoints are never roots of the tracked polynomial; ``refinements`` counts
    the bisection steps performed since construction.
    """

    lo: Rat
    hi: Rat
    refinements: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lo", _as_rat(self.lo))
        object.__setattr__(self, "hi", _as_rat(self.hi))
        if not self.lo < self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Rat:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Rat:
        return (self.lo + self.hi) / 2


def _sturm_chain(p: UniPoly) -> list[list[int]]:
    """Sturm chain as primitive integer polynomials (positive-scalar equivalent)."""
    a, _ = p.int_coeffs()
    a = _int_primitive(a)
    b, _ = p.derivative().int_coeffs()
    b = _int_primitive(b)
    chain = [a]
    if b:
        chain.append(b)
    while len(chain) >= 2 and len(chain[-1]) >= 1:
        r = _int_prem_clean(chain[-2], chain[-1])
        r = _int_primitive([-x for x in r])
        if not r:
            break
        chain.append(r)
        if len(r) == 1:
            break
    return chain


def _eval_int(c: Sequence[int], x: Rat) -> int:
    """Sign-faithful evaluation: numerator of c(x) after clearing x's denominator."""
    num, den = x.numerator, x.denominator
    acc = 0
    for k in range(len(c) - 1, -1, -1):
        acc = acc * num + c[k] * den ** (len(c) - 1 - k)
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(chain: Sequence[Sequence[int]], x) -> int:
    signs = []
    for c in chain:
        if x == "+inf":
            s = _sign(c[-1])
        elif x == "-inf":
            s = _sign(c[-1]) * (-1 if (len(c) - 1) % 2 else 1)
        else:
            s = _sign(_eval_int(c, x))
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_isolate(p: UniPoly) -> list[IsolatingInterval]:
    """Disjoint open rational intervals, one per real root of a squarefree p."""
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree >= 1 and poly_gcd(p, p.derivative()).degree != 0:
        raise ValueError("apply squarefree_part first")
    if p.degree == 0:
        return []
    chain = _sturm_chain(p)
    total = _variations(chain, "-inf") - _variations(chain, "+inf")
    if total == 0:
        return []
    bound = 1 + max(abs(c / p.lc) for c in p.coeffs)
    b = Fraction(int(bound) + 1)
    lo, hi = -b, b
    # endpoints of the Cauchy box are non-roots by construction (|root| < b)
    out: list[IsolatingInterval] = []
    stack = [(lo, _variations(chain, lo), hi, _variations(chain, hi))]
    while stack:
        a, va, c, vc = stack.pop()
        n = va - vc
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(a, c))
            continue
        m = (a + c) / 2
        if p.evaluate(m) == 0:
            # the midpoint is itself a root: fence it off symmetrically
            delta = (c - a) / 4
            while (
                p.evaluate(m - delta) == 0
                or p.evaluate(m + delta) == 0
                or _variations(chain, m - delta) - _variations(chain, m + delta) != 1
            ):
                delta /= 2
            out.append(IsolatingInterval(m - delta, m + delta))
            vl = _variations(chain, m - delta)
            vr = _variations(chain, m + delta)
            stack.append((a, va, m - delta, vl))
            stack.append((m + delta, vr, c, vc))
        else:
            vm = _variations(chain, m)
            stack.append((a, va, m, vm))
            stack.append((m, vm, c, vc))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(p: UniPoly, iv: IsolatingInterval, width_bound: Rat) -> IsolatingInterval:
    """Bisect iv (which must bracket one simple root of p) down to the width bound."""
    width_bound = _as_rat(width_bound)
    if width_bound <= 0:
        raise ValueError("width bound must be positive")
    lo, hi = iv.lo, iv.hi
    slo, shi = _sign(p.evaluate(lo)), _sign(p.evaluate(hi))
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError("invalid interval (sign conditions fail)")
    steps = iv.refinements
    while hi - lo > width_bound:
        m = (lo + hi) / 2
        sm = _sign(p.evaluate(m))
        steps += 1
        if sm == 0:
            # landed exactly on the root: shrink to a symmetric window
            eps = min(width_bound, hi - m, m - lo) / 2
            while p.evaluate(m - eps) == 0 or p.evaluate(m + eps) == 0:
                eps /= 2
            return IsolatingInterval(m - eps, m + eps, steps)
        if sm == slo:
            lo = m
        else:
            hi = m
    return IsolatingInterval(lo, hi, steps)
