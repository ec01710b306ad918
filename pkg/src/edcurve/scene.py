"""World curves, cameras, arrangements, and the exact genericity certificate.

A world curve is a base-point-free tuple of binary forms f: P^1 -> P^N; a
camera is an exact full-rank (h+1) x (N+1) rational matrix acting on the
homogeneous coordinates; an arrangement is an ordered list of cameras sharing
(h, N).  The genericity certificate collects the finite list of exact
nonvanishing conditions under which the 3en-2 count is guaranteed:

* each chart polynomial q_i = C_i^(0) . f has simple zeros on P^1,
* no two chart polynomials share a zero (not even at [0:1]),
* q_a shares no zero with the coordinate sum of squares of its own view,
* the curve has no base points,

plus a separately-reported immersion flag (gcd of the 2x2 minors of the
parameterization Jacobian): cuspidal curves fail it without invalidating the
direct count, so it is informational for the count and a hard precondition
only for the Euler-characteristic cross-check.

Randomness: ``random.Random`` (Mersenne Twister) seeded explicitly; integer
draws use ``randint``, whose values are stable across supported Python
versions, so identical seeds reproduce identical scenes everywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import (
    HomPoly2,
    Rat,
    hom_discriminant,
    hom_gcd,
    hom_gcd_many,
    hom_resultant,
    rat_from_str,
    rat_to_str,
)

_MAX_REJECTION_TRIES = 1000


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalCurve:
    """Parameterized curve f: P^1 -> P^N, N+1 binary forms of common degree e.

    Construction enforces: at least one nonzero coordinate, every coordinate of
    the same formal degree, and no base points (the gcd of all coordinates is
    constant — equivalently the map is defined everywhere and attains its
    degree).  Curves are assumed generically one-to-one; monomial and
    library-constructed curves are, and user-supplied parameterizations are
    expected to be (a fibered parameterization would make image-point counts
    undercount systematically, which the data-stability check would surface).
    """

    N: int
    e: int
    coords: tuple[HomPoly2, ...]

    def __post_init__(self):
        if self.N < 1 or self.e < 1:
            raise ValueError("need ambient dimension N >= 1 and degree e >= 1")
        if len(self.coords) != self.N + 1:
            raise ValueError("need exactly N+1 coordinate forms")
        if any(c.degree != self.e for c in self.coords):
            raise ValueError("all coordinates must have formal degree e")
        if all(c.is_zero for c in self.coords):
            raise ValueError("all coordinates vanish")
        g = hom_gcd_many(self.coords)
        if g.degree != 0:
            raise ValueError("parameterization has a base point (common factor "
                             f"of degree {g.degree})")

    def evaluate(self, s: Rat, t: Rat) -> tuple[Rat, ...]:
        return tuple(c.evaluate(s, t) for c in self.coords)

    def jacobian_minor_gcd(self) -> HomPoly2:
        """gcd of the 2x2 minors of [df/ds; df/dt]: the immersion-failure locus.

        Constant (degree 0) exactly when f is an immersion; zeros are the
        parameters of cusps of the parameterization.
        """
        ds = [c.partial_s() for c in self.coords]
        dt = [c.partial_t() for c in self.coords]
        minors = []
        for i in range(self.N + 1):
            for j in range(i + 1, self.N + 1):
                minors.append(ds[i] * dt[j] - ds[j] * dt[i])
        if all(m.is_zero for m in minors):
            raise ValueError("degenerate parameterization: all Jacobian minors vanish")
        return hom_gcd_many(minors)

    @property
    def is_immersion(self) -> bool:
        return self.jacobian_minor_gcd().degree == 0


@dataclass(frozen=True)
class Camera:
    """Full-rank (h+1) x (N+1) exact rational matrix; row 0 is the chart row."""

    h: int
    N: int
    entries: tuple[tuple[Rat, ...], ...]

    def __post_init__(self):
        if self.h < 1 or self.N < 1:
            raise ValueError("need h >= 1 and N >= 1")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(rows) != self.h + 1 or any(len(r) != self.N + 1 for r in rows):
            raise ValueError("camera must be (h+1) x (N+1)")
        object.__setattr__(self, "entries", rows)
        if _exact_rank(rows) != self.h + 1:
            raise ValueError("camera matrix not full rank")

    def row(self, j: int) -> tuple[Rat, ...]:
        return self.entries[j]


def _exact_rank(rows: Sequence[Sequence[Rat]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / pr[col]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


@dataclass(frozen=True)
class Arrangement:
    """Nonempty ordered list of cameras sharing (h, N)."""

    cameras: tuple[Camera, ...]

    def __post_init__(self):
        if not self.cameras:
            raise ValueError("arrangement needs at least one camera")
        h, N = self.cameras[0].h, self.cameras[0].N
        if any((c.h, c.N) != (h, N) for c in self.cameras):
            raise ValueError("cameras disagree on (h, N)")

    @property
    def n(self) -> int:
        return len(self.cameras)

    @property
    def h(self) -> int:
        return self.cameras[0].h

    @property
    def N(self) -> int:
        return self.cameras[0].N


def apply_camera(camera: Camera, f: RationalCurve) -> tuple[HomPoly2, ...]:
    """Row-by-row image of the curve: entry j is C^(j) . (f_0..f_N), degree e."""
    if camera.N != f.N:
        raise ValueError(f"camera expects world dimension {camera.N}, curve has {f.N}")
    zero = HomPoly2(f.e)
    out = []
    for row in camera.entries:
        acc = zero
        for c, coord in zip(row, f.coords):
            if c:
                acc = acc + c * coord
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# genericity certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenericityCertificate:
    """Exact nonvanishing conditions for the closed-form critical count.

    ``passes`` covers the camera-side conditions plus base-point-freeness;
    ``immersion_ok`` is reported separately because a cuspidal curve only
    invalidates the Euler cross-check, not the direct count.
    """

    discriminants: tuple[Rat, ...]                 # per camera, of q_i
    pairwise_resultants: tuple[tuple[int, int, Rat], ...]
    sum_square_gcd_trivial: tuple[bool, ...]       # per camera a: gcd(q_a, sum_j p_aj^2) == 1
    base_point_free: bool
    immersion_ok: bool
    immersion_defect_degree: int                   # deg of the Jacobian-minor gcd
    reasons: tuple[str, ...]                       # human-readable failure notes

    @property
    def passes(self) -> bool:
        return (
            all(d != 0 for d in self.discriminants)
            and all(r != 0 for _, _, r in self.pairwise_resultants)
            and all(self.sum_square_gcd_trivial)
            and self.base_point_free
        )

    def to_json_dict(self) -> dict:
        return {
            "passes": self.passes,
            "discriminants": [rat_to_str(d) for d in self.discriminants],
            "pairwise_resultants": [
                {"i": i, "j": j, "value": rat_to_str(r)}
                for i, j, r in self.pairwise_resultants
            ],
            "sum_square_gcd_trivial": list(self.sum_square_gcd_trivial),
            "base_point_free": self.base_point_free,
            "immersion_ok": self.immersion_ok,
            "immersion_defect_degree": self.immersion_defect_degree,
            "reasons": list(self.reasons),
        }


def genericity_certificate(arr: Arrangement, f: RationalCurve) -> GenericityCertificate:
    """Compute every certificate quantity exactly; deterministic."""
    if arr.N != f.N:
        raise ValueError("arrangement and curve dimensions differ")
    reasons: list[str] = []
    images = [apply_camera(c, f) for c in arr.cameras]
    qs = [img[0] for img in images]
    for i, q in enumerate(qs):
        if q.is_zero:
            # no discriminant/resultant data can be computed past this
            reasons.append(f"image plane at infinity contains the curve (camera {i})")
            return GenericityCertificate(
                discriminants=(Fraction(0),) * arr.n,
                pairwise_resultants=(),
                sum_square_gcd_trivial=(False,) * arr.n,
                base_point_free=True,
                immersion_ok=f.is_immersion,
                immersion_defect_degree=_defect_degree(f),
                reasons=tuple(reasons),
            )

    discs = tuple(hom_discriminant(q) for q in qs)
    for i, d in enumerate(discs):
        if d == 0:
            reasons.append(f"chart polynomial of camera {i} has a repeated zero")

    pres = []
    for i in range(arr.n):
        for j in range(i + 1, arr.n):
            r = hom_resultant(qs[i], qs[j])
            pres.append((i, j, r))
            if r == 0:
                reasons.append(f"cameras {i} and {j} share a zero at infinity")

    gcd_trivial = []
    for i, img in enumerate(images):
        ssq = HomPoly2(2 * f.e)
        for p in img[1:]:
            ssq = ssq + p * p
        if ssq.is_zero:
            gcd_trivial.append(False)
            reasons.append(f"camera {i} image coordinates vanish identically")
            continue
        trivial = hom_gcd(qs[i], ssq).degree == 0
        gcd_trivial.append(trivial)
        if not trivial:
            reasons.append(
                f"chart polynomial of camera {i} shares a zero with its view's "
                "sum of squares"
            )

    defect = _defect_degree(f)
    immersion_ok = defect == 0
    if not immersion_ok:
        reasons.append("parameterization is not an immersion (cusp present)")

    # base-point-freeness is a construction invariant of RationalCurve; recorded
    # honestly rather than assumed
    return GenericityCertificate(
        discriminants=discs,
        pairwise_resultants=tuple(pres),
        sum_square_gcd_trivial=tuple(gcd_trivial),
        base_point_free=True,
        immersion_ok=immersion_ok,
        immersion_defect_degree=defect,
        reasons=tuple(reasons),
    )


def _defect_degree(f: RationalCurve) -> int:
    d = f.jacobian_minor_gcd().degree
    assert d is not None
    return d


# ---------------------------------------------------------------------------
# seeded generation
# ---------------------------------------------------------------------------

def random_camera(seed: int, h: int, N: int, bound: int = 10) -> Camera:
    """Uniform integer entries in [-bound, bound]; full rank by rejection.

    Mersenne-Twister ``random.Random(seed)``; at most 1000 rejection rounds
    (full-rank failure has probability ~0 for bound >= 2).
    """
    if bound < 2:
        raise ValueError("need bound >= 2")
    rng = random.Random(seed)
    for _ in range(_MAX_REJECTION_TRIES):
        entries = tuple(
            tuple(Fraction(rng.randint(-bound, bound)) for _ in range(N + 1))
            for _ in range(h + 1)
        )
        try:
            return Camera(h, N, entries)
        except ValueError:
            continue
    raise RuntimeError("rejection sampling overflow: no full-rank camera in "
                       f"{_MAX_REJECTION_TRIES} tries")


def random_camera_degree_drop(seed: int, N: int = 3, bound: int = 10) -> Camera:
    """3-row camera whose chart row annihilates the leading world coordinate.

    Every member's chart polynomial drops degree, so the parameter [0:1] lies
    at infinity in every view; two independent members therefore always share
    that zero and any pair fails the certificate, while single members pass.
    """
    rng = random.Random(seed)
    for _ in range(_MAX_REJECTION_TRIES):
        entries = [[Fraction(rng.randint(-bound, bound)) for _ in range(N + 1)]
                   for _ in range(3)]
        entries[0][0] = Fraction(0)
        try:
            return Camera(2, N, tuple(tuple(r) for r in entries))
        except ValueError:
            continue
    raise RuntimeError("rejection sampling overflow")


def random_camera_block_pairs(seed: int, bound: int = 10) -> Camera:
    """3x6 camera whose row j is supported on world coordinates {2j, 2j+1}.

    A proper subfamily of camera space: on the degree-5 monomial curve the
    image coordinates become consecutive two-term blocks, and the count drops
    below the generic value while remaining constant along the family.
    """
    rng = random.Random(seed)
    for _ in range(_MAX_REJECTION_TRIES):
        entries = []
        for j in range(3):
            row = [Fraction(0)] * 6
            row[2 * j] = Fraction(rng.randint(-bound, bound))
            row[2 * j + 1] = Fraction(rng.randint(-bound, bound))
            entries.append(tuple(row))
        try:
            return Camera(2, 5, tuple(entries))
        except ValueError:
            continue
    raise RuntimeError("rejection sampling overflow")


def rational_normal_curve(e: int, N: int) -> RationalCurve:
    """Monomial curve [t^e : s t^(e-1) : ... : s^e] in P^e (requires N = e)."""
    if e < 1:
        raise ValueError("need e >= 1")
    if N != e:
        raise ValueError("monomial curve lives in P^e; pad explicitly for N > e")
    coords = []
    for k in range(e + 1):
        cs = [Fraction(0)] * (e + 1)
        cs[e - k] = Fraction(1)  # s^k t^(e-k)
        coords.append(HomPoly2(e, tuple(cs)))
    return RationalCurve(N=e, e=e, coords=tuple(coords))


def random_curve(seed: int, e: int, N: int, bound: int = 10) -> RationalCurve:
    """Random integer-coefficient degree-e curve in P^N, base-point-free by rejection."""
    if e < 1 or N < 1:
        raise ValueError("need e >= 1 and N >= 1")
    rng = random.Random(seed)
    for _ in range(_MAX_REJECTION_TRIES):
        coords = tuple(
            HomPoly2(e, tuple(Fraction(rng.randint(-bound, bound)) for _ in range(e + 1)))
            for _ in range(N + 1)
        )
        try:
            return RationalCurve(N=N, e=e, coords=coords)
        except ValueError:
            continue
    raise RuntimeError("rejection sampling overflow: no base-point-free curve in "
                       f"{_MAX_REJECTION_TRIES} tries")


# ---------------------------------------------------------------------------
# JSON (de)serialization — the wire schemas used by the CLI and fixtures
# ---------------------------------------------------------------------------

def curve_to_dict(f: RationalCurve) -> dict:
    return {
        "N": f.N,
        "degree": f.e,
        "coords": [c.to_strs() for c in f.coords],
    }


def curve_from_dict(d: dict) -> RationalCurve:
    try:
        N = int(d["N"])
        e = int(d["degree"])
        coords = tuple(
            HomPoly2(e, tuple(rat_from_str(x) for x in row)) for row in d["coords"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed curve object: {exc}") from exc
    return RationalCurve(N=N, e=e, coords=coords)


def camera_to_dict(c: Camera) -> dict:
    return {
        "h": c.h,
        "N": c.N,
        "rows": [[rat_to_str(x) for x in row] for row in c.entries],
    }


def camera_from_dict(d: dict) -> Camera:
    try:
        h = int(d["h"])
        N = int(d["N"])
        rows = tuple(tuple(rat_from_str(x) for x in row) for row in d["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed camera object: {exc}") from exc
    return Camera(h=h, N=N, entries=rows)


def arrangement_to_dict(a: Arrangement) -> dict:
    return {"cameras": [camera_to_dict(c) for c in a.cameras]}


def arrangement_from_dict(d: dict) -> Arrangement:
    try:
        cams = tuple(camera_from_dict(c) for c in d["cameras"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed arrangement object: {exc}") from exc
    return Arrangement(cameras=cams)
