"""Critical-point counts and certified nearest-point recovery on curve multiview varieties.

The distance from data u to the image of a degree-e curve under n cameras,
restricted to the affine charts, is a rational function of the curve
parameter; its derivative has a polynomial numerator

    g(t) = sum_{i,j} (p_ij - u_ij q_i) (p'_ij q_i - p_ij q'_i) prod_{k != i} q_k^3

with p_ij, q_i the dehomogenized image coordinates of view i.  The degree is
at most 3en-2: each Wronskian p' q - p q' loses two degrees to leading-term
cancellation.  The count of the variety's critical points is the number of
distinct complex roots after removing two kinds of spurious parameters:

* roots at poles of some q_i (the curve point is at infinity of that view, so
  not on the affine variety) — removed by exact gcd saturation against q_i;
* parameters where the parameterization itself is singular (cusps), whose
  image points are singular and excluded from critical-point counting —
  removed by saturation against the gcd of the Jacobian 2x2 minors.

An independent cross-check counts Euler-characteristic contributions on the
parameter line instead: the count equals #{zeros of prod q_i on P^1} +
#{zeros of a generic perturbed squared-distance numerator} - 2.  Ordinary
double points of the image cancel from this balance identically, so the check
is valid for any immersed curve; cusps break it and are refused.

Every computation is exact; data points are sampled from a seeded
Mersenne-Twister generator and each count is recomputed with a second,
independent data sample — a disagreement means the sample was non-generic and
surfaces as an error instead of a wrong number.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import (
    HomPoly2,
    IsolatingInterval,
    Rat,
    UNI_ONE,
    UniPoly,
    distinct_root_count,
    hom_distinct_root_count,
    hom_resultant_is_nonzero,
    poly_gcd,
    rat_to_str,
    refine_root,
    squarefree_part,
    sturm_isolate,
)
from .scene import (
    Arrangement,
    GenericityCertificate,
    RationalCurve,
    apply_camera,
    genericity_certificate,
)


class DataInstabilityError(RuntimeError):
    """Two independent data samples produced different counts."""


class CuspError(ValueError):
    """The parameter-space cross-check requires an immersed curve."""


class NonGenericBetaError(RuntimeError):
    """Perturbation parameters kept colliding with the infinity locus."""


# ---------------------------------------------------------------------------
# data points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DataPoint:
    """Per camera i, the h affine image observations u_{i,1..h}; beta0 is the
    optional quadric offset used only by the cross-check's perturbed variant."""

    u: tuple[tuple[Rat, ...], ...]
    beta0: Rat = Fraction(0)

    def __post_init__(self):
        object.__setattr__(
            self, "u", tuple(tuple(Fraction(x) for x in row) for row in self.u)
        )
        object.__setattr__(self, "beta0", Fraction(self.beta0))

    def check_shape(self, arr: Arrangement):
        if len(self.u) != arr.n or any(len(row) != arr.h for row in self.u):
            raise ValueError("data shape does not match the arrangement")

    def to_json_dict(self) -> dict:
        return {
            "u": [[rat_to_str(x) for x in row] for row in self.u],
            "beta0": rat_to_str(self.beta0),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DataPoint":
        from .exactnum import rat_from_str

        try:
            u = tuple(tuple(rat_from_str(x) for x in row) for row in d["u"])
            beta0 = rat_from_str(d.get("beta0", "0"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed data object: {exc}") from exc
        return cls(u=u, beta0=beta0)


def random_data_point(seed: int, n: int, h: int) -> DataPoint:
    """Rationals num/den with num in [-64, 64], den in [1, 8] (Mersenne Twister).

    Small denominators keep cleared-integer coefficient growth modest while the
    draws stay generic with probability 1 for every algebraic condition used.
    """
    rng = random.Random(seed)
    u = tuple(
        tuple(Fraction(rng.randint(-64, 64), rng.randint(1, 8)) for _ in range(h))
        for _ in range(n)
    )
    return DataPoint(u=u)


# ---------------------------------------------------------------------------
# the critical polynomial and its reduction
# ---------------------------------------------------------------------------

def _image_charts(f: RationalCurve, arr: Arrangement):
    """[(q_i, [p_i1..p_ih])] as univariate chart polynomials; errors on a
    view whose chart polynomial vanishes identically."""
    charts = []
    for i, cam in enumerate(arr.cameras):
        img = apply_camera(cam, f)
        if img[0].is_zero:
            raise ValueError(f"curve at infinity of camera {i}")
        q = img[0].dehom()
        ps = [p.dehom() for p in img[1:]]
        charts.append((q, ps))
    return charts


def critical_polynomial(f: RationalCurve, arr: Arrangement, u: DataPoint) -> UniPoly:
    """Numerator of d/dt of the squared distance, assembled term-exactly.

    g = sum_{i,j} (p_ij - u_ij q_i)(p'_ij q_i - p_ij q'_i) prod_{k != i} q_k^3;
    degree <= 3en-2 by Wronskian leading-term cancellation.
    """
    u.check_shape(arr)
    charts = _image_charts(f, arr)
    qcubes = [q * q * q for q, _ in charts]
    g = UniPoly()
    for i, (q, ps) in enumerate(charts):
        dq = q.derivative()
        outer = UNI_ONE
        for k, qc in enumerate(qcubes):
            if k != i:
                outer = outer * qc
        per_view = UniPoly()
        for j, p in enumerate(ps):
            lin = p - u.u[i][j] * q
            wron = p.derivative() * q - p * dq
            per_view = per_view + lin * wron
        g = g + per_view * outer
    return g


@dataclass(frozen=True)
class ReducedCritical:
    """Squarefree critical polynomial with spurious factors saturated away."""

    raw: UniPoly
    reduced: UniPoly
    removed_pole_factors: int       # total degree removed at poles of the q_i
    removed_immersion_factors: int  # total degree removed at cusp parameters


def reduce_critical_polynomial(
    f: RationalCurve, arr: Arrangement, u: DataPoint
) -> ReducedCritical:
    g = critical_polynomial(f, arr, u)
    if g.is_zero:
        raise ValueError("critical polynomial vanished identically; data sits on "
                         "the variety's symmetry locus")
    red = squarefree_part(g)
    charts = _image_charts(f, arr)
    poles_removed = 0
    for q, _ in charts:
        if q.degree == 0:
            continue
        common = poly_gcd(red, q)
        d = common.degree
        if d:
            red = red.exact_div(common)
            poles_removed += d
    cusp_removed = 0
    w = f.jacobian_minor_gcd().dehom()
    if w.degree and w.degree > 0:
        common = poly_gcd(red, w)
        d = common.degree
        if d:
            red = red.exact_div(common)
            cusp_removed += d
    return ReducedCritical(
        raw=g,
        reduced=red,
        removed_pole_factors=poles_removed,
        removed_immersion_factors=cusp_removed,
    )


# ---------------------------------------------------------------------------
# ED degree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EDReport:
    """Everything one run of the affine count produces, exact and auditable."""

    ed_degree: int
    critical_poly_degree: int
    removed_pole_factors: int
    removed_immersion_factors: int
    certificate: GenericityCertificate
    formula_value: int                     # 3en-2
    formula_match: Optional[bool]          # None when outside the h >= 2 regime
    cross_check: Optional[int]             # filled by callers that also run it
    stable: bool                           # both data seeds agreed
    seeds: tuple[int, ...]
    e: int
    n: int
    h: int

    def to_json_dict(self) -> dict:
        return {
            "ed_degree": self.ed_degree,
            "critical_poly_degree": self.critical_poly_degree,
            "removed_pole_factors": self.removed_pole_factors,
            "removed_immersion_factors": self.removed_immersion_factors,
            "certificate": self.certificate.to_json_dict(),
            "formula_value": self.formula_value,
            "formula_match": self.formula_match,
            "cross_check": self.cross_check,
            "stable": self.stable,
            "seeds": list(self.seeds),
            "e": self.e,
            "n": self.n,
            "h": self.h,
        }


def ed_degree_affine(
    f: RationalCurve,
    arr: Arrangement,
    seed: int,
    *,
    allow_h1: bool = False,
    data_points: Optional[Sequence[DataPoint]] = None,
) -> EDReport:
    """Distinct critical points of the squared distance to the affine multiview curve.

    Samples a data point from ``seed``, counts, then recounts with ``seed + 1``
    and requires agreement (raising :class:`DataInstabilityError` otherwise).
    ``data_points`` overrides the sampler with explicit data (reproduction and
    testing); exactly two points are used.  h = 1 arrangements are refused
    unless ``allow_h1`` — the closed-form comparison is h >= 2 territory, so
    ``formula_match`` is None for such runs.
    """
    if arr.h < 2 and not allow_h1:
        raise ValueError("h = 1 arrangements need allow_h1=True (exploratory only)")
    if data_points is None:
        samples = [random_data_point(seed, arr.n, arr.h),
                   random_data_point(seed + 1, arr.n, arr.h)]
    else:
        if len(data_points) != 2:
            raise ValueError("need exactly two explicit data points")
        samples = list(data_points)

    counts = []
    reductions = []
    for s in samples:
        rc = reduce_critical_polynomial(f, arr, s)
        d = rc.reduced.degree
        assert d is not None
        counts.append(d)
        reductions.append(rc)
    if counts[0] != counts[1]:
        raise DataInstabilityError("data not generic; reseed")

    cert = genericity_certificate(arr, f)
    rc = reductions[0]
    raw_deg = rc.raw.degree
    assert raw_deg is not None
    formula = 3 * f.e * arr.n - 2
    return EDReport(
        ed_degree=counts[0],
        critical_poly_degree=raw_deg,
        removed_pole_factors=rc.removed_pole_factors,
        removed_immersion_factors=rc.removed_immersion_factors,
        certificate=cert,
        formula_value=formula,
        formula_match=(counts[0] == formula) if arr.h >= 2 else None,
        cross_check=None,
        stable=True,
        seeds=(seed, seed + 1),
        e=f.e,
        n=arr.n,
        h=arr.h,
    )


# ---------------------------------------------------------------------------
# Euler-characteristic cross-check
# ---------------------------------------------------------------------------

def euler_cross_check(f: RationalCurve, arr: Arrangement, seed: int) -> int:
    """#S_inf + #S_Q - 2, the parameter-line Euler-characteristic count.

    #S_inf: distinct zeros on P^1 of prod_i q_i (parameters mapped to infinity
    of some view).  #S_Q: distinct zeros of the numerator of the perturbed
    squared distance

        G = beta0 * prod Q_k^2 + sum_i [prod_{k != i} Q_k^2] sum_j (P_ij - beta_ij Q_i)^2

    for generic rational beta.  The two sets must be disjoint (verified by a
    binary-form resultant); a collision is a beta-independent certificate
    failure, but beta is re-drawn a few times before giving up, since the check
    itself must not depend on one unlucky draw.  Cuspidal curves are refused:
    node contributions cancel from this balance, cusp contributions do not.
    """
    if not f.is_immersion:
        raise CuspError("cross-check requires immersion")
    images = [apply_camera(c, f) for c in arr.cameras]
    qs = [img[0] for img in images]
    for i, q in enumerate(qs):
        if q.is_zero:
            raise ValueError(f"curve at infinity of camera {i}")
    prod_q = qs[0]
    for q in qs[1:]:
        prod_q = prod_q * q
    s_inf = hom_distinct_root_count(prod_q)

    qsq = [q * q for q in qs]
    for attempt in range(4):
        rng = random.Random(f"{seed}:euler-beta:{attempt}")
        beta = [
            [Fraction(rng.randint(-64, 64), rng.randint(1, 8)) for _ in range(arr.h)]
            for _ in range(arr.n)
        ]
        beta0 = Fraction(rng.randint(1, 64), rng.randint(1, 8))
        g_beta = beta0 * _prod_forms(qsq)
        for i, img in enumerate(images):
            outer = _prod_forms([qsq[k] for k in range(arr.n) if k != i])
            inner = HomPoly2(2 * f.e)
            for j, p in enumerate(img[1:]):
                lin = p - beta[i][j] * qs[i]
                inner = inner + lin * lin
            g_beta = g_beta + inner * outer
        if g_beta.is_zero:
            continue
        if hom_resultant_is_nonzero(prod_q, g_beta):
            s_q = hom_distinct_root_count(g_beta)
            return s_inf + s_q - 2
    raise NonGenericBetaError("non-generic beta")


def _prod_forms(forms: Sequence[HomPoly2]) -> HomPoly2:
    acc = HomPoly2(0, (Fraction(1),))
    for h in forms:
        acc = acc * h
    return acc


# ---------------------------------------------------------------------------
# projective count for smooth curves
# ---------------------------------------------------------------------------

def projective_ed_degree_smooth_curve(f: RationalCurve) -> int:
    """e + #{isotropic-quadric intersections} - 2 for an immersed injective curve.

    The middle term counts distinct zeros on P^1 of sum_i f_i^2.  A curve with
    real (rational) coefficients can only lie inside the isotropic quadric if
    every coordinate vanishes — a sum of squares of real forms has no nonzero
    identically-zero instances — so the guard below is vacuous over Q but kept
    as the operation's contract.
    """
    if not f.is_immersion:
        raise CuspError("projective smooth-curve count requires an immersion")
    ssq = HomPoly2(2 * f.e)
    for c in f.coords:
        ssq = ssq + c * c
    if ssq.is_zero:
        raise ValueError("curve inside isotropic quadric")
    return f.e + hom_distinct_root_count(ssq) - 2


# ---------------------------------------------------------------------------
# certified triangulation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangulationResult:
    """Real critical parameters (isolated + refined), exact distances, argmin.

    ``no_finite_minimizer`` flags the structured degenerate outcome: the data
    point has no real critical parameter, so its infimum is approached at a
    pole/infinity rather than attained on the chart.
    """

    critical_parameters: tuple[IsolatingInterval, ...]
    distances: tuple[Rat, ...]
    distance_error_bounds: tuple[Rat, ...]
    argmin_index: Optional[int]
    world_point: Optional[tuple[Rat, ...]]
    image_blocks: Optional[tuple[tuple[Rat, ...], ...]]
    width_bound: Rat
    no_finite_minimizer: bool
    min_lower_bound: Optional[Rat]  # certified lower bound for the attained minimum

    def to_json_dict(self) -> dict:
        return {
            "critical_parameters": [
                {
                    "lo": rat_to_str(iv.lo),
                    "hi": rat_to_str(iv.hi),
                    "refinements": iv.refinements,
                }
                for iv in self.critical_parameters
            ],
            "distances": [rat_to_str(d) for d in self.distances],
            "distance_error_bounds": [rat_to_str(b) for b in self.distance_error_bounds],
            "argmin_index": self.argmin_index,
            "world_point": (
                None if self.world_point is None
                else [rat_to_str(x) for x in self.world_point]
            ),
            "image_blocks": (
                None if self.image_blocks is None
                else [[rat_to_str(x) for x in row] for row in self.image_blocks]
            ),
            "width_bound": rat_to_str(self.width_bound),
            "no_finite_minimizer": self.no_finite_minimizer,
            "min_lower_bound": (
                None if self.min_lower_bound is None else rat_to_str(self.min_lower_bound)
            ),
        }


def _poly_abs_upper(p: UniPoly, lo: Rat, hi: Rat) -> Rat:
    """sum |c_k| M^k with M = max(|lo|, |hi|): an upper bound for |p| on [lo, hi]."""
    m = max(abs(lo), abs(hi))
    acc = Fraction(0)
    power = Fraction(1)
    for c in p.coeffs:
        acc += abs(c) * power
        power *= m
    return acc


def triangulate(
    f: RationalCurve,
    arr: Arrangement,
    u: DataPoint,
    width_bound: Rat,
) -> TriangulationResult:
    """Certified global nearest-point recovery over the real points of the chart.

    Isolates every real critical parameter, refines to ``width_bound``,
    evaluates the exact squared distance at rational midpoints, and reports the
    argmin together with a certified interval for the true attained minimum:
    each midpoint value is within ``distance_error_bounds[k]`` of its exact
    critical value (derivative bound times half-width), so the true minimum
    lies in [min_k (d_k - err_k), d_argmin].
    """
    width_bound = Fraction(width_bound)
    if width_bound <= 0:
        raise ValueError("width bound must be positive")
    u.check_shape(arr)
    rc = reduce_critical_polynomial(f, arr, u)
    charts = _image_charts(f, arr)
    qprod = UNI_ONE
    for q, _ in charts:
        qprod = qprod * q
    if rc.reduced.degree == 0:
        return TriangulationResult(
            critical_parameters=(), distances=(), distance_error_bounds=(),
            argmin_index=None, world_point=None, image_blocks=None,
            width_bound=width_bound, no_finite_minimizer=True, min_lower_bound=None,
        )
    intervals = sturm_isolate(rc.reduced)
    if not intervals:
        return TriangulationResult(
            critical_parameters=(), distances=(), distance_error_bounds=(),
            argmin_index=None, world_point=None, image_blocks=None,
            width_bound=width_bound, no_finite_minimizer=True, min_lower_bound=None,
        )

    pole_free = []
    qprod_sf = squarefree_part(qprod) if qprod.degree else UNI_ONE
    pole_ivs = sturm_isolate(qprod_sf) if qprod_sf.degree else []
    for iv in intervals:
        iv = refine_root(rc.reduced, iv, width_bound)
        # shrink past every real pole interval so each q_i is nonzero on iv;
        # saturation already guarantees the bracketed roots are distinct, and
        # shrinking iv preserves disjointness from poles handled earlier, so
        # one pass suffices (shrunk pole intervals are written back).
        for idx, pv in enumerate(pole_ivs):
            while not (iv.hi <= pv.lo or pv.hi <= iv.lo):
                iv = refine_root(rc.reduced, iv, iv.width / 2)
                pv = refine_root(qprod_sf, pv, pv.width / 2)
            pole_ivs[idx] = pv
        pole_free.append(iv)

    qcubes_all = UNI_ONE
    for q, _ in charts:
        qcubes_all = qcubes_all * q * q * q

    distances = []
    bounds = []
    final_ivs = []
    for iv in pole_free:
        # derivative bound needs a positive floor for |prod q^3| on the interval
        while True:
            m = iv.midpoint
            qm = abs(qcubes_all.evaluate(m))
            slope = _poly_abs_upper(qcubes_all.derivative(), iv.lo, iv.hi)
            floor = qm - slope * iv.width / 2
            if qm != 0 and floor > 0:
                break
            iv = refine_root(rc.reduced, iv, iv.width / 2)
        m = iv.midpoint
        dist = _exact_distance(charts, u, m)
        g_upper = _poly_abs_upper(rc.raw, iv.lo, iv.hi)
        err = g_upper / floor * iv.width / 2
        final_ivs.append(iv)
        distances.append(dist)
        bounds.append(err)

    argmin = min(range(len(distances)), key=lambda k: (distances[k], k))
    tstar = final_ivs[argmin].midpoint
    world = f.evaluate(Fraction(1), tstar)
    blocks = tuple(
        tuple(p.evaluate(tstar) / q.evaluate(tstar) for p in ps) for q, ps in charts
    )
    lower = min(d - b for d, b in zip(distances, bounds))
    return TriangulationResult(
        critical_parameters=tuple(final_ivs),
        distances=tuple(distances),
        distance_error_bounds=tuple(bounds),
        argmin_index=argmin,
        world_point=world,
        image_blocks=blocks,
        width_bound=width_bound,
        no_finite_minimizer=False,
        min_lower_bound=lower,
    )


def _exact_distance(charts, u: DataPoint, t: Rat) -> Rat:
    acc = Fraction(0)
    for i, (q, ps) in enumerate(charts):
        qv = q.evaluate(t)
        for j, p in enumerate(ps):
            acc += (p.evaluate(t) / qv - u.u[i][j]) ** 2
    return acc
