"""Singularity classification of the section ring of a proper polyhedral divisor.

The spectrum of the graded ring of sections is a normal affine variety with a
torus action; the questions answered here are whether its singularities are
rational, Cohen-Macaulay, Gorenstein, elliptic, and minimally elliptic. Over a
projective base curve everything is controlled by the degrees of the rounded-
down evaluations and, in boundary cases, by principality of specific divisor
classes, so every criterion below reduces to finitely many exact checks.

Weight conventions: rank-one reports index weights by a nonnegative integer m
counting along the positive generator of the weight cone. Witnesses returned
for higher-rank questions are actual lattice weights (integer tuples).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian_product
from math import ceil, floor, lcm

from .curves import (
    CurvePoint,
    QDivisor,
    canonical_divisor,
    degree,
    denominator_lcm,
    divisor,
    floor_divisor,
    h1_dim,
    is_principal,
)
from .errors import (
    CurveDomainError,
    NotProperError,
    ShapeError,
    UnsupportedRankError,
)
from .geometry import chamber_fan, ratvec, support_eval
from .linalg import solve
from .pdiv import (
    PolyhedralDivisor,
    PropernessReport,
    contraction_iso_codim1,
    evaluate,
    is_proper,
    require_proper,
)
from .verdicts import Verdict


def _is_projective_curve(d: PolyhedralDivisor) -> bool:
    from .pdiv import AffineSpace

    return not isinstance(d.base, AffineSpace) and d.base.projective


def _unit_weight(d: PolyhedralDivisor) -> tuple[int, ...]:
    """The generator of the weight monoid of a rank-one divisor."""
    if d.rank != 1:
        raise ShapeError("this question is answered for rank-one divisors only")
    rays = d.weight_cone.rays
    if len(rays) != 1:
        raise ShapeError("rank-one classification needs a nontrivial tail ray")
    return rays[0]


@dataclass(frozen=True)
class RaySlope:
    """Evaluation of one coefficient at the weight-cone generator, in lowest terms."""

    point: CurvePoint
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def ray_slopes(d: PolyhedralDivisor) -> tuple[RaySlope, ...]:
    unit = _unit_weight(d)
    out = []
    for pt, poly in d.coefficients:
        v = support_eval(poly, unit)
        out.append(RaySlope(pt, v.numerator, v.denominator))
    return tuple(out)


def floor_degree_profile(d: PolyhedralDivisor, m_max: int) -> tuple[int, ...]:
    """deg of the rounded-down evaluation at m = 0 .. m_max (rank one)."""
    if not _is_projective_curve(d):
        raise CurveDomainError("floor degrees need a projective base curve")
    slopes = ray_slopes(d)
    return tuple(sum((m * s.p) // s.q for s in slopes) for m in range(m_max + 1))


# ---------------------------------------------------------------------------
# the bounded search behind the rationality test


def decide_floor_bound(d: PolyhedralDivisor, c: int) -> tuple[int, ...] | None:
    """Does deg of the rounded-down evaluation stay >= c on the weight monoid?

    Returns None when the bound holds everywhere, otherwise a violating
    lattice weight. Rounding down loses strictly less than one unit per
    marked point, so a violation forces the exact degree below l + c; on
    each linearity chamber that region is bounded along rays of positive
    degree and periodic along rays of degree zero, leaving a finite search
    over integer weights.
    """
    if not _is_projective_curve(d):
        raise CurveDomainError("floor-degree bounds need a projective base curve")
    count = len(d.coefficients)
    if count == 0:
        return None if c <= 0 else tuple(0 for _ in range(d.rank))
    fan = chamber_fan([poly for _, poly in d.coefficients], d.weight_cone)
    ray_degree: dict[tuple[int, ...], Fraction] = {}
    for u in fan.all_rays():
        g = degree(evaluate(d, u))
        if g < 0:
            raise NotProperError(
                f"degree {g} at weight {u}: the divisor is not semiample there",
                witness=ratvec(u),
            )
        ray_degree[u] = g
    bound = Fraction(count + c)
    if bound <= 0:
        return None
    for chamber in fan.chambers:
        witness = _search_chamber(d, chamber.rays, ray_degree, bound, c)
        if witness is not None:
            return witness
    return None


def _search_chamber(d, rays, ray_degree, bound: Fraction, c: int) -> tuple[int, ...] | None:
    caps = []
    for u in rays:
        g = ray_degree[u]
        if g > 0:
            caps.append(bound / g)
        else:
            # period of the rounded-down evaluations along this ray
            caps.append(Fraction(denominator_lcm(evaluate(d, u))))
    k = d.rank
    lo = []
    hi = []
    for i in range(k):
        lo.append(floor(sum(min(Fraction(0), cap * u[i]) for cap, u in zip(caps, rays))))
        hi.append(ceil(sum(max(Fraction(0), cap * u[i]) for cap, u in zip(caps, rays))))
    rows = [[u[i] for u in rays] for i in range(k)]
    for m in cartesian_product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        lam = solve(rows, m)
        if lam is None:
            continue
        if any(x < 0 or x > cap for x, cap in zip(lam, caps)):
            continue
        if degree(floor_divisor(evaluate(d, m))) < c:
            return tuple(m)
    return None


# ---------------------------------------------------------------------------
# rational singularities


@dataclass(frozen=True)
class RationalReport:
    verdict: Verdict
    criterion: str
    witness: tuple[int, ...] | None = None


def rational_singularities(d: PolyhedralDivisor) -> RationalReport:
    """Rationality of the singularities of the section-ring spectrum.

    Affine bases always qualify. Over a projective curve of positive genus
    the structure sheaf itself has cohomology, so the answer is no, witnessed
    at weight zero. In genus zero the criterion is that every rounded-down
    evaluation has degree at least -1; the bounded search decides it exactly.
    """
    require_proper(d)
    if not _is_projective_curve(d):
        return RationalReport(Verdict.YES, "affine-base")
    g = d.base.genus
    if g >= 1:
        return RationalReport(
            Verdict.NO,
            "positive-genus-base",
            witness=tuple(0 for _ in range(d.rank)),
        )
    try:
        witness = decide_floor_bound(d, -1)
    except UnsupportedRankError:
        return RationalReport(Verdict.UNKNOWN, "weight-cone-subdivision-unavailable")
    if witness is None:
        return RationalReport(Verdict.YES, "floor-degrees-at-least-minus-one")
    return RationalReport(Verdict.NO, "floor-degrees-at-least-minus-one", witness=witness)


# ---------------------------------------------------------------------------
# Cohen-Macaulay


@dataclass(frozen=True)
class CohenMacaulayReport:
    verdict: Verdict
    criterion: str


def cohen_macaulay(d: PolyhedralDivisor, isolated: bool = False) -> CohenMacaulayReport:
    """Cohen-Macaulay property of the section ring.

    Rational singularities suffice; rank one gives a normal surface, which is
    always Cohen-Macaulay. In higher rank with non-rational singularities the
    property matches rationality whenever the canonical contraction changes
    nothing in codimension one, or when the singular point is asserted to be
    isolated; otherwise the question is left open.
    """
    require_proper(d)
    if not _is_projective_curve(d):
        return CohenMacaulayReport(Verdict.YES, "affine-base")
    if d.rank == 1:
        return CohenMacaulayReport(Verdict.YES, "normal-surface")
    rational = rational_singularities(d)
    if rational.verdict == Verdict.YES:
        return CohenMacaulayReport(Verdict.YES, "rational-singularities")
    if rational.verdict == Verdict.UNKNOWN:
        return CohenMacaulayReport(Verdict.UNKNOWN, "rationality-undecided")
    if contraction_iso_codim1(d) == Verdict.YES:
        return CohenMacaulayReport(Verdict.NO, "matches-rationality-small-contraction")
    if isolated:
        return CohenMacaulayReport(Verdict.NO, "matches-rationality-isolated-singularity")
    return CohenMacaulayReport(Verdict.UNKNOWN, "needs-isolatedness-assertion")


# ---------------------------------------------------------------------------
# Gorenstein


@dataclass(frozen=True)
class GorensteinReport:
    verdict: Verdict
    criterion: str
    canonical_index: Fraction | None = None
    vertical_multiplicities: tuple[tuple[CurvePoint, Fraction], ...] = ()
    canonical_difference: QDivisor | None = None


def gorenstein(d: PolyhedralDivisor) -> GorensteinReport:
    """Gorenstein property, decided through the canonical divisor class.

    Rank one over a projective curve: the canonical class of the section-ring
    spectrum is represented by one weight (the canonical index) together with
    one integer multiplicity per marked fiber. The ring is Gorenstein exactly
    when the index and all multiplicities are integers and the resulting
    divisor differs from the canonical divisor of the base by a principal one.
    """
    require_proper(d)
    if not _is_projective_curve(d):
        return GorensteinReport(Verdict.NOT_APPLICABLE, "affine-base")
    if d.rank != 1:
        return GorensteinReport(Verdict.NOT_APPLICABLE, "higher-rank-criteria-unavailable")

    slopes = ray_slopes(d)
    deg1 = sum((s.value for s in slopes), Fraction(0))
    genus = d.base.genus
    canonical_degree = Fraction(2 * genus - 2)
    index = (canonical_degree + sum((Fraction(s.q - 1, s.q) for s in slopes), Fraction(0))) / deg1
    if index.denominator != 1:
        return GorensteinReport(Verdict.NO, "canonical-index-not-integral", canonical_index=index)
    multiplicities = tuple(
        (s.point, Fraction(s.p * index + 1, s.q) - 1) for s in slopes
    )
    if any(v.denominator != 1 for _, v in multiplicities):
        return GorensteinReport(
            Verdict.NO,
            "vertical-multiplicity-not-integral",
            canonical_index=index,
            vertical_multiplicities=multiplicities,
        )
    vertical = divisor(d.base, dict(multiplicities))
    k_base = canonical_divisor(d.base)
    if isinstance(k_base, QDivisor):
        difference = vertical - k_base
        verdict = is_principal(difference)
    else:
        # abstract base: only the degree of the canonical class is known
        difference = None
        if degree(vertical) != k_base.degree:
            verdict = Verdict.NO
        elif genus == 0:
            verdict = Verdict.YES
        else:
            verdict = Verdict.UNKNOWN
    criterion = {
        Verdict.YES: "canonical-difference-principal",
        Verdict.NO: "canonical-difference-not-principal",
        Verdict.UNKNOWN: "principality-undecided-on-abstract-base",
    }[verdict]
    return GorensteinReport(
        verdict,
        criterion,
        canonical_index=index,
        vertical_multiplicities=multiplicities,
        canonical_difference=difference,
    )


# ---------------------------------------------------------------------------
# elliptic singularities


@dataclass(frozen=True)
class EllipticReport:
    verdict: Verdict
    criterion: str
    witness_m: int | None = None


def elliptic_singularity(d: PolyhedralDivisor) -> EllipticReport:
    """Is the singular point of the section-ring spectrum elliptic?

    Genus zero: the rounded-down degrees must never drop below -2 and must
    hit -2 exactly once; that weight carries the one unit of cohomology.
    Genus one: every positive weight must have nonnegative rounded-down
    degree and the degree-zero ones must be non-principal, so the unit of
    cohomology sits at weight zero. Genus two or more always fails already
    at weight zero.
    """
    require_proper(d)
    if not _is_projective_curve(d):
        return EllipticReport(Verdict.NO, "affine-base-rational")
    if d.rank != 1:
        return EllipticReport(Verdict.UNKNOWN, "higher-rank-criteria-unavailable")
    genus = d.base.genus
    slopes = ray_slopes(d)
    count = len(slopes)
    deg1 = sum((s.value for s in slopes), Fraction(0))
    period = lcm(*[s.q for s in slopes]) if slopes else 1
    unit = _unit_weight(d)

    if genus == 0:
        top = max(ceil(Fraction(count - 2) / deg1), period, 1)
        profile = floor_degree_profile(d, top)
        hits = [m for m in range(1, top + 1) if profile[m] == -2]
        below = [m for m in range(1, top + 1) if profile[m] < -2]
        if below:
            return EllipticReport(Verdict.NO, "floor-degree-below-minus-two", witness_m=below[0])
        if len(hits) == 1:
            return EllipticReport(Verdict.YES, "unique-floor-degree-minus-two", witness_m=hits[0])
        if not hits:
            return EllipticReport(Verdict.NO, "no-floor-degree-minus-two")
        return EllipticReport(Verdict.NO, "repeated-floor-degree-minus-two", witness_m=hits[1])

    if genus == 1:
        top = max(ceil(Fraction(count) / deg1), 1)
        undecided = None
        for m in range(1, top + 1):
            fl = floor_divisor(evaluate(d, tuple(m * u for u in unit)))
            deg_m = degree(fl)
            if deg_m < 0:
                return EllipticReport(
                    Verdict.NO, "negative-floor-degree-on-genus-one-base", witness_m=m
                )
            if deg_m == 0:
                principal = is_principal(fl)
                if principal == Verdict.YES:
                    return EllipticReport(
                        Verdict.NO, "principal-floor-on-genus-one-base", witness_m=m
                    )
                if principal == Verdict.UNKNOWN:
                    undecided = m
        if undecided is not None:
            return EllipticReport(
                Verdict.UNKNOWN, "principality-undecided-on-abstract-base", witness_m=undecided
            )
        return EllipticReport(
            Verdict.YES, "genus-one-base-floors-never-principal", witness_m=0
        )

    return EllipticReport(Verdict.NO, "genus-at-least-two-base", witness_m=0)


def minimal_elliptic_verdict(elliptic: EllipticReport, gor: GorensteinReport) -> Verdict:
    """Minimally elliptic = elliptic and Gorenstein."""
    if elliptic.verdict == Verdict.NO:
        return Verdict.NO
    if gor.verdict == Verdict.NO:
        return Verdict.NO
    if elliptic.verdict == Verdict.YES and gor.verdict == Verdict.YES:
        return Verdict.YES
    return Verdict.UNKNOWN


# ---------------------------------------------------------------------------
# cohomology report


@dataclass(frozen=True)
class H1Report:
    """First cohomology of the rounded-down evaluations, weight by weight.

    bound is the index beyond which every entry provably vanishes; total sums
    the whole series and is None when some entry is undecidable.
    """

    bound: int
    entries: tuple[tuple[int, int | None], ...]
    total: int | None


def h1_report(d: PolyhedralDivisor, m_max: int | None = None) -> H1Report:
    require_proper(d)
    if not _is_projective_curve(d):
        raise CurveDomainError("cohomology reports need a projective base curve")
    unit = _unit_weight(d)
    slopes = ray_slopes(d)
    count = len(slopes)
    deg1 = sum((s.value for s in slopes), Fraction(0))
    genus = d.base.genus
    period = lcm(*[s.q for s in slopes]) if slopes else 1
    bound = max(ceil(Fraction(count + max(2 * genus - 2, 0)) / deg1), period, 1)

    def entry(m: int) -> int | None:
        fl = floor_divisor(evaluate(d, tuple(m * u for u in unit)))
        return h1_dim(fl)

    values = {m: entry(m) for m in range(0, bound + 1)}
    total: int | None
    if any(v is None for v in values.values()):
        total = None
    else:
        total = sum(values.values())
    top = bound if m_max is None else m_max
    entries = tuple((m, values[m] if m in values else entry(m)) for m in range(0, top + 1))
    return H1Report(bound=bound, entries=entries, total=total)


# ---------------------------------------------------------------------------
# combined report


@dataclass(frozen=True)
class ClassifyReport:
    properness: PropernessReport
    rational: RationalReport
    cohen_macaulay: CohenMacaulayReport
    gorenstein: GorensteinReport
    elliptic: EllipticReport
    minimal_elliptic: Verdict
    h1: H1Report | None


def classify_report(d: PolyhedralDivisor, isolated: bool = False) -> ClassifyReport:
    """Run every classifier and cross-check the answers against each other."""
    prop = is_proper(d)
    if prop.verdict == Verdict.NO:
        raise NotProperError(f"not a proper polyhedral divisor: {prop.reason}", prop.witness)
    if prop.verdict == Verdict.UNKNOWN:
        pending = "properness-undecided"
        return ClassifyReport(
            properness=prop,
            rational=RationalReport(Verdict.UNKNOWN, pending),
            cohen_macaulay=CohenMacaulayReport(Verdict.UNKNOWN, pending),
            gorenstein=GorensteinReport(Verdict.UNKNOWN, pending),
            elliptic=EllipticReport(Verdict.UNKNOWN, pending),
            minimal_elliptic=Verdict.UNKNOWN,
            h1=None,
        )

    rational = rational_singularities(d)
    cm = cohen_macaulay(d, isolated=isolated)
    gor = gorenstein(d)
    ell = elliptic_singularity(d)
    minimal = minimal_elliptic_verdict(ell, gor)
    h1 = None
    if d.rank == 1 and _is_projective_curve(d):
        h1 = h1_report(d)

    # internal consistency: these implications hold by construction
    if ell.verdict == Verdict.YES:
        assert rational.verdict == Verdict.NO
        if h1 is not None and h1.total is not None:
            assert h1.total == 1
    if h1 is not None and h1.total is not None and rational.verdict != Verdict.UNKNOWN:
        assert (rational.verdict == Verdict.YES) == (h1.total == 0)

    return ClassifyReport(
        properness=prop,
        rational=rational,
        cohen_macaulay=cm,
        gorenstein=gor,
        elliptic=ell,
        minimal_elliptic=minimal,
        h1=h1,
    )
