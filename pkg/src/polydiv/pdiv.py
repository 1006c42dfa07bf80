"""Polyhedral divisors and their properness.

A polyhedral divisor of rank k over a base curve assigns to finitely many
points a polyhedron in Q^k, all sharing one pointed tail cone. Over an affine
space the same data is keyed by coordinate hyperplanes instead of points.
Evaluating at a weight m in the dual of the tail cone takes the support
minimum of each coefficient and produces an ordinary Q-divisor on the base.

Properness is the condition that makes the graded ring of sections behave:
every evaluation must be semiample, and evaluations at interior weights must
additionally have positive degree. On affine bases this is automatic; on
projective curves it reduces to finitely many exact checks along a chamber
decomposition of the weight cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import (
    CurveModel,
    CurvePoint,
    QDivisor,
    degree,
    denominator_lcm,
    divisor,
    is_torsion_class,
    point_sort_key,
    validate_point,
)
from .errors import (
    CurveDomainError,
    InvalidInputError,
    NotProperError,
    RankMismatchError,
    ShapeError,
    UnsupportedRankError,
    WeightError,
)
from .geometry import (
    MINUS_INFINITY,
    Cone,
    TailedPolyhedron,
    chamber_fan,
    dual_cone,
    make_cone,
    minkowski_sum,
    make_polyhedron,
    ratvec,
    ray_meets,
    support_eval,
)
from .linalg import dot, vec_add
from .verdicts import Verdict


@dataclass(frozen=True)
class AffineSpace:
    """A^dim as a divisor base; coefficients attach to coordinate hyperplanes."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError("affine space needs dimension at least 1")

    @property
    def projective(self) -> bool:
        return False


DivisorBase = CurveModel | AffineSpace


def _is_curve_base(base: DivisorBase) -> bool:
    return not isinstance(base, AffineSpace)


def _key_sort_key(base: DivisorBase, key):
    if isinstance(base, AffineSpace):
        return key
    return point_sort_key(key)


@dataclass(frozen=True)
class PolyhedralDivisor:
    """Finitely many tailed polyhedra attached to points (or hyperplanes).

    coefficients holds only the nontrivial attachments; a point carrying the
    plain tail cone contributes nothing to any evaluation and is dropped by
    the factory. weight_cone is the dual of the tail cone, the set of weights
    where every evaluation is finite.
    """

    base: DivisorBase
    rank: int
    tail: Cone
    coefficients: tuple[tuple[object, TailedPolyhedron], ...]
    weight_cone: Cone

    def coefficient(self, key) -> TailedPolyhedron | None:
        for k, poly in self.coefficients:
            if k == key:
                return poly
        return None

    @property
    def support(self) -> tuple[object, ...]:
        return tuple(k for k, _ in self.coefficients)


def polyhedral_divisor(base: DivisorBase, rank: int, tail_rays, coefficients) -> PolyhedralDivisor:
    """Validate and canonicalize raw divisor data.

    coefficients maps points (curve bases) or hyperplane indices 1..dim
    (affine-space base) to TailedPolyhedron values. All violations are
    collected before anything is raised, so parse-layer callers can report
    them in one pass.
    """
    violations: list[str] = []
    if rank < 1:
        raise ShapeError("the lattice rank must be at least 1")
    tail = make_cone(tail_rays, rank)
    if not tail.pointed:
        raise ShapeError("the tail cone must be pointed")

    items = coefficients.items() if isinstance(coefficients, dict) else list(coefficients)
    seen = []
    kept = []
    for key, poly in items:
        if isinstance(base, AffineSpace):
            if not isinstance(key, int) or not 1 <= key <= base.dim:
                violations.append(f"hyperplane index {key!r} is not in 1..{base.dim}")
                continue
        else:
            try:
                validate_point(base, key)
            except Exception as exc:
                violations.append(str(exc))
                continue
        if key in seen:
            violations.append(f"coefficient attached twice to {key}")
            continue
        seen.append(key)
        if not isinstance(poly, TailedPolyhedron):
            violations.append(f"coefficient at {key} is not a tailed polyhedron")
            continue
        if poly.rank != rank:
            violations.append(f"coefficient at {key} has rank {poly.rank}, expected {rank}")
            continue
        if poly.tail != tail:
            violations.append(f"coefficient at {key} does not have the common tail cone")
            continue
        if poly.vertices == (tuple(Fraction(0) for _ in range(rank)),):
            continue  # the trivial coefficient: just the tail cone itself
        kept.append((key, poly))
    if violations:
        raise InvalidInputError(violations)
    kept.sort(key=lambda item: _key_sort_key(base, item[0]))
    return PolyhedralDivisor(
        base=base,
        rank=rank,
        tail=tail,
        coefficients=tuple(kept),
        weight_cone=dual_cone(tail),
    )


def coerce_weight(d: PolyhedralDivisor, m) -> tuple[Fraction, ...]:
    """Accept a bare scalar for rank-1 divisors, a length-rank vector otherwise."""
    if isinstance(m, (int, Fraction)):
        if d.rank != 1:
            raise RankMismatchError(f"scalar weight given, but the lattice rank is {d.rank}")
        return (Fraction(m),)
    mm = ratvec(m)
    if len(mm) != d.rank:
        raise RankMismatchError(f"weight {tuple(m)} does not have rank {d.rank}")
    return mm


def check_weight(d: PolyhedralDivisor, m) -> tuple[Fraction, ...]:
    """Coerce m and require it to lie in the weight cone."""
    mm = coerce_weight(d, m)
    for r in d.tail.rays:
        if dot(mm, r) < 0:
            raise WeightError(
                f"weight {tuple(mm)} pairs negatively with tail ray {r}",
                weight=mm,
                separating_ray=r,
            )
    return mm


def evaluate(d: PolyhedralDivisor, m) -> QDivisor:
    """The Q-divisor of support minima at weight m (curve bases only)."""
    if not _is_curve_base(d.base):
        raise CurveDomainError(
            "evaluation to a Q-divisor is defined over curve bases; over an "
            "affine space use the associated toric cone instead"
        )
    mm = check_weight(d, m)
    coeffs: dict[CurvePoint, Fraction] = {}
    for pt, poly in d.coefficients:
        value = support_eval(poly, mm)
        assert value is not MINUS_INFINITY  # excluded by the weight-cone check
        coeffs[pt] = value
    return divisor(d.base, coeffs)


def degree_polyhedron(d: PolyhedralDivisor) -> TailedPolyhedron:
    """Minkowski sum of all coefficients; encodes the degree of every evaluation."""
    if not (_is_curve_base(d.base) and d.base.projective):
        raise CurveDomainError("the degree polyhedron needs a projective base curve")
    acc = make_polyhedron([tuple(0 for _ in range(d.rank))], d.tail)
    for _, poly in d.coefficients:
        acc = minkowski_sum(acc, poly)
    return acc


# ---------------------------------------------------------------------------
# properness


@dataclass(frozen=True)
class PropernessReport:
    verdict: Verdict
    reason: str
    witness: tuple[Fraction, ...] | None = None


def is_proper(d: PolyhedralDivisor) -> PropernessReport:
    """Decide properness.

    Affine bases: always proper. Projective curves: every evaluation within
    the weight cone must be semiample and evaluations at interior weights must
    have positive degree. The degree function is concave and piecewise linear
    on the chamber fan, so checking chamber rays plus one interior sample is
    exact; degree-zero boundary rays additionally need a torsion divisor
    class, which certifies the whole face they span.
    """
    if not _is_curve_base(d.base) or not d.base.projective:
        return PropernessReport(Verdict.YES, "affine base: properness is automatic")

    if d.tail.is_trivial:
        return PropernessReport(
            Verdict.NO,
            "trivial tail cone: the weight cone is the whole space and the "
            "degree vanishes at the interior weight 0",
            witness=tuple(Fraction(0) for _ in range(d.rank)),
        )

    if not d.coefficients:
        witness = _interior_sample(d.weight_cone.rays, d.rank)
        return PropernessReport(
            Verdict.NO,
            "no nontrivial coefficients: every evaluation has degree zero",
            witness=witness,
        )

    try:
        fan = chamber_fan([poly for _, poly in d.coefficients], d.weight_cone)
    except UnsupportedRankError as exc:
        return PropernessReport(Verdict.UNKNOWN, f"undecided: {exc}")

    rays = fan.all_rays()
    degree_zero_rays = []
    for u in rays:
        deg_u = degree(evaluate(d, u))
        if deg_u < 0:
            return PropernessReport(
                Verdict.NO,
                f"evaluation at weight {u} has negative degree {deg_u}",
                witness=ratvec(u),
            )
        if deg_u == 0:
            degree_zero_rays.append(u)

    sample = _interior_sample(rays, d.rank)
    if degree(evaluate(d, sample)) <= 0:
        return PropernessReport(
            Verdict.NO,
            "the degree vanishes at an interior weight, hence everywhere",
            witness=sample,
        )

    for u in degree_zero_rays:
        ev = evaluate(d, u)
        cleared = denominator_lcm(ev) * ev
        verdict, _ = is_torsion_class(cleared)
        if verdict == Verdict.NO:
            return PropernessReport(
                Verdict.NO,
                f"degree-zero evaluation at weight {u} is not a torsion class",
                witness=ratvec(u),
            )
        if verdict == Verdict.UNKNOWN:
            return PropernessReport(
                Verdict.UNKNOWN,
                f"undecided: torsion of the degree-zero evaluation at weight {u} "
                "cannot be tested on an abstract curve model",
            )

    return PropernessReport(
        Verdict.YES,
        "positive degree on interior weights; degree-zero boundary evaluations "
        "are torsion",
    )


def _interior_sample(rays, rank: int) -> tuple[Fraction, ...]:
    acc = tuple(Fraction(0) for _ in range(rank))
    for r in rays:
        acc = vec_add(acc, ratvec(r))
    return acc


def require_proper(d: PolyhedralDivisor) -> None:
    """Raise NotProperError unless is_proper says yes."""
    report = is_proper(d)
    if report.verdict == Verdict.NO:
        raise NotProperError(f"not a proper polyhedral divisor: {report.reason}", report.witness)
    if report.verdict == Verdict.UNKNOWN:
        raise NotProperError(f"properness undecided: {report.reason}")


def contraction_iso_codim1(d: PolyhedralDivisor) -> Verdict:
    """Is the natural contraction an isomorphism in codimension one?

    Over an affine base the contraction never collapses a divisor. Over a
    projective curve a ray of the tail cone gets contracted exactly when it
    meets the degree polyhedron, so the answer is yes precisely when every
    tail ray misses it.
    """
    if not _is_curve_base(d.base) or not d.base.projective:
        return Verdict.YES
    deg_poly = degree_polyhedron(d)
    for ray in d.tail.rays:
        if ray_meets(deg_poly, ray):
            return Verdict.NO
    return Verdict.YES
