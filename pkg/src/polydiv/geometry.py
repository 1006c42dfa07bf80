"""Rational convex geometry: cones, tailed polyhedra, chamber fans.

Values are immutable and canonical. Cones store sorted primitive integer ray
generators with redundant rays removed; polyhedra store exactly their extreme
points plus a tail cone. Support minima are exact Fractions, with an explicit
MinusInfinity object when the functional is unbounded below on the polyhedron.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RankMismatchError, ShapeError, UnsupportedRankError
from .linalg import (
    cone_from_inequalities,
    dot,
    feasible,
    is_zero,
    matrix_rank,
    primitive,
    vec_neg,
    vec_sub,
)

Rat = Fraction


class MinusInfinity:
    """Support value below every rational; deliberately not comparable."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MINUS_INFINITY"


MINUS_INFINITY = MinusInfinity()


def ratvec(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in values)


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone given by irredundant primitive generators."""

    rays: tuple[tuple[int, ...], ...]
    rank: int
    pointed: bool

    def contains(self, v) -> bool:
        return cone_contains(self, v)

    @property
    def is_trivial(self) -> bool:
        return not self.rays


def make_cone(rays, rank: int) -> Cone:
    """Canonical cone from generators: primitive, deduplicated, irredundant."""
    prim = []
    for r in rays:
        if len(r) != rank:
            raise RankMismatchError(f"ray {tuple(r)} does not have rank {rank}")
        p = primitive(r)
        if not is_zero(p) and p not in prim:
            prim.append(p)
    kept = list(prim)
    changed = True
    while changed:
        changed = False
        for i, r in enumerate(kept):
            others = kept[:i] + kept[i + 1 :]
            if others and _in_ray_span(r, others, rank):
                kept.pop(i)
                changed = True
                break
    kept.sort()
    if kept:
        pointed = feasible(rank, [(r, 1) for r in kept])
    else:
        pointed = True
    return Cone(rays=tuple(kept), rank=rank, pointed=pointed)


def _in_ray_span(v, rays, rank: int) -> bool:
    """Is v a nonnegative rational combination of the given rays?"""
    nv = len(rays)
    eqs = [([r[c] for r in rays], v[c]) for c in range(rank)]
    ineqs = []
    for k in range(nv):
        unit = [0] * nv
        unit[k] = 1
        ineqs.append((unit, 0))
    return feasible(nv, ineqs, eqs)


def cone_contains(cone: Cone, v) -> bool:
    vv = ratvec(v)
    if len(vv) != cone.rank:
        raise RankMismatchError(f"vector {tuple(v)} does not have rank {cone.rank}")
    if all(x == 0 for x in vv):
        return True
    if not cone.rays:
        return False
    return _in_ray_span(vv, cone.rays, cone.rank)


def dual_cone(cone: Cone) -> Cone:
    """Generators of {m : <m, v> >= 0 for all v in the cone}.

    Exact at any rank via double description; a non-pointed dual is returned
    with both orientations of each lineality generator.
    """
    lines, rays = cone_from_inequalities(cone.rays, cone.rank)
    gens = list(rays)
    for l in lines:
        gens.append(l)
        gens.append(vec_neg(l))
    return make_cone(gens, cone.rank)


@dataclass(frozen=True)
class TailedPolyhedron:
    """conv(vertices) + tail cone, vertices stored as exact extreme points."""

    vertices: tuple[tuple[Fraction, ...], ...]
    tail: Cone

    @property
    def rank(self) -> int:
        return self.tail.rank


def make_polyhedron(vertices, tail: Cone) -> TailedPolyhedron:
    verts = []
    for v in vertices:
        vv = ratvec(v)
        if len(vv) != tail.rank:
            raise RankMismatchError(f"vertex {tuple(v)} does not have rank {tail.rank}")
        if vv not in verts:
            verts.append(vv)
    if not verts:
        raise ShapeError("a tailed polyhedron needs at least one vertex")
    kept = list(verts)
    changed = True
    while changed:
        changed = False
        for i, v in enumerate(kept):
            others = kept[:i] + kept[i + 1 :]
            if others and _vertex_redundant(v, others, tail):
                kept.pop(i)
                changed = True
                break
    kept.sort()
    return TailedPolyhedron(vertices=tuple(kept), tail=tail)


def _vertex_redundant(v, others, tail: Cone) -> bool:
    """Is v inside conv(others) + tail?"""
    rank = tail.rank
    nv = len(others) + len(tail.rays)
    eqs = []
    for c in range(rank):
        coeffs = [o[c] for o in others] + [r[c] for r in tail.rays]
        eqs.append((coeffs, v[c]))
    eqs.append(([1] * len(others) + [0] * len(tail.rays), 1))
    ineqs = []
    for k in range(nv):
        unit = [0] * nv
        unit[k] = 1
        ineqs.append((unit, 0))
    return feasible(nv, ineqs, eqs)


def support_eval(poly: TailedPolyhedron, m):
    """min{<m, p> : p in the polyhedron}, or MINUS_INFINITY off the tail dual."""
    mm = ratvec(m)
    if len(mm) != poly.rank:
        raise RankMismatchError(f"weight {tuple(m)} does not have rank {poly.rank}")
    for r in poly.tail.rays:
        if dot(mm, r) < 0:
            return MINUS_INFINITY
    return min(dot(mm, v) for v in poly.vertices)


def minkowski_sum(p: TailedPolyhedron, q: TailedPolyhedron) -> TailedPolyhedron:
    if p.tail != q.tail:
        raise ShapeError("Minkowski sum requires equal tail cones")
    sums = [tuple(a + b for a, b in zip(v, w)) for v in p.vertices for w in q.vertices]
    return make_polyhedron(sums, p.tail)


def ray_meets(poly: TailedPolyhedron, ray) -> bool:
    """Does {t * ray : t >= 0} intersect the polyhedron?"""
    rr = ratvec(ray)
    if len(rr) != poly.rank:
        raise RankMismatchError(f"ray {tuple(ray)} does not have rank {poly.rank}")
    verts = poly.vertices
    tail = poly.tail.rays
    nv = 1 + len(verts) + len(tail)
    eqs = []
    for c in range(poly.rank):
        coeffs = [rr[c]] + [-v[c] for v in verts] + [-r[c] for r in tail]
        eqs.append((coeffs, 0))
    eqs.append(([0] + [1] * len(verts) + [0] * len(tail), 1))
    ineqs = []
    for k in range(nv):
        unit = [0] * nv
        unit[k] = 1
        ineqs.append((unit, 0))
    return feasible(nv, ineqs, eqs)


@dataclass(frozen=True)
class Chamber:
    """Simplicial cone on which every input support function is linear."""

    cone: Cone
    minimizers: tuple[tuple[Fraction, ...], ...]

    @property
    def rays(self):
        return self.cone.rays


@dataclass(frozen=True)
class ChamberFan:
    rank: int
    weight_cone: Cone
    chambers: tuple[Chamber, ...]

    def all_rays(self) -> tuple[tuple[int, ...], ...]:
        seen = []
        for ch in self.chambers:
            for r in ch.rays:
                if r not in seen:
                    seen.append(r)
        return tuple(sorted(seen))


def chamber_fan(polys, weight_cone: Cone) -> ChamberFan:
    """Common linearity decomposition of the weight cone.

    Splits the weight cone along every hyperplane where two vertices of one
    input polyhedron tie, then triangulates each piece, so each chamber carries
    a single minimizing vertex per polyhedron. Guaranteed through rank 3; at
    higher rank only the trivial wall-free simplicial case is attempted.
    """
    rank = weight_cone.rank
    polys = list(polys)
    for p in polys:
        if p.rank != rank:
            raise RankMismatchError("polyhedron rank differs from the weight cone rank")
        if p.tail != polys[0].tail:
            raise ShapeError("chamber fan requires equal tails on all polyhedra")
    if polys:
        tail = polys[0].tail
        for u in weight_cone.rays:
            for r in tail.rays:
                if dot(u, r) < 0:
                    raise ShapeError(
                        "weight cone leaves the dual of the tail cone; support "
                        "minima would be unbounded"
                    )
    if matrix_rank([list(r) for r in weight_cone.rays]) != rank:
        raise ShapeError("weight cone must be full-dimensional")

    walls = []
    for p in polys:
        for i, v in enumerate(p.vertices):
            for w in p.vertices[i + 1 :]:
                n = primitive(vec_sub(v, w))
                if is_zero(n):
                    continue
                if next(x for x in n if x != 0) < 0:
                    n = vec_neg(n)
                if n not in walls:
                    walls.append(n)

    if rank > 3:
        if not walls and weight_cone.pointed and len(weight_cone.rays) == rank:
            chambers = [_finish_chamber(tuple(sorted(weight_cone.rays)), polys)]
            return ChamberFan(rank, weight_cone, tuple(chambers))
        raise UnsupportedRankError("chamber fan only guaranteed through rank 3")

    base_normals = list(dual_cone(weight_cone).rays)
    regions = [tuple(base_normals)]
    for n in walls:
        regions = [piece for region in regions for piece in _split(region, n, rank)]

    axes = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    chambers: list[Chamber] = []
    queue = list(regions)
    while queue:
        normals = queue.pop()
        lines, rays = cone_from_inequalities(normals, rank)
        if lines:
            axis = next(a for a in axes if any(dot(a, l) != 0 for l in lines))
            queue.extend(_split(normals, axis, rank, force=True))
            continue
        for simplex in _triangulate(rays, rank):
            chambers.append(_finish_chamber(simplex, polys))
    chambers.sort(key=lambda ch: ch.rays)
    return ChamberFan(rank, weight_cone, tuple(chambers))


def _full_dim(normals, rank: int) -> bool:
    return feasible(rank, [(n, 1) for n in normals])


def _split(normals, wall, rank: int, force: bool = False):
    """Cut a full-dimensional H-cone along a hyperplane, keeping fat pieces."""
    pos = normals + (wall,)
    neg = normals + (vec_neg(wall),)
    pos_ok = _full_dim(pos, rank)
    neg_ok = _full_dim(neg, rank)
    if pos_ok and neg_ok:
        return [pos, neg]
    if force:
        # requested split along a lineality axis; both sides must be fat
        raise ShapeError("degenerate region while removing lineality")
    return [normals]


def _triangulate(rays, rank: int):
    """Split a pointed full-dimensional cone into simplicial pieces."""
    k = len(rays)
    if k == rank:
        return [tuple(sorted(rays))]
    if rank != 3:
        raise UnsupportedRankError(
            f"pointed rank-{rank} region with {k} extreme rays cannot be triangulated"
        )
    facets = []
    for i in range(k):
        for j in range(i + 1, k):
            n = _cross(rays[i], rays[j])
            if is_zero(n):
                continue
            sides = [dot(n, r) for r in rays]
            if all(s >= 0 for s in sides):
                pass
            elif all(s <= 0 for s in sides):
                n = vec_neg(n)
                sides = [-s for s in sides]
            else:
                continue
            on = tuple(sorted(idx for idx, s in enumerate(sides) if s == 0))
            if len(on) == 2 and (n, on) not in facets:
                facets.append((n, on))
    g0 = rays[0]
    pieces = []
    for n, (i, j) in facets:
        if dot(n, g0) > 0:
            pieces.append(tuple(sorted((g0, rays[i], rays[j]))))
    return pieces


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _finish_chamber(simplex_rays, polys) -> Chamber:
    cone = make_cone(simplex_rays, len(simplex_rays[0]))
    sample = tuple(sum(r[c] for r in simplex_rays) for c in range(cone.rank))
    minimizers = []
    for p in polys:
        best = min(dot(sample, v) for v in p.vertices)
        candidates = sorted(v for v in p.vertices if dot(sample, v) == best)
        chosen = candidates[0]
        for u in simplex_rays:
            low = min(dot(u, v) for v in p.vertices)
            if dot(u, chosen) != low:
                raise ShapeError("chamber is not a linearity region; internal error")
        minimizers.append(chosen)
    return Chamber(cone=cone, minimizers=tuple(minimizers))
