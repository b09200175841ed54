"""Coxeter companion, quasi-Coxeter testing, growth, cone types, walls.

The quasi-Coxeter test searches for a rooted directed-graph isomorphism
between two oriented balls level by level; because the graphs are graded
with edges only between consecutive levels, a full backtracking search over
per-bucket matchings is exact.  Walls, the voracious projection, and
voracious-language membership follow the reflection-hyperplane combinatorics
of Coxeter balls and transport along a quasi-Coxeter isomorphism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .cycles import CoxeterGraph
from .engine import CayleyBall
from .errors import OutOfRadius, PreconditionError, StructuralFailure
from .presentation import Presentation, make_presentation
from . import weakorder
from .weakorder import HasseBall

INF = math.inf


# ---------------------------------------------------------------------------
# companion presentation


def is_coxeter_presentation(p: Presentation) -> bool:
    """Syntactic check: every relator is an alternating two-letter power."""
    for r in p.relators:
        letters = sorted(set(r))
        if len(letters) != 2 or len(r) % 2 != 0:
            return False
        x, y = letters
        if r not in ((x, y) * (len(r) // 2), (y, x) * (len(r) // 2)):
            return False
    return True


def companion_presentation(g: CoxeterGraph) -> Presentation:
    """The Coxeter presentation with relators (st)^m(s,t) for finite labels."""
    if not g.is_resolved():
        raise PreconditionError(
            "companion graph has unresolved labels; widen the ball first"
        )
    rels = []
    for (i, j), m in g.labels:
        if m == INF:
            continue
        if not (isinstance(m, int) and m >= 2):
            raise PreconditionError(f"bad label {m!r} at pair ({i},{j})")
        rels.append((i, j) * m)
    return make_presentation(g.generators, rels)


# ---------------------------------------------------------------------------
# rooted digraph isomorphism of oriented balls


@dataclass(frozen=True)
class IsoResult:
    ok: bool
    radius: int
    mapping: dict | None = None  # first ball vertex -> second ball vertex
    failed_at: int | None = None  # smallest level admitting no isomorphism

    def __bool__(self):
        return self.ok


def quasi_coxeter_test(hw: HasseBall, hc: HasseBall, radius: int) -> IsoResult:
    """Rooted directed-graph isomorphism of two oriented balls up to ``radius``.

    Iterative deepening: for each level k the backtracking matcher decides
    exactly whether the k-truncations are isomorphic, so a failure radius is
    the first level at which no isomorphism exists.
    """
    for h, name in ((hw, "first"), (hc, "second")):
        if h.basepoint != 0:
            raise PreconditionError(f"{name} ball must be rooted at the identity")
        if h.usable < radius:
            raise OutOfRadius(f"{name} ball is usable only to {h.usable} < {radius}")
        if any(
            h.dist[u] <= radius and h.dist[v] <= radius for u, v in h.flat_edges
        ):
            return IsoResult(False, radius, failed_at=_first_flat_level(h, radius))
    for k in range(1, radius + 1):
        mapping = _match_truncation(hw, hc, k)
        if mapping is None:
            return IsoResult(False, radius, failed_at=k)
    return IsoResult(True, radius, mapping=_match_truncation(hw, hc, radius))


def _first_flat_level(h, radius):
    lvl = min(max(h.dist[u], h.dist[v]) for u, v in h.flat_edges)
    return min(lvl, radius)


def _levels(h, radius):
    out = [[] for _ in range(radius + 1)]
    for v in range(h.ball.n_vertices):
        if 0 <= h.dist[v] <= radius:
            out[h.dist[v]].append(v)
    return out


def _match_truncation(hw, hc, radius):
    """Exact levelwise backtracking; returns a vertex map or None."""
    lw, lc = _levels(hw, radius), _levels(hc, radius)
    if [len(x) for x in lw] != [len(x) for x in lc]:
        return None
    mapping = {lw[0][0]: lc[0][0]}

    def extend(level):
        if level > radius:
            return True
        # bucket by image of the parent set; bucket keys must biject
        wb, cb = {}, {}
        for u in lw[level]:
            key = frozenset(mapping[p] for p in hw.parents[u])
            wb.setdefault(key, []).append(u)
        for v in lc[level]:
            key = frozenset(hc.parents[v])
            cb.setdefault(key, []).append(v)
        if set(wb) != set(cb):
            return False
        buckets = []
        for key in sorted(wb, key=lambda k: tuple(sorted(k))):
            us, vs = wb[key], cb[key]
            if len(us) != len(vs):
                return False
            # refine by child count inside the truncation
            def deg(h, x):
                return sum(1 for c in h.children[x] if h.dist[c] <= radius)
            us = sorted(us, key=lambda x: (deg(hw, x), x))
            vs = sorted(vs, key=lambda x: (deg(hc, x), x))
            if [deg(hw, x) for x in us] != [deg(hc, x) for x in vs]:
                return False
            buckets.append((us, vs))

        def assign(idx):
            if idx == len(buckets):
                return extend(level + 1)
            us, vs = buckets[idx]
            degs_u = {}
            for u in us:
                degs_u.setdefault(sum(1 for c in hw.children[u] if hw.dist[c] <= radius), []).append(u)
            degs_v = {}
            for v in vs:
                degs_v.setdefault(sum(1 for c in hc.children[v] if hc.dist[c] <= radius), []).append(v)
            groups = []
            for d in degs_u:
                groups.append((degs_u[d], degs_v[d]))

            def per_group(gidx):
                if gidx == len(groups):
                    return assign(idx + 1)
                gus, gvs = groups[gidx]
                for perm in permutations(gvs):
                    for u, v in zip(gus, perm):
                        mapping[u] = v
                    if per_group(gidx + 1):
                        return True
                    for u in gus:
                        del mapping[u]
                return False

            return per_group(0)

        ok = assign(0)
        if not ok:
            for u in lw[level]:
                mapping.pop(u, None)
        return ok

    if extend(1):
        return dict(mapping)
    return None


# ---------------------------------------------------------------------------
# growth and cone types


def growth_coefficients(ball: CayleyBall, radius=None):
    """Sphere sizes (number of elements per length) up to the radius."""
    if not ball.certified:
        raise PreconditionError("growth coefficients need a certified ball")
    r = ball.usable_radius if radius is None else radius
    if not ball.closed and r > ball.usable_radius:
        raise OutOfRadius(f"radius {r} exceeds usable radius {ball.usable_radius}")
    counts = [0] * (r + 1)
    for length in ball.lengths:
        if length <= r:
            counts[length] += 1
    return counts


def growth_csv(coeffs) -> str:
    lines = ["radius,count"]
    lines += [f"{r},{c}" for r, c in enumerate(coeffs)]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ConeTypeIndex:
    """r-truncated cone types and the partition they induce."""

    r: int
    encodings: dict  # vertex -> frozenset of normal-form words in the cone
    classes: dict  # encoding -> tuple of vertices

    @property
    def n_classes(self):
        return len(self.classes)


def cone_types(ball: CayleyBall, r: int, vertices=None) -> ConeTypeIndex:
    """Compute T(g) truncated at radius r for each queryable vertex.

    T(g) collects the h with l(gh) = l(g) + l(h); vertices farther than
    usable - r are excluded since their truncated cones would not be exact.
    """
    if not ball.certified:
        raise PreconditionError("cone types need a certified ball")
    R = ball.usable_radius
    if r > R:
        raise OutOfRadius(f"truncation radius {r} exceeds usable radius {R}")
    if vertices is None:
        if ball.closed:
            vertices = list(range(ball.n_vertices))
        else:
            vertices = [v for v in range(ball.n_vertices) if ball.lengths[v] <= R - r]
    elif not ball.closed:
        for v in vertices:
            if ball.lengths[v] > R - r:
                raise OutOfRadius(f"vertex at length {ball.lengths[v]} lacks slack {r}")
    small = [h for h in range(ball.n_vertices) if ball.lengths[h] <= r]
    encodings = {}
    for g in vertices:
        cone = []
        lg = ball.lengths[g]
        for h in small:
            gh = ball.eval_word(ball.norms[h], start=g)
            if gh is not None and ball.lengths[gh] == lg + ball.lengths[h]:
                cone.append(ball.norms[h])
        encodings[g] = frozenset(cone)
    classes = {}
    for g, enc in encodings.items():
        classes.setdefault(enc, []).append(g)
    classes = {k: tuple(sorted(v)) for k, v in classes.items()}
    return ConeTypeIndex(r, encodings, classes)


# ---------------------------------------------------------------------------
# walls


@dataclass(frozen=True)
class Wall:
    """Edges sharing one reflection; in a Coxeter ball the reflection of the
    edge {w, ws} is the element w s w^-1."""

    edges: frozenset  # of (u, v) pairs, u < v
    reflection: int | None = None  # vertex index of the reflection, if computed

    def endpoints(self):
        out = set()
        for u, v in self.edges:
            out.add(u)
            out.add(v)
        return out


def walls(ball: CayleyBall, r: int):
    """Group edges within radius r by equality of their reflections.

    Needs 2r + 1 within the verified region so the words w s w^-1 stay
    comparable; closed balls are exact everywhere.
    """
    if not ball.closed and 2 * r + 1 > ball.verified_depth:
        raise OutOfRadius(
            f"wall radius {r} needs 2r+1 <= verified depth {ball.verified_depth}"
        )
    groups = {}
    for u, s, v in ball.edges(max_length=r):
        w = ball.norms[u] if ball.lengths[u] < ball.lengths[v] else ball.norms[v]
        refl = ball.eval_word(w + (s,) + tuple(reversed(w)))
        if refl is None:
            raise OutOfRadius("reflection word left the constructed region")
        groups.setdefault(refl, set()).add((u, v) if u < v else (v, u))
    return [Wall(frozenset(e), refl) for refl, e in sorted(groups.items())]


class WallSeparation:
    """Connectivity oracle: which side of each wall a vertex lies on.

    Components are computed in the inner region (length <= R - 1 for partial
    balls) so frontier effects cannot fake or hide a separation.
    """

    def __init__(self, ball: CayleyBall, wallset, inner=None):
        self.ball = ball
        self.walls = list(wallset)
        if inner is None:
            inner = ball.usable_radius if ball.closed else ball.usable_radius - 1
        self.inner = inner
        self._sides = {}

    def _components(self, wall):
        sides = self._sides.get(wall.edges)
        if sides is None:
            ball = self.ball
            sides = [-1] * ball.n_vertices
            comp = 0
            for root in range(ball.n_vertices):
                if sides[root] >= 0 or ball.lengths[root] > self.inner:
                    continue
                stack = [root]
                sides[root] = comp
                while stack:
                    x = stack.pop()
                    for s, y in enumerate(ball.nbr[x]):
                        if y < 0 or ball.lengths[y] > self.inner or sides[y] >= 0:
                            continue
                        if (min(x, y), max(x, y)) in wall.edges:
                            continue
                        sides[y] = comp
                        stack.append(y)
                comp += 1
            self._sides[wall.edges] = sides
        return sides

    def separates(self, wall, u, v):
        if max(self.ball.lengths[u], self.ball.lengths[v]) > self.inner:
            raise OutOfRadius("separation query outside the inner region")
        sides = self._components(wall)
        return sides[u] != sides[v]

    def two_sided(self, wall):
        """Whether the wall splits the inner region into exactly two parts."""
        sides = self._components(wall)
        seen = {c for v, c in enumerate(sides) if c >= 0}
        return len(seen) == 2


def transported_walls(hw: HasseBall, hc: HasseBall, mapping, r: int):
    """Images of the companion ball's walls under a quasi-Coxeter isomorphism.

    ``mapping`` sends vertices of hw's ball to vertices of hc's ball, as
    produced by quasi_coxeter_test(hw, hc, R); walls are computed on the
    companion side and pulled back.
    """
    if mapping is None:
        raise PreconditionError("no isomorphism available to transport walls")
    inverse_map = {v: u for u, v in mapping.items()}
    out = []
    for wall in walls(hc.ball, r):
        edges = set()
        for u, v in wall.edges:
            if u in inverse_map and v in inverse_map:
                a, b = inverse_map[u], inverse_map[v]
                edges.add((a, b) if a < b else (b, a))
        if edges:
            out.append(Wall(frozenset(edges), None))
    return out


# ---------------------------------------------------------------------------
# voracious projection and language


def separating_walls(sep: WallSeparation, g):
    """Walls separating g from the identity."""
    return [w for w in sep.walls if sep.separates(w, g, 0)]


def voracious_projection(ball: CayleyBall, wallset, g: int):
    """Largest h <= g not separated from the identity by any wall cutting g.

    The maximum must be unique; a tie is a falsification of the structure
    and raises StructuralFailure.
    """
    h = _hasse(ball)
    sep = wallset if isinstance(wallset, WallSeparation) else WallSeparation(ball, wallset)
    cutting = separating_walls(sep, g)
    candidates = [
        x
        for x in h.lower_set(g)
        if all(not sep.separates(w, x, 0) for w in cutting)
    ]
    maxima = weakorder._maximal_elements(h, set(candidates))
    if len(maxima) != 1:
        raise StructuralFailure(
            f"voracious projection of vertex {g} has {len(maxima)} maximal "
            f"candidates {sorted(maxima)}; expected a unique maximum"
        )
    m = maxima[0]
    if not set(candidates) <= h.lower_set(m):
        raise StructuralFailure(
            f"voracious candidates of vertex {g} have maximal element {m} "
            "that is not a maximum"
        )
    return m


_HASSE_CACHE = {}


def _hasse(ball):
    key = id(ball)
    h = _HASSE_CACHE.get(key)
    if h is None or h.ball is not ball:
        h = weakorder.orient(ball)
        _HASSE_CACHE[key] = h
    return h


def voracious_member(ball: CayleyBall, wallset, word) -> bool:
    """Membership in the voracious language of the word's element.

    A word belongs iff it splits as u v with v a geodesic word for
    p(g)^-1 g and u a member for p(g); the recursion grounds at the empty
    word for the identity.
    """
    sep = wallset if isinstance(wallset, WallSeparation) else WallSeparation(ball, wallset)
    word = tuple(word)
    g = ball.eval_word(word)
    if g is None:
        raise OutOfRadius("word leaves the constructed region")
    if ball.lengths[g] > sep.inner:
        raise OutOfRadius("element beyond the wall-decidable region")
    return _member(ball, sep, word, g)


def _member(ball, sep, word, g):
    if g == 0:
        return word == ()
    if len(word) != ball.lengths[g]:
        return False  # members are geodesic words
    p = voracious_projection(ball, sep, g)
    k = ball.lengths[g] - ball.lengths[p]
    if k == 0:
        raise StructuralFailure(
            f"voracious projection failed to descend at vertex {g}"
        )
    u, v = word[:len(word) - k], word[len(word) - k:]
    if ball.eval_word(v, start=p) != g:
        return False
    return _member(ball, sep, u, p)


def voracious_language(ball: CayleyBall, wallset, max_length: int):
    """All language members up to a length, unfolded bottom-up by definition.

    Independent of the top-down membership test; used as its oracle.
    """
    sep = wallset if isinstance(wallset, WallSeparation) else WallSeparation(ball, wallset)
    verts = [v for v in range(ball.n_vertices)
             if ball.lengths[v] <= min(max_length, sep.inner)]
    verts.sort(key=lambda v: ball.lengths[v])
    lang = {0: {()}}
    for g in verts:
        if g == 0:
            continue
        p = voracious_projection(ball, sep, g)
        tails = _geodesic_words(ball, p, g)
        lang[g] = {u + v for u in lang[p] for v in tails}
    return lang


def _geodesic_words(ball, src, dst):
    dist = ball.distances_from(src)
    words = []

    def back(v, acc):
        if v == src:
            words.append(tuple(reversed(acc)))
            return
        for s, x in enumerate(ball.nbr[v]):
            if x >= 0 and dist[x] == dist[v] - 1:
                back(x, acc + [s])

    back(dst, [])
    return words


def elementary_walls(ball: CayleyBall, wallset):
    """Walls not separated from the identity by any other wall (best effort:
    exact on closed balls, frontier-limited otherwise)."""
    sep = wallset if isinstance(wallset, WallSeparation) else WallSeparation(ball, wallset)
    out = []
    for w in sep.walls:
        pts = [x for x in w.endpoints() if ball.lengths[x] <= sep.inner]
        separated = False
        for other in sep.walls:
            if other.edges == w.edges:
                continue
            if pts and all(sep.separates(other, x, 0) for x in pts):
                separated = True
                break
        if not separated:
            out.append(w)
    return out
