"""Irreducible cycles, canonical relators, companion graph, Coxeter type.

A cycle of the ball is irreducible when its circuit is not a GF(2) sum of
strictly shorter circuits.  Candidates at the identity are generated two
ways, by joins of generator pairs and by exhaustive bounded search, and the
two routes must agree; irreducibility itself is certified by Gaussian
elimination over the edge space, which is definitionally exact within the
ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .engine import CayleyBall
from .errors import LimitExceeded, NotCertified, OutOfRadius, PreconditionError, StructuralFailure
from .presentation import (
    Presentation,
    cyc_canonical,
    has_sign_character,
    inverse,
    make_presentation,
)
from . import weakorder
from .weakorder import HasseBall, NoJoin, Unbounded, UnknownWithinRadius

INF = math.inf

DEFAULT_CIRCUIT_BUDGET = 1_000_000


# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class AtLeast:
    """Lower bound on a label a finite ball could not resolve."""

    bound: int

    def __repr__(self):
        return f">={self.bound}"


def label_str(x) -> str:
    if isinstance(x, AtLeast):
        return f">={x.bound}"
    if x == INF:
        return "inf"
    return str(int(x))


def labels_consistent(a, b) -> bool:
    """Whether two labels can describe the same true value."""
    if isinstance(a, AtLeast) and isinstance(b, AtLeast):
        return True
    if isinstance(a, AtLeast):
        return b == INF or b >= a.bound
    if isinstance(b, AtLeast):
        return a == INF or a >= b.bound
    return a == b


@dataclass(frozen=True)
class CoxeterGraph:
    """Symmetric label matrix m(s,t) over the generators; m(s,s) = 1."""

    generators: tuple
    labels: tuple  # tuple of ((i, j), label) sorted, i < j, label != 2 entries included too

    @staticmethod
    def from_matrix(generators, entries):
        """entries: dict {(i,j): label} for i < j; missing pairs default to 2."""
        gens = tuple(generators)
        n = len(gens)
        items = []
        for i in range(n):
            for j in range(i + 1, n):
                items.append(((i, j), entries.get((i, j), 2)))
        return CoxeterGraph(gens, tuple(items))

    def entry(self, i, j):
        if i == j:
            return 1
        key = (min(i, j), max(i, j))
        for k, v in self.labels:
            if k == key:
                return v
        raise KeyError(key)

    def matrix(self):
        n = len(self.generators)
        m = [[1] * n for _ in range(n)]
        for (i, j), v in self.labels:
            m[i][j] = m[j][i] = v
        return m

    def is_resolved(self):
        return not any(isinstance(v, AtLeast) for _, v in self.labels)

    def consistent_with(self, other) -> bool:
        if self.generators != other.generators:
            return False
        return all(
            labels_consistent(self.entry(i, j), other.entry(i, j))
            for (i, j), _ in self.labels
        )

    def to_json_dict(self):
        return {
            "generators": list(self.generators),
            "matrix": [
                [1 if i == j else _label_json(self.entry(i, j)) for j in range(len(self.generators))]
                for i in range(len(self.generators))
            ],
        }

    def to_dot(self) -> str:
        lines = ["graph coxeter {", "  node [shape=circle fontsize=11];"]
        for g in self.generators:
            lines.append(f'  "{g}";')
        for (i, j), v in self.labels:
            if v == 2:
                continue
            label = "" if v == 3 else label_str(v)
            attr = f' [label="{label}"]' if label else ""
            lines.append(f'  "{self.generators[i]}" -- "{self.generators[j]}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label_json(v):
    if isinstance(v, AtLeast):
        return f">={v.bound}"
    if v == INF:
        return "inf"
    return int(v)


# ---------------------------------------------------------------------------
# cycles


@dataclass(frozen=True)
class Cycle:
    """A simple edge-cycle; vertices start at the minimal vertex, canonical
    direction, and ``nu`` is the label word read from the identity when the
    cycle passes through it."""

    vertices: tuple
    edges: frozenset
    nu: tuple | None = field(default=None, compare=False)

    @property
    def length(self):
        return len(self.vertices)

    def pair_at(self, v):
        """The two neighbors of v on the cycle."""
        i = self.vertices.index(v)
        n = len(self.vertices)
        return self.vertices[(i - 1) % n], self.vertices[(i + 1) % n]


def edge_key(u, v):
    return (u, v) if u < v else (v, u)


def edge_label(ball: CayleyBall, u, v):
    for s, x in enumerate(ball.nbr[u]):
        if x == v:
            return s
    raise PreconditionError(f"no edge between vertices {u} and {v}")


def cycle_word(ball: CayleyBall, verts, start_index=0, reverse=False):
    """Labels read around the cycle starting at position ``start_index``."""
    n = len(verts)
    seq = []
    if reverse:
        order = [verts[(start_index - k) % n] for k in range(n + 1)]
    else:
        order = [verts[(start_index + k) % n] for k in range(n + 1)]
    for a, b in zip(order, order[1:]):
        seq.append(edge_label(ball, a, b))
    return tuple(seq)


def make_cycle(ball: CayleyBall, verts) -> Cycle:
    """Canonicalize a closed vertex walk (no repeats) into a Cycle."""
    n = len(verts)
    if n < 3 or len(set(verts)) != n:
        raise PreconditionError("a cycle needs at least 3 distinct vertices")
    m = min(verts)
    i = verts.index(m)
    rot = tuple(verts[(i + k) % n] for k in range(n))
    if rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    edges = frozenset(edge_key(rot[k], rot[(k + 1) % n]) for k in range(n))
    nu = None
    if 0 in rot:
        j = rot.index(0)
        w_fwd = cycle_word(ball, rot, j)
        w_bwd = cycle_word(ball, rot, j, reverse=True)
        nu = min(w_fwd, w_bwd)
    return Cycle(rot, edges, nu)


# ---------------------------------------------------------------------------
# bounded circuit enumeration (exact within the ball region)


def _region_vertices(ball, cap):
    return [v for v in range(ball.n_vertices) if ball.lengths[v] <= cap]


def _adjacency(ball, allowed):
    adj = {v: [] for v in allowed}
    for v in allowed:
        for s, x in enumerate(ball.nbr[v]):
            if x >= 0 and x in adj:
                adj[v].append(x)
    return adj


def _bfs_in(adj, root):
    dist = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for x in adj[v]:
                if x not in dist:
                    dist[x] = dist[v] + 1
                    nxt.append(x)
        frontier = nxt
    return dist


def bounded_circuits(ball: CayleyBall, max_len, anchors=None, region_cap=None,
                     budget=DEFAULT_CIRCUIT_BUDGET):
    """All simple cycles of length <= max_len inside the exact region.

    Each cycle is anchored at its minimal vertex with a canonical direction,
    so it is produced exactly once.  The search is depth-first with a
    distance-to-anchor prune; ``budget`` bounds the number of extension
    steps and exceeding it raises LimitExceeded.
    """
    cap = ball.usable_radius if region_cap is None else region_cap
    allowed = _region_vertices(ball, cap)
    adj = _adjacency(ball, set(allowed))
    anchors = allowed if anchors is None else anchors
    out = []
    steps = 0
    for a in anchors:
        dist = _bfs_in(adj, a)
        path = [a]
        on_path = {a}

        def dfs(u, remaining):
            nonlocal steps
            steps += 1
            if steps > budget:
                raise LimitExceeded(
                    f"circuit enumeration exceeded budget {budget}"
                )
            for v in adj[u]:
                if v == a:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                    continue
                if v <= a or v in on_path or remaining <= 1:
                    continue
                d = dist.get(v)
                if d is None or d > remaining - 1:
                    continue
                path.append(v)
                on_path.add(v)
                dfs(v, remaining - 1)
                path.pop()
                on_path.remove(v)

        dfs(a, max_len)
    return out


class GF2Basis:
    """Incremental GF(2) row space over edge-bitmask vectors."""

    def __init__(self):
        self._pivots = {}

    def _reduce(self, vec):
        pivots = self._pivots
        while vec:
            h = vec.bit_length() - 1
            row = pivots.get(h)
            if row is None:
                return vec
            vec ^= row
        return 0

    def add(self, vec):
        vec = self._reduce(vec)
        if vec:
            self._pivots[vec.bit_length() - 1] = vec
            return True
        return False

    def contains(self, vec):
        return self._reduce(vec) == 0


def _edge_bits(edge_ids, edges):
    vec = 0
    for e in edges:
        vec |= 1 << edge_ids.setdefault(e, len(edge_ids))
    return vec


# ---------------------------------------------------------------------------
# irreducible cycles at the identity


def _geodesic_half_paths_ok(ball, verts):
    """Every edge-path of at most half the cycle length must be geodesic."""
    n = len(verts)
    k = n // 2
    if n % 2 != 0:
        return False
    # opposite-vertex distances suffice: d(v_i, v_{i+j}) == j for j <= k
    dists = {}
    for i in range(n):
        if verts[i] not in dists:
            dists[verts[i]] = ball.distances_from(verts[i])
    for i in range(n):
        di = dists[verts[i]]
        for j in range(1, k + 1):
            if di[verts[(i + j) % n]] != j:
                return False
    return True


def relator_length_cap(p: Presentation) -> int:
    """Upper bound for the length of any irreducible cycle.

    The cycle space is spanned by translates of the relator cycles, each of
    length at most the longest relator, so any longer cycle is a sum of
    strictly shorter circuits and hence reducible.
    """
    return max((len(r) for r in p.relators), default=0)


def search_is_complete(ball: CayleyBall, max_len) -> bool:
    """Whether a length-bounded search through the identity is exhaustive."""
    cap = relator_length_cap(ball.presentation)
    return max_len >= cap and 2 * ball.usable_radius >= cap


def irreducible_cycles_at(ball: CayleyBall, max_len=None, *, check_join_route=True,
                          budget=DEFAULT_CIRCUIT_BUDGET):
    """Irreducible cycles through the identity, certified by the span test.

    Candidates are every simple cycle through the identity of length at most
    ``max_len`` that passes the necessary conditions (even length, geodesic
    half-paths); a candidate is kept iff its circuit is not a GF(2) sum of
    strictly shorter circuits of the ball.  Lengths are capped by the longest
    relator, beyond which every cycle is reducible.  When ``check_join_route``
    is set, the join-generated candidate per generator pair is compared
    against the exhaustive search and any discrepancy raises
    StructuralFailure.
    """
    if not ball.certified:
        raise NotCertified("irreducible cycles need a certified ball")
    cap = relator_length_cap(ball.presentation)
    if max_len is None:
        max_len = cap
    max_len = min(max_len, 2 * ball.usable_radius, cap)
    if max_len < 4:
        return []

    candidates = [
        make_cycle(ball, verts)
        for verts in bounded_circuits(ball, max_len, anchors=[0], budget=budget)
    ]
    eis = has_sign_character(ball.presentation)
    if eis:
        candidates = [
            c for c in candidates if _geodesic_half_paths_ok(ball, c.vertices)
        ]

    # basis of strictly shorter circuits, grown length-by-length
    all_short = bounded_circuits(ball, max_len - 1, budget=budget)
    all_short.sort(key=len)
    edge_ids = {}
    basis = GF2Basis()
    pos = 0
    irreducible = []
    for c in sorted(candidates, key=lambda c: (c.length, c.vertices)):
        while pos < len(all_short) and len(all_short[pos]) < c.length:
            verts = all_short[pos]
            vec = _edge_bits(edge_ids, (edge_key(verts[k], verts[(k + 1) % len(verts)])
                                        for k in range(len(verts))))
            basis.add(vec)
            pos += 1
        if not basis.contains(_edge_bits(edge_ids, c.edges)):
            irreducible.append(c)

    _check_unique_per_pair(ball, irreducible)
    if check_join_route:
        _cross_check_joins(ball, irreducible, max_len)
    return irreducible


def _cycle_pair_at_identity(ball, c):
    a, b = c.pair_at(0)
    return tuple(sorted((edge_label(ball, 0, a), edge_label(ball, 0, b))))


def _check_unique_per_pair(ball, cycles):
    seen = {}
    for c in cycles:
        key = _cycle_pair_at_identity(ball, c)
        if key in seen:
            raise StructuralFailure(
                f"two irreducible cycles through the identity share the edge pair {key}: "
                f"{seen[key].vertices} and {c.vertices}"
            )
        seen[key] = c


def _cross_check_joins(ball, irreducible, max_len):
    # A resolved join and an exhaustively-found irreducible cycle through the
    # same identity edges must coincide; a cycle without a resolved join is
    # legal (it happens exactly when the weak order is not a meet-semilattice).
    h = weakorder.orient(ball)
    by_pair = {_cycle_pair_at_identity(ball, c): c for c in irreducible}
    p = ball.presentation
    for s in range(p.rank):
        for t in range(s + 1, p.rank):
            jc = join_cycle(h, s, t)
            found = by_pair.get((s, t))
            if jc is None or found is None:
                continue
            if found.length <= max_len and jc.edges != found.edges:
                raise StructuralFailure(
                    f"join-route cycle and exhaustive-route cycle disagree for pair "
                    f"({p.generators[s]},{p.generators[t]})"
                )


# ---------------------------------------------------------------------------
# joins of canonical generators


def _geodesic_words_between(ball, src, dst):
    """All geodesic label words from src to dst, via the distance gradient."""
    dist = ball.distances_from(src)
    d = dist[dst]
    if d < 0:
        return []
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


def join_cycle(h: HasseBall, s, t):
    """The candidate cycle through the identity edges labeled s and t.

    Built from the join of the two generators and one geodesic through each;
    shortlex-first when several geodesics exist.  None when the join is not
    resolved within the ball or the two paths overlap outside the endpoints.
    """
    ball = h.ball
    vs, vt = ball.nbr[0][s], ball.nbr[0][t]
    z = weakorder.join(h, (vs, vt))
    if isinstance(z, (Unbounded, UnknownWithinRadius, NoJoin)):
        return None
    words = _geodesic_words_between(ball, 0, z)
    via_s = sorted(w for w in words if w[0] == s)
    via_t = sorted(w for w in words if w[0] == t)
    if not via_s or not via_t:
        return None
    ws, wt = via_s[0], via_t[0]
    path_s = _walk_path(ball, 0, ws)
    path_t = _walk_path(ball, 0, wt)
    if set(path_s[1:-1]) & set(path_t[1:-1]):
        return None
    # path_s is e..z, path_t is e..z: loop e -> .. -> z -> .. back along path_t
    verts = tuple(path_s) + tuple(reversed(path_t[1:-1]))
    return make_cycle(ball, verts)


def _walk_path(ball, start, word):
    path = [start]
    v = start
    for s in word:
        v = ball.nbr[v][s]
        if v < 0:
            raise OutOfRadius("walk left the constructed region")
        path.append(v)
    return path


def nu_word(h: HasseBall, s, t):
    """Relator word read around the join cycle of two generators.

    Concatenation of a geodesic word to the join via s with the reversed
    geodesic word via t; reduced by construction.  None-like NotBounded when
    the join is unresolved within the ball.
    """
    if s == t:
        raise PreconditionError("nu word needs two distinct generators")
    ball = h.ball
    vs, vt = ball.nbr[0][s], ball.nbr[0][t]
    z = weakorder.join(h, (vs, vt))
    if isinstance(z, (Unbounded, UnknownWithinRadius, NoJoin)):
        return NotBounded(z)
    words = _geodesic_words_between(ball, 0, z)
    via_s = sorted(w for w in words if w[0] == s)
    via_t = sorted(w for w in words if w[0] == t)
    if not via_s or not via_t:
        raise StructuralFailure("join not reachable through both generator edges")
    return via_s[0] + inverse(via_t[0])


@dataclass(frozen=True)
class NotBounded:
    """The generator pair has no resolved join within the ball."""

    verdict: object = None

    def __bool__(self):
        return False


# ---------------------------------------------------------------------------
# weak intersection and convexity


@dataclass(frozen=True)
class IntersectionReport:
    ok: bool
    witness: tuple | None = None  # (cycle1, cycle2, shared_edges, shared_vertices)

    def __bool__(self):
        return self.ok


def weak_intersection_check(cycles) -> IntersectionReport:
    """Every two distinct cycles may share nothing, one vertex, or one edge."""
    cycles = list(cycles)
    for i, c1 in enumerate(cycles):
        v1 = set(c1.vertices)
        for c2 in cycles[i + 1:]:
            if c1.edges == c2.edges:
                continue  # identical cycles are not a distinct pair
            shared_e = c1.edges & c2.edges
            shared_v = v1 & set(c2.vertices)
            if len(shared_e) > 1:
                return IntersectionReport(False, (c1, c2, tuple(sorted(shared_e)), tuple(sorted(shared_v))))
            if len(shared_e) == 1:
                e = next(iter(shared_e))
                if shared_v != set(e):
                    return IntersectionReport(False, (c1, c2, tuple(shared_e), tuple(sorted(shared_v))))
            elif len(shared_v) > 1:
                return IntersectionReport(False, (c1, c2, (), tuple(sorted(shared_v))))
    return IntersectionReport(True)


def is_convex(c: Cycle, ball: CayleyBall) -> bool:
    """Whether every ball geodesic between cycle vertices stays on the cycle."""
    R = ball.usable_radius
    half = c.length // 2
    if not ball.closed:
        for v in c.vertices:
            if ball.lengths[v] + half > R:
                raise OutOfRadius(
                    "insufficient slack to certify convexity of the cycle"
                )
    for x in c.vertices:
        dist = ball.distances_from(x)
        for y in c.vertices:
            if y <= x:
                continue
            if not _geodesics_stay_inside(ball, dist, y, c.edges):
                return False
    return True


def _geodesics_stay_inside(ball, dist_from_x, y, edge_set):
    """Walk the BFS gradient from y down to x; every gradient edge lies on
    some geodesic, so all of them must belong to the cycle."""
    stack = [y]
    seen = {y}
    while stack:
        v = stack.pop()
        for s, u in enumerate(ball.nbr[v]):
            if u >= 0 and dist_from_x[u] == dist_from_x[v] - 1:
                if edge_key(v, u) not in edge_set:
                    return False
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return True


# ---------------------------------------------------------------------------
# presentation extraction, companion graph, Coxeter type


def extract_presentation(ball: CayleyBall, max_len=None) -> Presentation:
    """Canonical presentation read off the irreducible cycles at the identity.

    One canonical cyc-representative is kept per class.  When the search was
    exhaustive (bounded by the longest relator and inside the ball), absence
    of a cycle for a pair is certified; otherwise an unresolved pair raises
    OutOfRadius rather than guessing.
    """
    cap = relator_length_cap(ball.presentation)
    bound = cap if max_len is None else min(max_len, cap)
    cycles = irreducible_cycles_at(ball, bound)
    p = ball.presentation
    if not search_is_complete(ball, bound):
        h = weakorder.orient(ball)
        resolved_pairs = {_cycle_pair_at_identity(ball, c) for c in cycles}
        for s in range(p.rank):
            for t in range(s + 1, p.rank):
                if (s, t) in resolved_pairs:
                    continue
                vs, vt = ball.nbr[0][s], ball.nbr[0][t]
                z = weakorder.join(h, (vs, vt))
                if isinstance(z, UnknownWithinRadius):
                    raise OutOfRadius(
                        f"pair ({p.generators[s]},{p.generators[t]}) unresolved "
                        f"within radius {ball.usable_radius}; enlarge the ball"
                    )
                # Unbounded or NoJoin, or a join whose cycle proved reducible:
                # certified absence of a relator for this pair
    relators = []
    seen = set()
    for c in sorted(cycles, key=lambda c: (c.length, c.vertices)):
        canon = cyc_canonical(c.nu)
        if canon not in seen:
            seen.add(canon)
            relators.append(canon)
    return make_presentation(p.generators, relators)


def companion_graph(ball: CayleyBall, max_half=None) -> CoxeterGraph:
    """Companion labels: half the length of the irreducible cycle per pair.

    When the search covers every length up to the longest relator, a missing
    cycle is certified missing and the label is infinity; otherwise AtLeast(k)
    records that no cycle of length at most 2k was found.
    """
    cap = relator_length_cap(ball.presentation)
    bound = cap if max_half is None else min(2 * max_half, cap)
    bound = min(bound, 2 * ball.usable_radius)
    cycles = irreducible_cycles_at(ball, bound)
    p = ball.presentation
    entries = {}
    by_pair = {_cycle_pair_at_identity(ball, c): c for c in cycles}
    exact_absence = search_is_complete(ball, bound)
    for s in range(p.rank):
        for t in range(s + 1, p.rank):
            c = by_pair.get((s, t))
            if c is not None:
                entries[(s, t)] = c.length // 2
            elif exact_absence:
                entries[(s, t)] = INF
            else:
                entries[(s, t)] = AtLeast(bound // 2)
    return CoxeterGraph.from_matrix(p.generators, entries)


def coxeter_type(ball: CayleyBall, bound) -> CoxeterGraph:
    """Coxeter-type labels: the order of st, iterated inside the exact region.

    Returns AtLeast(j) when the orbit leaves the verified region after
    certifying that (st)^i is nontrivial for all i < j, and AtLeast(bound+1)
    when every power up to ``bound`` was checked without closing.
    """
    if not ball.certified:
        raise NotCertified("coxeter type needs a certified ball")
    p = ball.presentation
    entries = {}
    for s in range(p.rank):
        for t in range(s + 1, p.rank):
            entries[(s, t)] = _order_of_product(ball, s, t, bound)
    return CoxeterGraph.from_matrix(p.generators, entries)


def _order_of_product(ball, s, t, bound):
    depth = ball.verified_depth
    v = 0
    j = 0
    while True:
        j += 1
        if j > bound:
            return AtLeast(bound + 1)
        for letter in (s, t):
            if not ball.closed and ball.lengths[v] >= depth:
                return AtLeast(j)
            v = ball.nbr[v][letter]
            if v < 0:
                return AtLeast(j)
            if not ball.closed and ball.lengths[v] > depth:
                return AtLeast(j)
        if v == 0:
            return j


@dataclass(frozen=True)
class CoxeterVerdict:
    verdict: str  # "yes" | "no" | "unresolved"
    reason: str
    companion: CoxeterGraph | None = None
    cox_type: CoxeterGraph | None = None

    def __bool__(self):
        return self.verdict == "yes"


def is_coxeter(ball: CayleyBall, bound=None) -> CoxeterVerdict:
    """Compare companion graph and Coxeter type; check join-word letters.

    A decisive mismatch in any entry, or a join word using letters outside
    its generating pair, answers no; agreement on fully resolved data answers
    yes; anything else is unresolved at this radius.
    """
    p = ball.presentation
    if not has_sign_character(p):
        return CoxeterVerdict("no", "no sign character: some relator has odd length")
    if bound is None:
        bound = ball.usable_radius
    comp = companion_graph(ball)
    ctype = coxeter_type(ball, bound)
    h = weakorder.orient(ball)

    unresolved = []
    for s in range(p.rank):
        for t in range(s + 1, p.rank):
            a, b = comp.entry(s, t), ctype.entry(s, t)
            pair = f"({p.generators[s]},{p.generators[t]})"
            if isinstance(a, AtLeast) or isinstance(b, AtLeast) or a == INF or b == INF:
                if not labels_consistent(a, b):
                    return CoxeterVerdict(
                        "no",
                        f"companion {label_str(a)} and order {label_str(b)} differ at {pair}",
                        comp, ctype,
                    )
                if not (a == INF and b == INF):
                    unresolved.append(pair)
                continue
            if a != b:
                return CoxeterVerdict(
                    "no",
                    f"companion {label_str(a)} and order {label_str(b)} differ at {pair}",
                    comp, ctype,
                )
            w = nu_word(h, s, t)
            if isinstance(w, NotBounded):
                unresolved.append(pair)
                continue
            if not set(w) <= {s, t}:
                return CoxeterVerdict(
                    "no",
                    f"join word for {pair} uses letters outside the pair: "
                    f"{p.word_to_str(w)}",
                    comp, ctype,
                )
    if unresolved:
        return CoxeterVerdict(
            "unresolved", "entries not settled at this radius: " + ", ".join(unresolved),
            comp, ctype,
        )
    return CoxeterVerdict("yes", "companion graph equals Coxeter type and all join words are dihedral", comp, ctype)
