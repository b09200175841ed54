import random

import pytest

from conftest import vertex, word_of
from invosys.errors import OutOfRadius, PreconditionError
from invosys.engine import build_ball
from invosys.weakorder import (
    NoJoin,
    NoMeet,
    Unbounded,
    UnknownWithinRadius,
    audit_semilattice,
    descents,
    is_median,
    join,
    leq,
    leq_left,
    meet,
    orient,
    to_dot,
)


# ---------------------------------------------------------------------------
# orientation


def test_orient_honeycomb_no_flat_edges(honeycomb_hasse):
    assert honeycomb_hasse.is_eis_consistent
    assert honeycomb_hasse.flat_edges == []


def test_orient_a5_has_flat_edges(a5_ball):
    h = orient(a5_ball)
    assert not h.is_eis_consistent
    # a specific length-7 element with a flat a-edge
    w = vertex(a5_ball, "cbabcab")
    assert a5_ball.lengths[w] == 7
    wa = a5_ball.nbr[w][a5_ball.presentation.index("a")]
    assert a5_ball.lengths[wa] == 7


def test_orient_edge_at_identity_directed(honeycomb_hasse):
    b = honeycomb_hasse.ball
    s1 = b.nbr[0][0]
    assert s1 in honeycomb_hasse.children[0]


def test_orient_rejects_uncertified(honeycomb):
    b = build_ball(honeycomb, 3)
    b.certified = False
    with pytest.raises(PreconditionError):
        orient(b)


def test_orient_nonidentity_basepoint(honeycomb_ball):
    om = honeycomb_ball.nbr[0][0]
    h = orient(honeycomb_ball, om)
    assert h.dist[om] == 0
    assert h.usable == honeycomb_ball.usable_radius - 1


# ---------------------------------------------------------------------------
# leq


def test_leq_examples(honeycomb_hasse, line_ball):
    b = honeycomb_hasse.ball
    assert leq(honeycomb_hasse, vertex(b, "s1"), vertex(b, "s1 s3 s2"))
    assert leq(honeycomb_hasse, 0, vertex(b, "s2 s1"))
    hl = orient(line_ball)
    assert not leq(hl, vertex(line_ball, "a"), vertex(line_ball, "b"))


def test_leq_out_of_radius(honeycomb_hasse):
    far = max(range(honeycomb_hasse.ball.n_vertices), key=lambda v: honeycomb_hasse.dist[v])
    with pytest.raises(OutOfRadius):
        leq(honeycomb_hasse, 0, far)


def test_leq_left_via_reversal(honeycomb_hasse):
    b = honeycomb_hasse.ball
    v = vertex(b, "s1 s3 s2")
    assert leq_left(honeycomb_hasse, vertex(b, "s2"), v)
    assert not leq_left(honeycomb_hasse, vertex(b, "s3"), v)


# ---------------------------------------------------------------------------
# meet / join


def test_meet_examples(honeycomb_hasse, rec_not_emis_ball):
    b = honeycomb_hasse.ball
    assert meet(honeycomb_hasse, (vertex(b, "s1 s3"), vertex(b, "s1 s2"))) == vertex(b, "s1")
    assert meet(honeycomb_hasse, (vertex(b, "s2 s3"), 0)) == 0
    h = orient(rec_not_emis_ball)
    res = meet(h, (vertex(rec_not_emis_ball, "abc"), vertex(rec_not_emis_ball, "abab")))
    assert isinstance(res, NoMeet)
    assert {word_of(rec_not_emis_ball, v) for v in res.antichain} == {"b", "ab"}


def test_join_examples(honeycomb_hasse, line_ball):
    b = honeycomb_hasse.ball
    j = join(honeycomb_hasse, (vertex(b, "s1"), vertex(b, "s2")))
    assert j == vertex(b, "s1 s3 s2") == vertex(b, "s2 s3 s1")
    x = vertex(b, "s2 s1")
    assert join(honeycomb_hasse, (x, x)) == x
    hl = orient(line_ball)
    res = join(hl, (vertex(line_ball, "a"), vertex(line_ball, "b")))
    assert isinstance(res, UnknownWithinRadius)


def test_join_unbounded_in_finite_group(a5_ball):
    h = orient(a5_ball)
    top = [v for v in range(60) if a5_ball.lengths[v] == 7]
    res = join(h, (top[0], top[1]))
    assert isinstance(res, (Unbounded, NoJoin))


def test_join_nojoin_witness(rec_not_emis_ball):
    h = orient(rec_not_emis_ball)
    a = vertex(rec_not_emis_ball, "a")
    b = vertex(rec_not_emis_ball, "b")
    res = join(h, (a, b))
    assert isinstance(res, NoJoin)
    assert len(res.minimal_upper_bounds) >= 2


def test_meet_lower_bound_properties(honeycomb_hasse):
    h = honeycomb_hasse
    b = h.ball
    rng = random.Random(11)
    verts = [v for v in range(b.n_vertices) if h.dist[v] <= 5]
    for _ in range(60):
        x, y = rng.choice(verts), rng.choice(verts)
        m = meet(h, (x, y))
        assert leq(h, m, x) and leq(h, m, y)
        common = h.lower_set(x) & h.lower_set(y)
        assert all(leq(h, z, m) for z in common)


def test_eis_prefix_length_additivity(honeycomb_hasse):
    # with a sign character, x <= y forces l(x) + d(x, y) = l(y)
    h = honeycomb_hasse
    b = h.ball
    rng = random.Random(5)
    verts = [v for v in range(b.n_vertices) if h.dist[v] <= 4]
    for _ in range(40):
        y = rng.choice(verts)
        for x in h.lower_set(y):
            d = b.distances_from(x)[y]
            assert b.lengths[x] + d == b.lengths[y]


def test_meet_translation_compatibility(honeycomb_ball):
    b = honeycomb_ball
    h0 = orient(b)
    om = vertex(b, "s1")
    hw = orient(b, om)

    def mul(w, x):
        return b.eval_word(b.norms[x], start=w)

    for u_txt, v_txt in (("s2", "s3"), ("s2 s1", "s2 s3"), ("s3 s2", "s3 s1")):
        u, v = vertex(b, u_txt), vertex(b, v_txt)
        assert meet(hw, (mul(om, u), mul(om, v))) == mul(om, meet(h0, (u, v)))


# ---------------------------------------------------------------------------
# audits


def test_audit_honeycomb_passes(honeycomb_hasse):
    assert audit_semilattice(honeycomb_hasse, 5).ok


def test_audit_a5_full_group(a5_ball):
    assert audit_semilattice(orient(a5_ball), 7).ok


def test_audit_failure_with_witness(rec_not_emis_ball):
    res = audit_semilattice(orient(rec_not_emis_ball), 4)
    assert not res.ok
    u, v = res.witness
    assert {word_of(rec_not_emis_ball, u), word_of(rec_not_emis_ball, v)} == {"abc", "abab"}


def test_audit_out_of_radius(honeycomb_hasse):
    with pytest.raises(OutOfRadius):
        audit_semilattice(honeycomb_hasse, 99)


# ---------------------------------------------------------------------------
# descents


def test_descents_identity(honeycomb_hasse):
    dl, dr = descents(honeycomb_hasse, 0)
    assert dl == set() and dr == set()


def test_descents_join_vertex(honeycomb_hasse):
    b = honeycomb_hasse.ball
    p = b.presentation
    dl, dr = descents(honeycomb_hasse, vertex(b, "s1 s3 s2"))
    assert dl == {p.index("s1"), p.index("s2")}
    assert p.index("s2") in dr


# ---------------------------------------------------------------------------
# medians


def test_median_line(line_ball):
    assert is_median(line_ball, 3).ok


def test_median_square(square_ball):
    res = is_median(square_ball, 2)
    assert res.ok and res.triples_checked > 0


def test_median_honeycomb_fails_with_hexagon_triple(honeycomb_ball):
    res = is_median(honeycomb_ball, 3)
    assert not res.ok
    x, y, z, medians = res.witness
    assert medians == ()
    dx = honeycomb_ball.distances_from(x)
    dy = honeycomb_ball.distances_from(y)
    assert dx[y] == dx[z] == dy[z] == 2  # alternate vertices of one hexagon


def test_dot_export(honeycomb_hasse):
    dot = to_dot(honeycomb_hasse, max_level=2)
    assert dot.startswith("digraph")
    assert '"1" -> "s1"' in dot
    assert "dashed" not in dot  # no flat edges on this instance


def test_dot_flat_edges_marked(a5_ball):
    dot = to_dot(orient(a5_ball))
    assert "style=dashed color=red" in dot
