"""Shared instances; session-scoped so expensive balls are built once."""

import pytest

from invosys import (
    ball_from_table,
    build_ball,
    make_presentation,
    orient,
    todd_coxeter,
)


@pytest.fixture(scope="session")
def honeycomb():
    return make_presentation(["s1", "s2", "s3"], ["(s1 s2 s3)^2"])


@pytest.fixture(scope="session")
def honeycomb_ball(honeycomb):
    # workspace 13 verifies relator closure to depth 10, enough to certify
    # that no product of two generators closes up to the sixth power
    return build_ball(honeycomb, 6, workspace_radius=13)


@pytest.fixture(scope="session")
def honeycomb_hasse(honeycomb_ball):
    return orient(honeycomb_ball)


@pytest.fixture(scope="session")
def a2_tilde():
    return make_presentation(["s1", "s2", "s3"], ["(s1 s2)^3", "(s1 s3)^3", "(s2 s3)^3"])


@pytest.fixture(scope="session")
def a2_tilde_ball(a2_tilde):
    return build_ball(a2_tilde, 6, workspace_radius=13)


@pytest.fixture(scope="session")
def a5():
    return make_presentation(
        ["a", "b", "c"], ["(ab)^5", "(bc)^3", "(ac)^2", "cbabc(ab)^2c(ab)^2a"]
    )


@pytest.fixture(scope="session")
def a5_table(a5):
    return todd_coxeter(a5)


@pytest.fixture(scope="session")
def a5_ball(a5_table):
    return ball_from_table(a5_table)


@pytest.fixture(scope="session")
def rec_not_emis():
    return make_presentation(["a", "b", "c", "d"], ["abcdcb", "(ad)^2", "(ac)^2", "(bd)^2"])


@pytest.fixture(scope="session")
def rec_not_emis_ball(rec_not_emis):
    return build_ball(rec_not_emis, 5)


@pytest.fixture(scope="session")
def rank4_bridge():
    return make_presentation(["a", "b", "c", "d"], ["(abc)^2", "(ad)^2"])


@pytest.fixture(scope="session")
def rank4_bridge_ball(rank4_bridge):
    return build_ball(rank4_bridge, 6, workspace_radius=10)


@pytest.fixture(scope="session")
def rank4_companion_ball():
    p = make_presentation(["a", "b", "c", "d"], ["(ab)^3", "(bc)^3", "(ac)^3", "(ad)^2"])
    return build_ball(p, 6, workspace_radius=10)


@pytest.fixture(scope="session")
def line_ball():
    return build_ball(make_presentation(["a", "b"], []), 6)


@pytest.fixture(scope="session")
def square_ball():
    return build_ball(make_presentation(["a", "b"], ["(ab)^2"]), 4)


@pytest.fixture(scope="session")
def hexagon_ball():
    return build_ball(make_presentation(["a", "b"], ["(ab)^3"]), 4)


@pytest.fixture(scope="session")
def s4_ball():
    return build_ball(make_presentation(["a", "b", "c"], ["(ab)^3", "(bc)^3", "(ac)^2"]), 4)


def vertex(ball, text):
    """Resolve a word string to its ball vertex."""
    return ball.eval_word(ball.presentation.word_from_str(text))


def word_of(ball, v):
    return ball.presentation.word_to_str(ball.norms[v])
