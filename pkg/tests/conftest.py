import pytest

from tensorgraphs import build_colored, build_stranded


@pytest.fixture
def dipole():
    """Two vertices joined by one edge of each color."""
    return build_colored(3, ["w1"], ["b1"], [(c, "w1", "b1") for c in range(4)])


def make_quad():
    edges = []
    for c in (0, 1):
        edges += [(c, "w1", "b1"), (c, "w2", "b2")]
    for c in (2, 3):
        edges += [(c, "w1", "b2"), (c, "w2", "b1")]
    return build_colored(3, ["w1", "w2"], ["b1", "b2"], edges)


@pytest.fixture
def quad():
    """n=2: colors 0,1 parallel, colors 2,3 crossed."""
    return make_quad()


def make_genus_one():
    """n=3 with matchings id, id, (0 1 2), (0 2 1).

    The {1,2,3}-bubble of this graph is the standard genus-1 example:
    every color pair inside it composes to a single 3-cycle.
    """
    sigma = {0: [0, 1, 2], 1: [0, 1, 2], 2: [1, 2, 0], 3: [2, 0, 1]}
    edges = [
        (c, f"w{i}", f"b{sigma[c][i]}")
        for c in range(4)
        for i in range(3)
    ]
    whites = [f"w{i}" for i in range(3)]
    blacks = [f"b{i}" for i in range(3)]
    return build_colored(3, whites, blacks, edges)


@pytest.fixture
def genus_one_graph():
    return make_genus_one()


@pytest.fixture
def tadpole_a():
    """One vertex, edges pairing cyclic neighbors: planar, not colorable."""
    return build_stranded(
        3,
        [("v", ["h0", "h1", "h2", "h3"])],
        [(("h0", "h1"), None), (("h2", "h3"), None)],
    )


@pytest.fixture
def tadpole_b():
    """One vertex, edges pairing opposite corners: not multi-orientable."""
    return build_stranded(
        3,
        [("v", ["h0", "h1", "h2", "h3"])],
        [(("h0", "h2"), None), (("h1", "h3"), None)],
    )
