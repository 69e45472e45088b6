import pytest

from toricreal import (
    Fan,
    ToricVariety,
    from_primitive_relations,
    projective_bundle,
    secondary_fan,
)

# Fano fourfold number 33 in Batyrev's classification of smooth toric
# Fano fourfolds of Picard rank three: v1+v7=0, v2+v3+v4=v1,
# v4+v5+v6=2v1, v5+v6+v7=v2+v3, v1+v2+v3=v5+v6.
BATYREV33_RELATIONS = (
    (1, 0, 0, 0, 0, 0, 1),
    (-1, 1, 1, 1, 0, 0, 0),
    (-2, 0, 0, 1, 1, 1, 0),
    (0, -1, -1, 0, 1, 1, 1),
    (1, 1, 1, 0, -1, -1, 0),
)


@pytest.fixture(scope="session")
def p1():
    return ToricVariety(Fan([(1,), (-1,)], [{0}, {1}]))


@pytest.fixture(scope="session")
def p2():
    return ToricVariety(Fan([(1, 0), (0, 1), (-1, -1)], [{0, 1}, {0, 2}, {1, 2}]))


@pytest.fixture(scope="session")
def p1xp1():
    return ToricVariety(
        Fan(
            [(1, 0), (-1, 0), (0, 1), (0, -1)],
            [{0, 2}, {0, 3}, {1, 2}, {1, 3}],
        )
    )


@pytest.fixture(scope="session")
def hirzebruch1(p1):
    return projective_bundle(p1, [(0, 0), (0, 1)])


@pytest.fixture(scope="session")
def hirzebruch2(p1):
    return projective_bundle(p1, [(0, 0), (0, 2)])


@pytest.fixture(scope="session")
def bundle011(p2):
    """P(O + O(1) + O(1)) over the projective plane."""
    return projective_bundle(p2, [(0, 0, 0), (0, 0, 1), (0, 0, 1)])


@pytest.fixture(scope="session")
def batyrev33():
    return from_primitive_relations(BATYREV33_RELATIONS)


@pytest.fixture(scope="session")
def batyrev33_chambers(batyrev33):
    return secondary_fan(batyrev33)
