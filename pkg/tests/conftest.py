import pytest

from polyproj.polyhedron import HSystem


def system(names, rows):
    return HSystem.from_rows(tuple(names.split()) if isinstance(names, str) else names, rows)


@pytest.fixture
def square():
    return system("x y", [[1, 0, 1], [-1, 0, 0], [0, 1, 1], [0, -1, 0]])


@pytest.fixture
def delta2():
    return system("x y", [[-1, 0, 0], [0, -1, 0], [1, 1, 1]])


@pytest.fixture
def segment():
    return system("x", [[1, 1], [-1, 0]])


@pytest.fixture
def six_rows():
    return system("x1 x2 x3 x4", [
        [12, 1, -3, 1, 1],
        [-36, -2, 18, -11, -2],
        [-18, -1, 9, -7, -1],
        [45, 4, -18, 13, 4],
        [-1, 0, 0, 0, 0],
        [0, -1, 0, 0, 0],
    ])
