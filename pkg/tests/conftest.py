from fractions import Fraction

import pytest
from hypothesis import strategies as st

from recrel.measure import AtomicMeasure

F = Fraction


@pytest.fixture
def mu4():
    return AtomicMeasure([(2, 4), (3, 2), (1, 1)], [F(1, 2), F(1, 3), F(1, 6)])


@pytest.fixture
def nu4():
    return AtomicMeasure([(2, 4), (3, 2), (1, 1)], [F(1, 3), F(1, 3), F(1, 3)])


grid_coord = st.builds(F, st.integers(-4, 4), st.sampled_from([1, 2, 3]))
positive_coord = st.builds(F, st.integers(1, 5), st.sampled_from([1, 2, 3]))


@st.composite
def measures(draw, coord=grid_coord, max_atoms=6):
    atoms = draw(st.lists(st.tuples(coord, coord), min_size=1, max_size=max_atoms, unique=True))
    weights = draw(st.lists(st.integers(1, 9), min_size=len(atoms), max_size=len(atoms)))
    return AtomicMeasure(atoms, weights, normalize=True)


_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
