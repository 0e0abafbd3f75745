"""Shared fixtures; the expensive algebra tables are built once per run."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from heckecells.afun import ExactA, HSweep, PredictedA, exact_a_table
from heckecells.cells import DSet
from heckecells.coxeter import CoxeterSystem, WeightFunction
from heckecells.hecke import HeckeAlgebra


class Fixture:
    def __init__(self, m_rs, m_st, weights, limit=16):
        self.system = CoxeterSystem.rank3(m_rs, m_st, 2, ball_radius_limit=limit)
        self.weights = WeightFunction(weights)
        self.algebra = HeckeAlgebra(self.system, self.weights)
        self._dset = None
        self._sweeps = {}

    @property
    def dset(self):
        if self._dset is None:
            self._dset = DSet(self.system, self.weights)
        return self._dset

    @property
    def a_pred(self):
        return PredictedA(self.dset)

    def sweep(self, radius):
        key = radius
        if key not in self._sweeps:
            best = max((r for r in self._sweeps if r >= radius), default=None)
            if best is not None:
                return self._sweeps[best]
            self._sweeps[key] = HSweep(self.algebra, radius, self.a_pred)
        return self._sweeps[key]

    def e(self, word):
        return self.system.element(word)


@pytest.fixture(scope="session")
def fix245():
    """(2,4,5) with weights (5,1,1): the worked-example system."""
    return Fixture(4, 5, (5, 1, 1))


@pytest.fixture(scope="session")
def fix246():
    """(2,4,6) with weights (2,1,1): the even-bond arrangement system."""
    return Fixture(4, 6, (2, 1, 1))


@pytest.fixture(scope="session")
def fix246_f():
    """(2,4,6) with weights (14,1,8): the far coincidence point."""
    return Fixture(4, 6, (14, 1, 8))


class SphericalFixture:
    def __init__(self):
        self.system = CoxeterSystem.rank3(3, 3, 2, ball_radius_limit=12)
        self.weights = WeightFunction((1, 1, 1))
        self.algebra = HeckeAlgebra(self.system, self.weights)
        self._table = None

    @property
    def a_table(self):
        if self._table is None:
            self._table = exact_a_table(self.algebra)
        return self._table

    @property
    def a_exact(self):
        return ExactA(self.a_table)

    def e(self, word):
        return self.system.element(word)


@pytest.fixture(scope="session")
def spherical233():
    """The finite (2,3,3) system at equal weights (24 elements)."""
    return SphericalFixture()
