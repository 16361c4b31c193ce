"""Shared desk-scale test groups.

Session scope keeps the enumeration caches warm; mult counters accumulate
across tests, so budget assertions always measure deltas.
"""

from __future__ import annotations

import pytest

from bbgroups import FieldSpec, MatrixOracle, PermOracle, moebius_oracle


def make_s3() -> PermOracle:
    return PermOracle(3, [[[1, 2]], [[1, 2, 3]]])


def make_s4() -> PermOracle:
    return PermOracle(4, [[[1, 2]], [[1, 2, 3, 4]]])


def make_d8() -> PermOracle:
    return PermOracle(4, [[[1, 2, 3, 4]], [[2, 4]]])


def make_a5() -> PermOracle:
    return PermOracle(5, [[[1, 2, 3, 4, 5]], [[1, 2, 3]]])


def make_cyclic(n: int) -> PermOracle:
    return PermOracle(n, [[list(range(1, n + 1))]])


def make_sl2_3() -> MatrixOracle:
    return MatrixOracle(FieldSpec(3), 2, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]])


def make_sl2_8() -> MatrixOracle:
    f = FieldSpec(2, 3)
    w = f.primitive
    return MatrixOracle(
        f, 2, [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[w, 0], [0, f.inv(w)]]]
    )


@pytest.fixture(scope="session")
def s3() -> PermOracle:
    return make_s3()


@pytest.fixture(scope="session")
def s4() -> PermOracle:
    return make_s4()


@pytest.fixture(scope="session")
def d8() -> PermOracle:
    return make_d8()


@pytest.fixture(scope="session")
def a5() -> PermOracle:
    return make_a5()


@pytest.fixture(scope="session")
def sl2_3() -> MatrixOracle:
    return make_sl2_3()


@pytest.fixture(scope="session")
def sl2_8() -> MatrixOracle:
    return make_sl2_8()


@pytest.fixture(scope="session")
def moebius2() -> PermOracle:
    return moebius_oracle(2)


@pytest.fixture(scope="session")
def moebius3() -> PermOracle:
    return moebius_oracle(3)
