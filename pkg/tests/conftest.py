import pytest

from civar.resolve import RingSpec, present_module, residue_field, free_module, syzygy_module


@pytest.fixture(scope="session")
def r1():
    return RingSpec(101, ["x", "y"], ["x^2", "y^2"])


@pytest.fixture(scope="session")
def r2():
    return RingSpec(101, ["x"], ["x^2"])


@pytest.fixture(scope="session")
def r3():
    return RingSpec(101, ["x", "y", "z"], ["x^2", "y^2", "z^2"])


@pytest.fixture(scope="session")
def r4():
    # dimension 1: two variables, one quadric
    return RingSpec(101, ["x", "y"], ["x^2"])


@pytest.fixture(scope="session")
def corpus(r1, r2, r3, r4):
    """The shared desk-scale module corpus.  Session-scoped so resolution
    caches accumulate across test files."""
    mods = [
        ("R1 k", residue_field(r1)),
        ("R1 free", free_module(r1, (0, 1))),
        ("R1 A/(x)", present_module(r1, (0,), [["x"]])),
        ("R1 A/(y)", present_module(r1, (0,), [["y"]])),
        ("R1 A/(x+y)", present_module(r1, (0,), [["x+y"]])),
        ("R1 syz1(k)", syzygy_module(residue_field(r1), 1)),
        ("R2 k", residue_field(r2)),
        ("R2 free", free_module(r2, (0,))),
        ("R3 k", residue_field(r3)),
        ("R3 A/(x)", present_module(r3, (0,), [["x"]])),
        ("R3 A/(x+y)", present_module(r3, (0,), [["x+y"]])),
        ("R4 k", residue_field(r4)),
        ("R4 A/(y)", present_module(r4, (0,), [["y"]])),
    ]
    return mods
