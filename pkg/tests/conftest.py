import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from schurcyclic.ringcore import INFINITE_CYCLIC, RATIONAL, FiniteCyclic, RingElement

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-12, max_value=12)
rational_exps = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))


@st.composite
def contexts(draw):
    kind = draw(st.sampled_from(["finite", "Z", "Q"]))
    if kind == "finite":
        return FiniteCyclic(draw(st.integers(1, 16)))
    return INFINITE_CYCLIC if kind == "Z" else RATIONAL


def elements_in(ctx, max_size=6):
    exps = rational_exps if ctx.kind == "Q" else small_ints
    return st.dictionaries(exps, coeffs, max_size=max_size).map(lambda d: RingElement(ctx, d))


def random_element(rng: random.Random, ctx, size=None, coeff_range=4):
    size = rng.randint(0, 6) if size is None else size
    terms = {}
    for _ in range(size):
        if ctx.kind == "Q":
            e = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
        elif ctx.kind == "Z":
            e = rng.randint(-12, 12)
        else:
            e = rng.randrange(ctx.n)
        terms[e] = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
    return RingElement(ctx, terms)


def random_context(rng: random.Random):
    k = rng.randrange(3)
    if k == 0:
        return FiniteCyclic(rng.randint(1, 16))
    return INFINITE_CYCLIC if k == 1 else RATIONAL


@pytest.fixture
def rng():
    return random.Random(20261016)


# -- acceptance summary ------------------------------------------------------

CRITERIA = {
    1: "prime-order enumeration matches orbit rings",
    2: "composite enumeration contains the standard rings",
    3: "window search over Z leaves only the two cores",
    4: "operator-algebra identities",
    5: "span closure on orbit rings",
    6: "decomposition round trip",
    7: "structure-constant conservation",
    8: "rational classifier patterns and witnesses",
}
_criterion_of: dict = {}
_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    k = _criterion_of.get(report.nodeid)
    if k is None:
        return
    ok = _outcomes.setdefault(k, [0, 0])
    if report.failed:
        ok[1] += 1
    elif report.when == "call" and report.passed:
        ok[0] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criterion_of:
        return
    terminalreporter.section("acceptance criteria")
    for k, text in CRITERIA.items():
        passed, failed = _outcomes.get(k, (0, 0))
        if passed == failed == 0:
            status = "NOT RUN"
        else:
            status = "PASS" if failed == 0 else "FAIL"
        terminalreporter.write_line(f"criterion {k} {status}: {text} ({passed} passed, {failed} failed)")
