import random
from math import gcd
from fractions import Fraction

import pytest

from wittforge.abelian import FiniteAbelianGroup
from wittforge.qform import from_gram, is_nondegenerate

CORPUS_SEED = 20240613
CORPUS_SIZE = 200
_CYCLIC = (2, 3, 4, 5, 6, 7, 8, 9, 12, 16)


def _random_form(rng: random.Random):
    """Random non-degenerate Gram form on a product of cyclic groups of order <= 64."""
    while True:
        orders = []
        total = 1
        for _ in range(rng.randint(1, 3)):
            n = rng.choice(_CYCLIC)
            if total * n > 64:
                break
            orders.append(n)
            total *= n
        if not orders:
            continue
        g = FiniteAbelianGroup(tuple(orders))
        # q(e_i) = a / (2 n_i) with a n_i even, b(e_i, e_j) = c / gcd(n_i, n_j)
        qdiag = []
        for n in orders:
            a = rng.randrange(2 * n)
            if (a * n) % 2:
                a = (a + 1) % (2 * n)
            qdiag.append(Fraction(a, 2 * n))
        boff = {}
        for i in range(len(orders)):
            for j in range(i + 1, len(orders)):
                d = gcd(orders[i], orders[j])
                boff[(i, j)] = Fraction(rng.randrange(d), d)
        pm = from_gram(g, qdiag, boff)
        if is_nondegenerate(pm):
            return pm


def metric_corpus(size=CORPUS_SIZE, seed=CORPUS_SEED):
    rng = random.Random(seed)
    return [_random_form(rng) for _ in range(size)]


@pytest.fixture(scope="session")
def corpus():
    return metric_corpus()


# -- acceptance summary ------------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, args, _ in getattr(report, "criterion", ()):
        n, title = args
        ok = _CRITERIA.get(n, (title, True))[1] and report.passed
        _CRITERIA[n] = (title, ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criterion = [(m.name, m.args, m.kwargs) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
