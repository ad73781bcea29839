import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hurwitzkit import named_group, parse_entries, validate  # noqa: E402

REF_ENTRIES = "(1 2),(2 3),(2 3),(1 2)"
REF_A12_IMAGE = ("(2 3)", "(1 3)", "(2 3)", "(1 2)")

SMALL_GROUPS = ["Z2", "Z3", "Z4", "Z5", "Z6", "V4", "S3", "D4", "Q8"]


@pytest.fixture(scope="session")
def s3():
    return named_group("S3")


@pytest.fixture(scope="session")
def ref_datum(s3):
    return validate(parse_entries(REF_ENTRIES, s3), s3)


def random_data(G, n, count, seed=0):
    """``count`` valid n-data of ``G`` drawn by rejection sampling."""
    from hurwitzkit.datum import is_valid

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ids = [rng.randrange(1, G.order()) for _ in range(n - 1)]
        prod = 0
        for k in ids:
            prod = G.mul(prod, k)
        ids.append(G.inv(prod))
        if is_valid(ids, G):
            out.append(validate(ids, G))
    return out


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
