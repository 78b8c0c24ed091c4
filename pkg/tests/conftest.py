import random
from fractions import Fraction

import pytest

from biperiodic import make_params

# Hand-picked parameters: classical Fibonacci, a generic integer pair, a
# negative discriminant (D = -3), a perfect-square discriminant (D = 9/4)
# and a pair with non-integer, opposite-sign entries.
NAMED_PAIRS = [
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(3)),
    (Fraction(1), Fraction(-1)),
    (Fraction(1), Fraction(1, 2)),
    (Fraction(-7, 9), Fraction(5, 8)),
]


def random_pairs(count, seed):
    """Nonzero rationals with numerator and denominator drawn from [-9, 9]."""
    rng = random.Random(seed)
    digits = [d for d in range(-9, 10) if d != 0]
    return [
        tuple(Fraction(rng.choice(digits), rng.choice(digits)) for _ in range(2))
        for _ in range(count)
    ]


@pytest.fixture(params=NAMED_PAIRS, ids=lambda ab: f"a={ab[0]},b={ab[1]}")
def params(request):
    return make_params(*request.param)


_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
