import random
from fractions import Fraction

import pytest
from hypothesis import settings

from p2tensor.chern import ChernCharacter
from p2tensor.exceptional import delta, is_exceptional_character

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def random_bundle_character(rng: random.Random, max_rank: int = 4, max_disc: int = 20,
                            max_abs_slope: int = 3, near_curve: bool = False) -> ChernCharacter:
    """Character of a stable bundle: rank >= 2 above the curve, or exceptional.

    ``near_curve`` draws the discriminant within about 2 of the stability
    curve, where special cohomology lives.
    """
    while True:
        r = rng.randint(1, max_rank)
        c1 = rng.randint(-max_abs_slope * r, max_abs_slope * r)
        if near_curve:
            # Delta = c2/r - c1^2/(2 r^2)
            c2_min = int((delta(Fraction(c1, r)) + Fraction(c1 * c1, 2 * r * r)) * r)
            c2 = rng.randint(c2_min - 1, c2_min + 2 * r)
        else:
            c2 = rng.randint(-3 * max_disc, 3 * max_disc)
        v = ChernCharacter(r, c1, Fraction(c1 * c1, 2) - c2)
        if v.delta > max_disc:
            continue
        if is_exceptional_character(v) or (r > 1 and v.delta >= delta(v.mu)):
            return v


@pytest.fixture
def rng():
    return random.Random(20240611)


V = ChernCharacter(4, 4, -7)          # (r, mu, Delta) = (4, 1, 9/4)
W_SPECIAL = ChernCharacter(8, 1, Fraction(-17, 2))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
