import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import pytest

from config import BANCHOFF_FAN, DATA_DIR
from cover_lift import lift
from fan import base_diagram, parse_fan
from monodromy import cyclic_rep, rep_from_texts

BANCHOFF_N2 = os.path.join(DATA_DIR, 'banchoff_n2.diagram')


@pytest.fixture(scope="session")
def fan_text():
    with open(BANCHOFF_FAN, encoding='utf-8') as handle:
        return handle.read()


@pytest.fixture(scope="session")
def fan(fan_text):
    return parse_fan(fan_text)


@pytest.fixture(scope="session")
def base(fan):
    return base_diagram(fan)


@pytest.fixture(scope="session")
def cyclic_lift(fan):
    """Factory for the lift along m -> (1 2 ... n), c -> m^3."""
    cache = {}

    def make(n):
        if n not in cache:
            cache[n] = lift(fan, cyclic_rep(fan, n))
        return cache[n]

    return make


@pytest.fixture(scope="session")
def irregular_lift(fan):
    return lift(fan, rep_from_texts(fan, {'m': '(1 2)', 'c': '(2 3)'}, 3))
