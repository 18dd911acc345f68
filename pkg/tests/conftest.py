import math

import pytest

from barnopt.geometry import HouseParams

# The three case-study houses (dimensions in meters, slope in degrees).
HOUSE_SPECS = {
    "A": (19.9, 15.75, 5.0, 35.0),
    "B": (12.4, 20.5, 4.1, 35.0),
    "C": (8.0, 13.5, 5.8, 40.0),
}


def make_house(name: str) -> HouseParams:
    w, l, h, alpha_deg = HOUSE_SPECS[name]
    return HouseParams(width=w, length=l, height=h, alpha=math.radians(alpha_deg))


@pytest.fixture
def houses() -> dict[str, HouseParams]:
    return {name: make_house(name) for name in HOUSE_SPECS}
