import pytest

from twistcenter.cartan import build_type


ALL_TYPES = [
    ("A2n_2", 1),
    ("A2n_2", 2),
    ("A2n_2", 3),
    ("A2nm1_2", 3),
    ("A2nm1_2", 4),
    ("Dnp1_2", 2),
    ("Dnp1_2", 3),
    ("E6_2", 4),
    ("D4_3", 2),
]


@pytest.fixture(params=ALL_TYPES, ids=lambda p: f"{p[0]}-n{p[1]}")
def any_type(request):
    return build_type(*request.param)
