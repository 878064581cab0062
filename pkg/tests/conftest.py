import pytest

from giantnat import BIGNAT, BIJ, TREE

ALL_REPS = [
    pytest.param(BIGNAT, id="bignat"),
    pytest.param(BIJ, id="bij"),
    pytest.param(TREE, id="tree"),
]


@pytest.fixture(params=ALL_REPS)
def rep(request):
    return request.param
