import pytest

from hardy_annulus import AnnulusGeometry, SeriesControl


@pytest.fixture
def geom():
    return AnnulusGeometry(0.5)


@pytest.fixture
def ctl():
    return SeriesControl()
