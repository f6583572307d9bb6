import logging
import os

import hypothesis
import pytest

from homyd.core import catalog
from homyd.core.exact import QQ

hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None, derandomize=True)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture
def kz2():
    return catalog.kz2(QQ)


@pytest.fixture
def taft_bundle():
    return catalog.taft_radford_bundle(QQ, 2)


@pytest.fixture
def dual_bundle():
    return catalog.dual_numbers_radford_bundle(QQ, 2)


@pytest.fixture(autouse=True)
def _reset_homyd_logger():
    """The CLI attaches a stderr handler; drop it so captured streams can close."""
    yield
    logger = logging.getLogger("homyd")
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
    logger.addHandler(logging.NullHandler())
    logger.setLevel(logging.NOTSET)
    logger.propagate = True
