"""Shared pytest configuration and hypothesis strategies."""

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lag2.core.cf import PeriodicCF

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile(
    "thorough",
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


quotients = st.integers(min_value=1, max_value=5)


@st.composite
def periodic_cfs(draw, max_period=6, max_preperiod=3):
    """Eventually periodic continued fractions with small partial quotients."""
    a0 = draw(st.integers(min_value=-3, max_value=5))
    preperiod = draw(st.lists(quotients, max_size=max_preperiod))
    period = draw(st.lists(quotients, min_size=1, max_size=max_period))
    return PeriodicCF(a0, tuple(preperiod), tuple(period))
