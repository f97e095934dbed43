import os

import hypothesis
import pytest

from relcore import make_domain, make_language

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


WORKSPACE_TEXT = """\
# |A| = 2, γ = {1}
domain 2
gamma g = {1}
cross r1 = g
cross r2 = g g
set Q1 = r1
set Q2 = r2
"""


@pytest.fixture
def binary_language():
    """Γ = ({1}) над A = {0, 1}."""
    return make_language(make_domain(2), [("g", [1])])


@pytest.fixture
def signed_language():
    """Γ = ({1}, {0}) над A = {0, 1}."""
    return make_language(make_domain(2), [("one", [1]), ("zero", [0])])


@pytest.fixture
def full_language():
    """Γ = ({1}, A) над A = {0, 1}."""
    return make_language(make_domain(2), [("g", [1]), ("all", [0, 1])])


@pytest.fixture
def ternary_language():
    """Γ = ({1}, {1, 2}) над A = {0, 1, 2}."""
    return make_language(make_domain(3), [("g", [1]), ("h", [1, 2])])


@pytest.fixture
def workspace_text():
    return WORKSPACE_TEXT


@pytest.fixture
def workspace_file(tmp_path):
    path = tmp_path / "workspace.txt"
    path.write_text(WORKSPACE_TEXT, encoding="utf-8")
    return str(path)
